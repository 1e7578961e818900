#include "kernels_internal.hpp"

#include <bit>
#include <cstdlib>

namespace imbalance::kernels {

namespace scalar {

void fwht_i32(std::int32_t* data, std::size_t n) {
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                std::int32_t u = data[j];
                std::int32_t v = data[j + h];
                data[j] = u + v;
                data[j + h] = u - v;
            }
}

void xor_derivative_u32(const std::uint32_t* values, std::size_t n, std::uint32_t a, std::uint32_t* out) {
    for (std::size_t x = 0; x < n; ++x) out[x] = values[x ^ a] ^ values[x];
}

void parity_signs_i32(const std::uint32_t* values, std::size_t n, std::uint32_t beta, std::int32_t* out) {
    for (std::size_t x = 0; x < n; ++x) out[x] = (std::popcount(values[x] & beta) & 1) ? -1 : 1;
}

ColumnMoments column_moments_i32(const std::int32_t* data, std::size_t n) {
    ColumnMoments m;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t w = data[i];
        std::uint64_t a = static_cast<std::uint64_t>(w < 0 ? -w : w);
        if (a > m.max_abs) m.max_abs = static_cast<std::uint32_t>(a);
        std::uint64_t sq = a * a;
        m.sum_squares += sq;
        m.sum_fourth += static_cast<unsigned __int128>(sq) * sq;
    }
    return m;
}

}  // namespace scalar

const KernelTable& scalar_kernels() noexcept {
    static const KernelTable table{"scalar", scalar::fwht_i32, scalar::xor_derivative_u32, scalar::parity_signs_i32,
                                   scalar::column_moments_i32};
    return table;
}

}  // namespace imbalance::kernels
