#include <cstdlib>
#include <cstring>

#include "imbalance/errors.hpp"
#include "kernels_internal.hpp"

namespace imbalance::kernels {

const KernelTable* avx2_kernels() noexcept {
#if defined(IMBALANCE_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2::table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        const char* forced = std::getenv("IMBALANCE_SIMD");
        if (forced && std::strcmp(forced, "scalar") == 0) return scalar_kernels();
        if (const KernelTable* v = avx2_kernels()) return *v;
        return scalar_kernels();
    }();
    return chosen;
}

void fwht(std::span<std::int32_t> data) {
    if (data.size() & (data.size() - 1)) fail(ErrorKind::Domain, "Walsh-Hadamard length must be a power of two");
    active().fwht_i32(data.data(), data.size());
}

void xor_derivative(std::span<const std::uint32_t> values, std::uint32_t a, std::span<std::uint32_t> out) {
    if (values.size() & (values.size() - 1) || a >= values.size() || out.size() < values.size())
        fail(ErrorKind::Domain, "xor derivative needs a power-of-two table and a < n");
    active().xor_derivative_u32(values.data(), values.size(), a, out.data());
}

void parity_signs(std::span<const std::uint32_t> values, std::uint32_t beta, std::span<std::int32_t> out) {
    if (out.size() < values.size()) fail(ErrorKind::Domain, "output too short");
    active().parity_signs_i32(values.data(), values.size(), beta, out.data());
}

ColumnMoments column_moments(std::span<const std::int32_t> data) {
    return active().column_moments_i32(data.data(), data.size());
}

}  // namespace imbalance::kernels
