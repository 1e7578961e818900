#pragma once

// Data-parallel inner loops of the binary (F_2^n -> F_2^m) paths. Every kernel
// has a scalar reference version; vector variants are picked once at runtime
// and must agree with the scalar ones bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace imbalance::kernels {

struct ColumnMoments {
    std::uint32_t max_abs = 0;       // max |w|
    std::uint64_t sum_squares = 0;   // sum w^2
    unsigned __int128 sum_fourth = 0;  // sum w^4
};

struct KernelTable {
    const char* name;
    /// In-place unnormalized Walsh-Hadamard transform, n a power of two.
    void (*fwht_i32)(std::int32_t* data, std::size_t n);
    /// out[x] = values[x ^ a] ^ values[x]; n a power of two and a < n.
    void (*xor_derivative_u32)(const std::uint32_t* values, std::size_t n, std::uint32_t a, std::uint32_t* out);
    /// out[x] = (-1)^{popcount(beta & values[x])}.
    void (*parity_signs_i32)(const std::uint32_t* values, std::size_t n, std::uint32_t beta, std::int32_t* out);
    ColumnMoments (*column_moments_i32)(const std::int32_t* data, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
/// Null when the AVX2 variants were not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// The table used by the library. AVX2 when available unless the environment
/// variable IMBALANCE_SIMD is set to "scalar".
const KernelTable& active() noexcept;

void fwht(std::span<std::int32_t> data);
void xor_derivative(std::span<const std::uint32_t> values, std::uint32_t a, std::span<std::uint32_t> out);
void parity_signs(std::span<const std::uint32_t> values, std::uint32_t beta, std::span<std::int32_t> out);
ColumnMoments column_moments(std::span<const std::int32_t> data);

}  // namespace imbalance::kernels
