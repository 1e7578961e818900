#pragma once

#include "imbalance/kernels.hpp"

namespace imbalance::kernels {

namespace scalar {
void fwht_i32(std::int32_t* data, std::size_t n);
void xor_derivative_u32(const std::uint32_t* values, std::size_t n, std::uint32_t a, std::uint32_t* out);
void parity_signs_i32(const std::uint32_t* values, std::size_t n, std::uint32_t beta, std::int32_t* out);
ColumnMoments column_moments_i32(const std::int32_t* data, std::size_t n);
}  // namespace scalar

#if defined(IMBALANCE_HAVE_AVX2)
namespace avx2 {
const KernelTable& table() noexcept;
}  // namespace avx2
#endif

}  // namespace imbalance::kernels
