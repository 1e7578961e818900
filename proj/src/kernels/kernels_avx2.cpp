// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace imbalance::kernels::avx2 {

namespace {

inline __m256i butterfly_in_register(__m256i v) {
    // h = 1: pairs (x0, x1) -> (x0 + x1, x0 - x1)
    __m256i s = _mm256_shuffle_epi32(v, _MM_SHUFFLE(2, 3, 0, 1));
    v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xAA);
    // h = 2
    s = _mm256_shuffle_epi32(v, _MM_SHUFFLE(1, 0, 3, 2));
    v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xCC);
    // h = 4: across the 128-bit halves
    s = _mm256_permute2x128_si256(v, v, 0x01);
    v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xF0);
    return v;
}

void fwht_i32(std::int32_t* data, std::size_t n) {
    if (n < 8) {
        scalar::fwht_i32(data, n);
        return;
    }
    for (std::size_t i = 0; i < n; i += 8) {
        auto* p = reinterpret_cast<__m256i*>(data + i);
        _mm256_storeu_si256(p, butterfly_in_register(_mm256_loadu_si256(p)));
    }
    for (std::size_t h = 8; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += h << 1)
            for (std::size_t j = i; j < i + h; j += 8) {
                auto* pu = reinterpret_cast<__m256i*>(data + j);
                auto* pv = reinterpret_cast<__m256i*>(data + j + h);
                __m256i u = _mm256_loadu_si256(pu);
                __m256i v = _mm256_loadu_si256(pv);
                _mm256_storeu_si256(pu, _mm256_add_epi32(u, v));
                _mm256_storeu_si256(pv, _mm256_sub_epi32(u, v));
            }
}

void xor_derivative_u32(const std::uint32_t* values, std::size_t n, std::uint32_t a, std::uint32_t* out) {
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i shift = _mm256_set1_epi32(static_cast<int>(a));
    const auto* base = reinterpret_cast<const int*>(values);
    std::size_t x = 0;
    for (; x + 8 <= n; x += 8) {
        __m256i idx = _mm256_xor_si256(_mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(x)), lane), shift);
        __m256i moved = _mm256_i32gather_epi32(base, idx, 4);
        __m256i here = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + x));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_xor_si256(moved, here));
    }
    for (; x < n; ++x) out[x] = values[x ^ a] ^ values[x];
}

void parity_signs_i32(const std::uint32_t* values, std::size_t n, std::uint32_t beta, std::int32_t* out) {
    const __m256i mask = _mm256_set1_epi32(static_cast<int>(beta));
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t x = 0;
    for (; x + 8 <= n; x += 8) {
        __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + x)), mask);
        v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 16));
        v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 8));
        v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 4));
        v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 2));
        v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 1));
        __m256i bit = _mm256_and_si256(v, one);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_sub_epi32(one, _mm256_slli_epi32(bit, 1)));
    }
    if (x < n) scalar::parity_signs_i32(values + x, n - x, beta, out + x);
}

std::uint64_t horizontal_sum(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

ColumnMoments column_moments_i32(const std::int32_t* data, std::size_t n) {
    const std::size_t body = n & ~std::size_t{7};
    __m256i vmax = _mm256_setzero_si256();
    for (std::size_t i = 0; i < body; i += 8) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        vmax = _mm256_max_epu32(vmax, _mm256_abs_epi32(w));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmax);
    std::uint32_t max_abs = 0;
    for (auto l : lanes) max_abs = l > max_abs ? l : max_abs;
    // w^4 must stay below 2^60 per lane so fifteen lane sums cannot wrap.
    if (max_abs > (1u << 15)) return scalar::column_moments_i32(data, n);

    ColumnMoments m;
    __m256i squares = _mm256_setzero_si256();
    __m256i fourth_even = _mm256_setzero_si256();
    __m256i fourth_odd = _mm256_setzero_si256();
    int pending = 0;
    for (std::size_t i = 0; i < body; i += 8) {
        __m256i a = _mm256_abs_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i)));
        __m256i sq = _mm256_mullo_epi32(a, a);
        squares = _mm256_add_epi64(squares, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(sq)));
        squares = _mm256_add_epi64(squares, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(sq, 1)));
        fourth_even = _mm256_add_epi64(fourth_even, _mm256_mul_epu32(sq, sq));
        __m256i hi = _mm256_srli_epi64(sq, 32);
        fourth_odd = _mm256_add_epi64(fourth_odd, _mm256_mul_epu32(hi, hi));
        if (++pending == 8) {
            m.sum_fourth += horizontal_sum(fourth_even);
            m.sum_fourth += horizontal_sum(fourth_odd);
            fourth_even = _mm256_setzero_si256();
            fourth_odd = _mm256_setzero_si256();
            pending = 0;
        }
    }
    m.sum_fourth += horizontal_sum(fourth_even);
    m.sum_fourth += horizontal_sum(fourth_odd);
    m.sum_squares = horizontal_sum(squares);
    m.max_abs = max_abs;
    if (body < n) {
        ColumnMoments tail = scalar::column_moments_i32(data + body, n - body);
        m.max_abs = tail.max_abs > m.max_abs ? tail.max_abs : m.max_abs;
        m.sum_squares += tail.sum_squares;
        m.sum_fourth += tail.sum_fourth;
    }
    return m;
}

}  // namespace

const KernelTable& table() noexcept {
    static const KernelTable t{"avx2", fwht_i32, xor_derivative_u32, parity_signs_i32, column_moments_i32};
    return t;
}

}  // namespace imbalance::kernels::avx2
