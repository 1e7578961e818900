#include <doctest.h>

#include <bit>
#include <random>
#include <string>
#include <vector>

#include "imbalance/kernels.hpp"

using namespace imbalance::kernels;

namespace {

std::vector<std::int32_t> naive_fwht(const std::vector<std::int32_t>& v) {
    std::vector<std::int32_t> out(v.size(), 0);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t x = 0; x < v.size(); ++x) out[a] += std::popcount(a & x) % 2 ? -v[x] : v[x];
    return out;
}

std::vector<const KernelTable*> variants() {
    std::vector<const KernelTable*> v{&scalar_kernels()};
    if (avx2_kernels()) v.push_back(avx2_kernels());
    return v;
}

}  // namespace

TEST_CASE("scalar FWHT matches the direct transform") {
    std::mt19937 rng(1);
    for (std::size_t n = 1; n <= 256; n *= 2) {
        std::vector<std::int32_t> v(n);
        for (auto& x : v) x = static_cast<std::int32_t>(rng() % 201) - 100;
        auto ref = naive_fwht(v);
        scalar_kernels().fwht_i32(v.data(), n);
        CHECK(v == ref);
    }
}

TEST_CASE("vector kernels agree with the scalar reference") {
    MESSAGE("active kernel table: " << std::string(active().name));
#if defined(IMBALANCE_EXPECT_AVX2) && (defined(__x86_64__) || defined(__i386__))
    if (__builtin_cpu_supports("avx2")) CHECK(avx2_kernels() != nullptr);
#endif
    std::mt19937_64 rng(7);
    const auto& ref = scalar_kernels();
    for (const KernelTable* k : variants()) {
        CAPTURE(k->name);
        for (std::size_t n = 1; n <= (1u << 14); n *= 2) {
            std::vector<std::int32_t> v(n);
            for (auto& x : v) x = static_cast<std::int32_t>(rng() % 2001) - 1000;
            auto w = v;
            ref.fwht_i32(v.data(), n);
            k->fwht_i32(w.data(), n);
            CHECK(v == w);

            std::vector<std::uint32_t> vals(n);
            for (auto& x : vals) x = static_cast<std::uint32_t>(rng() & 0xFFFF);
            for (std::uint32_t a : {0u, 1u, static_cast<std::uint32_t>(n - 1), static_cast<std::uint32_t>(n / 3)}) {
                std::vector<std::uint32_t> o1(n), o2(n);
                ref.xor_derivative_u32(vals.data(), n, a, o1.data());
                k->xor_derivative_u32(vals.data(), n, a, o2.data());
                CHECK(o1 == o2);
            }
            for (std::uint32_t beta : {0u, 1u, 0x5555u, 0xFFFFu, 0x8001u}) {
                std::vector<std::int32_t> s1(n), s2(n);
                ref.parity_signs_i32(vals.data(), n, beta, s1.data());
                k->parity_signs_i32(vals.data(), n, beta, s2.data());
                CHECK(s1 == s2);
            }
        }
        for (std::size_t n : {1u, 3u, 7u, 8u, 9u, 63u, 64u, 65u, 1000u, 4096u, 65537u}) {
            for (std::int32_t range : {10, 1 << 14, 1 << 15, 1 << 16, 1 << 30}) {
                std::vector<std::int32_t> v(n);
                for (auto& x : v) x = static_cast<std::int32_t>(rng() % (2 * std::uint64_t(range) + 1)) - range;
                if (n > 2) v[n / 2] = -range;
                auto a = ref.column_moments_i32(v.data(), n);
                auto b = k->column_moments_i32(v.data(), n);
                CHECK(a.max_abs == b.max_abs);
                CHECK(a.sum_squares == b.sum_squares);
                CHECK(a.sum_fourth == b.sum_fourth);
            }
        }
    }
}

TEST_CASE("column moments are exact") {
    std::vector<std::int32_t> v{3, -4, 0, 65536, -1};
    auto m = column_moments(v);
    CHECK(m.max_abs == 65536);
    CHECK(m.sum_squares == 9 + 16 + 65536ull * 65536ull + 1);
    unsigned __int128 f = 81 + 256 + 1;
    f += static_cast<unsigned __int128>(65536ull * 65536ull) * (65536ull * 65536ull);
    CHECK(m.sum_fourth == f);
}

TEST_CASE("span wrappers validate their arguments") {
    std::vector<std::int32_t> odd(6);
    CHECK_THROWS(fwht(odd));
    std::vector<std::uint32_t> vals(8), out(8), short_out(4);
    CHECK_THROWS(xor_derivative(vals, 8, out));
    CHECK_THROWS(xor_derivative(vals, 1, short_out));
    CHECK_NOTHROW(xor_derivative(vals, 7, out));
}
