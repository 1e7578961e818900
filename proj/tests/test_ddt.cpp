#include <doctest.h>

#include "helpers.hpp"
#include "imbalance/ddt.hpp"
#include "imbalance/errors.hpp"
#include "imbalance/gfield.hpp"
#include "oracles.hpp"

using namespace imbalance;

TEST_CASE("DDT matches the direct count on mixed shapes") {
    std::uint64_t seed = 0;
    for (auto [l1, l2] : testing::mixed_shapes()) {
        auto g1 = parse_group(l1);
        auto g2 = parse_group(l2);
        for (int i = 0; i < 5; ++i) {
            auto f = random_function(g1, g2, ++seed);
            DDTable d(f);
            auto ref = oracle::ddt(f);
            REQUIRE(d.rows() == g1.order());
            REQUIRE(d.cols() == g2.order());
            for (Element a = 0; a < g1.order(); ++a)
                for (Element b = 0; b < g2.order(); ++b) CHECK(d(a, b) == ref[a][b]);
            CHECK(d(0, 0) == g1.order());
        }
    }
}

TEST_CASE("spectrum counting identities") {
    std::uint64_t seed = 100;
    for (auto [l1, l2] : testing::mixed_shapes()) {
        auto g1 = parse_group(l1);
        auto g2 = parse_group(l2);
        auto f = random_function(g1, g2, ++seed);
        auto s = spectrum(DDTable(f));
        std::uint64_t total = 0, weighted = 0;
        for (auto [i, c] : s.counts) {
            total += c;
            weighted += i * c;
            CHECK(c > 0);
        }
        CHECK(total == (g1.order() - 1) * g2.order());
        CHECK(weighted == (g1.order() - 1) * g1.order());
        CHECK(s.delta == s.counts.rbegin()->first);
    }
}

TEST_CASE("APN and PN recognition") {
    auto gf8 = make_field(2, 3);
    DDTable d3(build_power(gf8, 3));
    CHECK(is_apn(d3));
    CHECK(differential_uniformity(d3) == 2);
    CHECK(deficiency(d3) == 28);

    auto gf9 = make_field(3, 2);
    auto sq = build_power(gf9, 2);
    DDTable d2(sq);
    CHECK(is_pn(sq, d2));
    CHECK(differential_uniformity(d2) == 1);
    CHECK(deficiency(d2) == 0);

    auto x3mod5 = build_power(make_field(5, 1), 3);
    CHECK(deficiency(DDTable(x3mod5)) == oracle::deficiency(x3mod5));
    CHECK(deficiency(DDTable(x3mod5)) == 8);
}

TEST_CASE("inverse map spectrum over GF(16)") {
    auto s = spectrum(DDTable(build_inverse(make_field(2, 4))));
    CHECK(s.count(0) == 135);
    CHECK(s.count(2) == 90);
    CHECK(s.count(4) == 15);
    CHECK(s.delta == 4);
}

TEST_CASE("T_F is the largest image size of a derivative") {
    auto g = parse_group("2 2 2");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto f = random_function(g, g, seed);
        auto ref = oracle::ddt(f);
        std::size_t best = 0;
        for (Element a = 1; a < 8; ++a) {
            std::size_t img = 0;
            for (auto v : ref[a]) img += v > 0;
            best = std::max(best, img);
        }
        CHECK(t_f(DDTable(f)) == best);
    }
}

TEST_CASE("oversized tables are refused") {
    auto g1 = parse_group("2 2 2 2 2 2 2 2 2 2 2 2 2 2");
    auto g2 = parse_group("2 2 2 2 2 2 2 2 2 2 2 2 2");
    FunctionTable f(g1, g2, std::vector<std::uint32_t>(g1.order(), 0));
    try {
        DDTable d(f);
        FAIL("expected a capacity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Capacity);
    }
}
