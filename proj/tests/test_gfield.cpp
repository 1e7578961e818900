#include <doctest.h>

#include <numeric>

#include "imbalance/ddt.hpp"
#include "imbalance/errors.hpp"
#include "imbalance/gfield.hpp"
#include "oracles.hpp"

using namespace imbalance;

namespace {

bool prime(std::uint32_t p) {
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return p >= 2;
}

}  // namespace

TEST_CASE("every compiled-in modulus yields a field") {
    for (std::uint32_t p = 2; p < 300; ++p) {
        if (!prime(p)) continue;
        std::size_t q = p;
        for (unsigned n = 1; q <= (1u << 16); ++n, q *= p) {
            auto mod = default_modulus(p, n);
            if (mod.empty()) continue;
            CAPTURE(p);
            CAPTURE(n);
            auto f = make_field(p, n);
            CHECK(f.modulus() == mod);
            CHECK(f.size() == q);
        }
    }
}

TEST_CASE("multiplication agrees with polynomial arithmetic") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 8}, {7, 2}, {3, 3}}) {
        auto f = make_field(p, n);
        oracle::PolyField ref{p, n, f.modulus()};
        const std::size_t q = f.size();
        const std::size_t step = q > 64 ? 7 : 1;
        for (Element x = 0; x < q; ++x)
            for (Element y = 0; y < q; y += step) CHECK(f.mul(x, y) == ref.mul(x, y));
    }
}

TEST_CASE("field axioms hold exhaustively for small fields") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {2, 4}, {5, 1}}) {
        auto f = make_field(p, n);
        const std::size_t q = f.size();
        for (Element x = 0; x < q; ++x) {
            CHECK(f.mul(x, 1) == x);
            if (x) {
                CHECK(f.mul(x, f.inv(x)) == 1);
                CHECK(f.antilog(f.log(x)) == x);
            }
            for (Element y = 0; y < q; ++y) {
                CHECK(f.mul(x, y) == f.mul(y, x));
                for (Element z = 0; z < q; ++z) {
                    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
        CHECK(f.inv(0) == 0);
    }
}

TEST_CASE("the generator has full multiplicative order") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 8}, {3, 2}, {7, 3}, {2, 16}}) {
        auto f = make_field(p, n);
        Element g = f.generator();
        Element x = g;
        std::size_t order = 1;
        while (x != 1) {
            x = f.mul(x, g);
            ++order;
        }
        CHECK(order == f.size() - 1);
        CHECK(f.pow(g, f.size() - 1) == 1);
    }
    auto gf8 = make_field(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(gf8.size() == 8);
    CHECK(make_field(2, 1).size() == 2);
}

TEST_CASE("bad moduli and parameters are rejected") {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind([] { make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == ErrorKind::InvalidModulus);
    CHECK(kind([] { make_field(2, 3, std::vector<std::uint32_t>{1, 1, 1}); }) == ErrorKind::InvalidModulus);
    CHECK(kind([] { make_field(2, 3, std::vector<std::uint32_t>{1, 1, 0, 2}); }) == ErrorKind::InvalidModulus);
    CHECK(kind([] { make_field(4, 1); }) == ErrorKind::Domain);
    CHECK(kind([] { make_field(2, 17); }) == ErrorKind::Domain);
    CHECK(kind([] { parse_field("2^x"); }) != ErrorKind::Internal);
    CHECK(parse_field("3^2").size() == 9);
    CHECK(parse_field("7").size() == 7);
}

TEST_CASE("power maps and their exponents") {
    auto f = make_field(2, 3);
    auto x3 = build_power(f, 3);
    CHECK(x3.is_bijective());
    CHECK(power_exponent(f, x3) == 3);
    oracle::PolyField ref{2, 3, f.modulus()};
    for (Element x = 0; x < 8; ++x) CHECK(x3(x) == ref.pow(x, 3));

    auto gf16 = make_field(2, 4);
    auto inv = build_inverse(gf16);
    CHECK(inv(0) == 0);
    CHECK(power_exponent(gf16, inv) == 14);
    CHECK(build_power(gf16, 5).is_bijective() == false);

    auto rnd = random_bijection(gf16.group(), 7);
    CHECK_FALSE(power_exponent(gf16, rnd).has_value());
}

TEST_CASE("Gold maps with gcd(i, n) = 1 are differentially 2-uniform") {
    for (unsigned n : {3u, 5u}) {
        auto f = make_field(2, n);
        for (unsigned i = 1; i < n; ++i) {
            if (std::gcd(i, n) != 1) continue;
            DDTable d(build_gold(f, i));
            CHECK(differential_uniformity(d) == 2);
        }
    }
    CHECK_THROWS_AS(build_gold(make_field(3, 2), 1), Error);
}

TEST_CASE("quadratic monomials are x^(p^i + p^j)") {
    auto f = make_field(3, 2);
    auto q = build_quadratic(f, 1, 0);
    for (Element x = 0; x < 9; ++x) CHECK(q(x) == f.pow(x, 4));
    CHECK_THROWS_AS(build_quadratic(make_field(3, 3), 0, 0), Error);
}

TEST_CASE("subfields and trace projections") {
    auto f = make_field(2, 6);
    for (unsigned m : {1u, 2u, 3u}) {
        Subfield s(f, m);
        CHECK(s.group().order() == (std::size_t{1} << m));
        for (Element y = 0; y < s.group().order(); ++y) {
            Element x = s.embed(y);
            CHECK(s.contains(x));
            CHECK(s.project(x) == y);
            CHECK(f.pow(x, std::size_t{1} << m) == x);
        }
        auto tr = build_projection(f, m);
        CHECK(tr.codomain() == s.group());
        for (Element x = 0; x < f.size(); ++x)
            for (Element y = 0; y < f.size(); y += 5) CHECK(tr(f.add(x, y)) == s.group().add(tr(x), tr(y)));
        // Tr is balanced onto the subfield.
        std::vector<int> hits(s.group().order(), 0);
        for (Element x = 0; x < f.size(); ++x) ++hits[tr(x)];
        for (int h : hits) CHECK(h == int(f.size() >> m));
    }
    CHECK_THROWS_AS(Subfield(f, 4), Error);
}

TEST_CASE("tables restricted to a subfield") {
    auto f = make_field(2, 4);
    auto x5 = build_power(f, 5);  // values lie in GF(4)
    auto r = restrict_to_subfield(f, x5, 2);
    CHECK(r.codomain().order() == 4);
    CHECK(power_exponent(f, r) == 5);
    CHECK_THROWS_AS(restrict_to_subfield(f, build_power(f, 3), 2), Error);
}
