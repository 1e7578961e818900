#include "imbalance/functable.hpp"

#include <algorithm>
#include <numeric>

#include "imbalance/errors.hpp"

namespace imbalance {

FunctionTable::FunctionTable(GroupSpec domain, GroupSpec codomain, std::vector<std::uint32_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
    if (domain_.order() > kMaxTableOrder || codomain_.order() > kMaxTableOrder)
        fail(ErrorKind::Capacity, "group too large to tabulate");
    if (values_.size() != domain_.order())
        fail(ErrorKind::Schema, "map has " + std::to_string(values_.size()) + " entries, domain order is " +
                                    std::to_string(domain_.order()));
    for (std::size_t x = 0; x < values_.size(); ++x)
        if (values_[x] >= codomain_.order())
            fail(ErrorKind::Schema, "map entry " + std::to_string(x) + " = " + std::to_string(values_[x]) +
                                        " outside codomain of order " + std::to_string(codomain_.order()));
}

bool FunctionTable::is_bijective() const {
    if (domain_.order() != codomain_.order()) return false;
    std::vector<bool> seen(codomain_.order(), false);
    for (auto v : values_) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

namespace {

bool additive_on(const FunctionTable& t, Element x, Element y, Element c) {
    const GroupSpec& g1 = t.domain();
    const GroupSpec& g2 = t.codomain();
    // A(x+y) + A(0) == A(x) + A(y)
    return g2.add(t(g1.add(x, y)), c) == g2.add(t(x), t(y));
}

std::vector<Element> unit_generators(const GroupSpec& g) {
    std::vector<Element> gens;
    for (std::size_t j = 0; j < g.rank(); ++j) gens.push_back(g.weights()[j]);
    return gens;
}

}  // namespace

AffineMap::AffineMap(FunctionTable table) : table_(std::move(table)) {
    const GroupSpec& g1 = table_.domain();
    const Element c = table_(0);
    const std::size_t n = g1.order();
    auto reject = [] { fail(ErrorKind::InvalidTransform, "table is not affine"); };
    if (n <= 64) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (!additive_on(table_, x, y, c)) reject();
        return;
    }
    // Additivity against every generator pins the map down on all of G1.
    for (Element e : unit_generators(g1))
        for (Element x = 0; x < n; ++x)
            if (!additive_on(table_, x, e, c)) reject();
    Rng rng(0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < 10000; ++i)
        if (!additive_on(table_, rng.below(n), rng.below(n), c)) reject();
}

AffineMap AffineMap::identity(const GroupSpec& g) {
    std::vector<std::uint32_t> v(g.order());
    std::iota(v.begin(), v.end(), 0u);
    return AffineMap(FunctionTable(g, g, std::move(v)));
}

AffineMap AffineMap::zero(const GroupSpec& from, const GroupSpec& to) {
    return constant(from, to, 0);
}

AffineMap AffineMap::constant(const GroupSpec& from, const GroupSpec& to, Element c) {
    to.check(c);
    return AffineMap(FunctionTable(from, to, std::vector<std::uint32_t>(from.order(), static_cast<std::uint32_t>(c))));
}

AffineMap AffineMap::inverse() const {
    if (!is_bijective()) fail(ErrorKind::InvalidTransform, "affine map is not bijective");
    std::vector<std::uint32_t> inv(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) inv[table_(x)] = static_cast<std::uint32_t>(x);
    return AffineMap(FunctionTable(table_.codomain(), table_.domain(), std::move(inv)));
}

FunctionTable derivative(const FunctionTable& f, Element a) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    auto shifted = g1.translates(a);
    std::vector<std::uint32_t> out(f.size());
    for (Element x = 0; x < f.size(); ++x) out[x] = static_cast<std::uint32_t>(g2.sub(f(shifted[x]), f(x)));
    return FunctionTable(g1, g2, std::move(out));
}

FunctionTable second_derivative(const FunctionTable& f, Element a, Element b) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    auto xa = g1.translates(a);
    auto xb = g1.translates(b);
    auto xab = g1.translates(g1.add(a, b));
    std::vector<std::uint32_t> out(f.size());
    for (Element x = 0; x < f.size(); ++x) {
        Element v = g2.sub(f(xab[x]), f(xa[x]));
        v = g2.sub(v, f(xb[x]));
        out[x] = static_cast<std::uint32_t>(g2.add(v, f(x)));
    }
    return FunctionTable(g1, g2, std::move(out));
}

FunctionTable ea_transform(const FunctionTable& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a3) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    if (!(a1.table().domain() == g1 && a1.table().codomain() == g1))
        fail(ErrorKind::InvalidTransform, "A1 must map G1 to G1");
    if (!(a2.table().domain() == g2 && a2.table().codomain() == g2))
        fail(ErrorKind::InvalidTransform, "A2 must map G2 to G2");
    if (!(a3.table().domain() == g1 && a3.table().codomain() == g2))
        fail(ErrorKind::InvalidTransform, "A3 must map G1 to G2");
    if (!a1.is_bijective()) fail(ErrorKind::InvalidTransform, "A1 is not a permutation");
    if (!a2.is_bijective()) fail(ErrorKind::InvalidTransform, "A2 is not a permutation");
    std::vector<std::uint32_t> out(f.size());
    for (Element x = 0; x < f.size(); ++x)
        out[x] = static_cast<std::uint32_t>(g2.add(a2(f(a1(x))), a3(x)));
    return FunctionTable(g1, g2, std::move(out));
}

FunctionTable ccz_transform(const FunctionTable& f, const AffineMap& l) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    GroupSpec prod = g1.product(g2);
    if (!(l.table().domain() == prod && l.table().codomain() == prod))
        fail(ErrorKind::InvalidTransform, "CCZ map must act on G1 x G2");
    if (!l.is_bijective()) fail(ErrorKind::InvalidTransform, "CCZ map is not a permutation");
    const std::size_t n1 = g1.order();
    std::vector<std::uint32_t> out(n1);
    std::vector<bool> hit(n1, false);
    for (Element x = 0; x < n1; ++x) {
        Element image = l(x + n1 * f(x));
        Element u = image % n1;
        if (hit[u])
            fail(ErrorKind::NotAFunction, "transformed graph has two points above x = " + std::to_string(u));
        hit[u] = true;
        out[u] = static_cast<std::uint32_t>(image / n1);
    }
    return FunctionTable(g1, g2, std::move(out));
}

AffineMap ea_graph_map(const AffineMap& a1, const AffineMap& a2, const AffineMap& a3) {
    const GroupSpec& g1 = a1.table().domain();
    const GroupSpec& g2 = a2.table().domain();
    AffineMap a1_inv = a1.inverse();
    GroupSpec prod = g1.product(g2);
    const std::size_t n1 = g1.order();
    std::vector<std::uint32_t> table(prod.order());
    for (Element y = 0; y < g2.order(); ++y)
        for (Element x = 0; x < n1; ++x) {
            Element u = a1_inv(x);
            Element v = g2.add(a2(y), a3(u));
            table[x + n1 * y] = static_cast<std::uint32_t>(u + n1 * v);
        }
    return AffineMap(FunctionTable(prod, prod, std::move(table)));
}

AffineMap swap_graph_map(const GroupSpec& g) {
    GroupSpec prod = g.product(g);
    const std::size_t n = g.order();
    std::vector<std::uint32_t> table(prod.order());
    for (Element y = 0; y < n; ++y)
        for (Element x = 0; x < n; ++x) table[x + n * y] = static_cast<std::uint32_t>(y + n * x);
    return AffineMap(FunctionTable(prod, prod, std::move(table)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) fail(ErrorKind::Domain, "empty range");
    // Largest multiple of bound representable in 64 bits; reject the tail.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
        std::uint64_t r = engine_();
        if (r <= limit) return r % bound;
    }
}

FunctionTable random_function(const GroupSpec& g1, const GroupSpec& g2, Rng& rng) {
    std::vector<std::uint32_t> v(g1.order());
    for (auto& e : v) e = static_cast<std::uint32_t>(rng.below(g2.order()));
    return FunctionTable(g1, g2, std::move(v));
}

FunctionTable random_function(const GroupSpec& g1, const GroupSpec& g2, std::uint64_t seed) {
    Rng rng(seed);
    return random_function(g1, g2, rng);
}

FunctionTable random_bijection(const GroupSpec& g, Rng& rng) {
    std::vector<std::uint32_t> v(g.order());
    std::iota(v.begin(), v.end(), 0u);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return FunctionTable(g, g, std::move(v));
}

FunctionTable random_bijection(const GroupSpec& g, std::uint64_t seed) {
    Rng rng(seed);
    return random_bijection(g, rng);
}

namespace {

using Matrix = std::vector<std::vector<std::size_t>>;

std::size_t inverse_mod(std::size_t a, std::size_t p) {
    for (std::size_t b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    return 0;
}

bool invertible(Matrix m, std::size_t p) {
    const std::size_t k = m.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return false;
        std::swap(m[pivot], m[col]);
        std::size_t inv = inverse_mod(m[col][col], p);
        for (std::size_t r = col + 1; r < k; ++r) {
            std::size_t factor = m[r][col] * inv % p;
            for (std::size_t c = col; c < k; ++c) m[r][c] = (m[r][c] + p * p - factor * m[col][c] % p) % p;
        }
    }
    return true;
}

FunctionTable linear_table(const GroupSpec& g1, const GroupSpec& g2, const Matrix& m, std::size_t p) {
    std::vector<std::uint32_t> v(g1.order());
    std::vector<std::size_t> out(g2.rank());
    for (Element x = 0; x < g1.order(); ++x) {
        auto xc = g1.decode(x);
        for (std::size_t r = 0; r < g2.rank(); ++r) {
            std::size_t s = 0;
            for (std::size_t c = 0; c < g1.rank(); ++c) s += m[r][c] * xc[c];
            out[r] = s % p;
        }
        v[x] = static_cast<std::uint32_t>(g2.encode(out));
    }
    return FunctionTable(g1, g2, std::move(v));
}

bool same_prime(const GroupSpec& g1, const GroupSpec& g2) {
    return g1.is_elementary() && g2.is_elementary() && g1.orders().front() == g2.orders().front();
}

}  // namespace

AffineMap random_affine(const GroupSpec& g1, const GroupSpec& g2, Rng& rng) {
    std::vector<std::uint32_t> v(g1.order());
    Element c = rng.below(g2.order());
    if (same_prime(g1, g2)) {
        const std::size_t p = g1.orders().front();
        Matrix m(g2.rank(), std::vector<std::size_t>(g1.rank()));
        for (auto& row : m)
            for (auto& e : row) e = rng.below(p);
        FunctionTable lin = linear_table(g1, g2, m, p);
        for (Element x = 0; x < g1.order(); ++x) v[x] = static_cast<std::uint32_t>(g2.add(lin(x), c));
    } else if (g1.is_cyclic() && g2.is_cyclic()) {
        const std::size_t n = g1.order(), m = g2.order();
        const std::size_t step = m / std::gcd(n, m);
        Element image_of_one = step * rng.below(m / step);
        for (Element x = 0; x < n; ++x) v[x] = static_cast<std::uint32_t>((x * image_of_one + c) % m);
    } else {
        fail(ErrorKind::Inapplicable, "random affine maps need elementary or cyclic groups");
    }
    return AffineMap(FunctionTable(g1, g2, std::move(v)));
}

AffineMap random_affine_permutation(const GroupSpec& g, Rng& rng) {
    Element c = rng.below(g.order());
    std::vector<std::uint32_t> v(g.order());
    if (g.is_elementary()) {
        const std::size_t p = g.orders().front();
        const std::size_t k = g.rank();
        Matrix m(k, std::vector<std::size_t>(k));
        do {
            for (auto& row : m)
                for (auto& e : row) e = rng.below(p);
        } while (!invertible(m, p));
        FunctionTable lin = linear_table(g, g, m, p);
        for (Element x = 0; x < g.order(); ++x) v[x] = static_cast<std::uint32_t>(g.add(lin(x), c));
    } else if (g.is_cyclic()) {
        const std::size_t n = g.order();
        std::size_t u;
        do {
            u = rng.below(n);
        } while (std::gcd(u, n) != 1);
        for (Element x = 0; x < n; ++x) v[x] = static_cast<std::uint32_t>((x * u + c) % n);
    } else {
        fail(ErrorKind::Inapplicable, "random affine permutations need elementary or cyclic groups");
    }
    return AffineMap(FunctionTable(g, g, std::move(v)));
}

}  // namespace imbalance
