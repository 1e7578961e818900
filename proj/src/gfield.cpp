#include "imbalance/gfield.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "imbalance/errors.hpp"

namespace imbalance {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    fail(ErrorKind::Internal, "no inverse in prime field");
}

/// a mod b over Z_p; b nonzero after trimming.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() > db) {
        std::uint32_t factor = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), mod, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
        if (r > std::numeric_limits<std::uint64_t>::max() / b) fail(ErrorKind::Capacity, "exponent overflow");
        r *= b;
    }
    return r;
}

/// Rabin's test: f of degree n is irreducible over Z_p iff X^{p^n} = X mod f
/// and gcd(X^{p^{n/r}} - X, f) = 1 for every prime r | n.
bool irreducible(const Poly& f, std::uint32_t p) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return true;
    const Poly x{0, 1};
    auto frobenius_power = [&](unsigned k) {
        Poly r = x;
        for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    auto minus_x = [&](Poly r) {
        r.resize(std::max<std::size_t>(r.size(), 2), 0);
        r[1] = (r[1] + p - 1) % p;
        trim(r);
        return r;
    };
    if (!minus_x(frobenius_power(n)).empty()) return false;
    for (std::uint64_t r : prime_factors(n)) {
        Poly g = poly_gcd(minus_x(frobenius_power(static_cast<unsigned>(n / r))), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

const std::map<std::pair<std::uint32_t, unsigned>, Poly>& default_table() {
    static const std::map<std::pair<std::uint32_t, unsigned>, Poly> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},  // AES modulus
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 14}, {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {{2, 15}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 16}, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 1, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{5, 1}, {1, 1}},
        {{5, 2}, {2, 1, 1}},
        {{5, 3}, {2, 3, 0, 1}},
        {{5, 4}, {2, 2, 1, 0, 1}},
        {{7, 1}, {1, 1}},
        {{7, 2}, {3, 1, 1}},
        {{7, 3}, {2, 3, 0, 1}},
        {{7, 4}, {5, 3, 1, 0, 1}},
    };
    return table;
}

}  // namespace

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned n) {
    auto it = default_table().find({p, n});
    if (it == default_table().end()) return {};
    return it->second;
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), n_(n), q_(0) {
    if (!is_prime(p)) fail(ErrorKind::Domain, "characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) fail(ErrorKind::Domain, "field degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 16)) fail(ErrorKind::Domain, "field order exceeds 2^16");
    }
    q_ = static_cast<std::size_t>(q);

    if (modulus) {
        modulus_ = *modulus;
    } else {
        modulus_ = default_modulus(p, n);
        if (modulus_.empty()) {
            // No compiled-in entry: the first monic irreducible in index order.
            for (std::uint64_t c = 0; c < q_ && modulus_.empty(); ++c) {
                Poly cand(n + 1, 0);
                std::uint64_t v = c;
                for (unsigned i = 0; i < n; ++i) {
                    cand[i] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                cand[n] = 1;
                if (cand[0] != 0 && irreducible(cand, p)) modulus_ = cand;
            }
        }
    }
    if (modulus_.size() != n + 1 || modulus_.back() != 1)
        fail(ErrorKind::InvalidModulus, "modulus must be monic of degree " + std::to_string(n));
    for (auto c : modulus_)
        if (c >= p) fail(ErrorKind::InvalidModulus, "modulus coefficient out of range");
    if (!irreducible(modulus_, p)) fail(ErrorKind::InvalidModulus, "modulus is reducible");

    group_ = GroupSpec(std::vector<std::size_t>(n, p));

    auto to_poly = [&](Element x) {
        Poly a(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            a[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        trim(a);
        return a;
    };
    auto to_index = [&](const Poly& a) {
        Element x = 0;
        for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
        return x;
    };

    const std::uint64_t group_order = q_ - 1;
    const auto factors = prime_factors(group_order);
    for (Element cand = 1; cand < q_ && generator_ == 0; ++cand) {
        Poly g = to_poly(cand);
        bool primitive = true;
        for (std::uint64_t r : factors) {
            Poly t = poly_powmod(g, group_order / r, modulus_, p);
            if (t.size() == 1 && t[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (group_order == 1) primitive = cand == 1;
        if (primitive) generator_ = cand;
    }
    if (generator_ == 0) fail(ErrorKind::InvalidModulus, "no primitive element found");

    log_.assign(q_, 0);
    antilog_.assign(q_ - 1, 0);
    std::vector<bool> seen(q_, false);
    Poly g = to_poly(generator_);
    Poly cur{1};
    for (std::uint64_t k = 0; k < group_order; ++k) {
        Element idx = to_index(cur);
        if (idx == 0 || seen[idx]) fail(ErrorKind::InvalidModulus, "generator order is not p^n - 1");
        seen[idx] = true;
        antilog_[k] = static_cast<std::uint32_t>(idx);
        log_[idx] = static_cast<std::uint32_t>(k);
        cur = poly_mulmod(cur, g, modulus_, p);
    }
    if (!(cur.size() == 1 && cur[0] == 1)) fail(ErrorKind::InvalidModulus, "generator order is not p^n - 1");
}

Element FieldSpec::mul(Element x, Element y) const {
    if (x == 0 || y == 0) return 0;
    std::uint64_t k = static_cast<std::uint64_t>(log_[x]) + log_[y];
    return antilog_[k % (q_ - 1)];
}

Element FieldSpec::pow(Element x, std::uint64_t d) const {
    if (d == 0) return 1;
    if (x == 0) return 0;
    const std::uint64_t order = q_ - 1;
    std::uint64_t k = static_cast<std::uint64_t>(log_[x]) * (d % order) % order;
    return antilog_[k];
}

Element FieldSpec::inv(Element x) const {
    if (x == 0) return 0;
    const std::uint64_t order = q_ - 1;
    return antilog_[(order - log_[x]) % order];
}

std::uint32_t FieldSpec::log(Element x) const {
    if (x == 0 || x >= q_) fail(ErrorKind::Domain, "log of zero or out-of-range element");
    return log_[x];
}

Element FieldSpec::trace(unsigned m, Element x) const {
    if (m == 0 || n_ % m != 0)
        fail(ErrorKind::Domain, "trace degree " + std::to_string(m) + " does not divide " + std::to_string(n_));
    group_.check(x);
    const std::uint64_t frob = ipow(p_, m);
    Element acc = 0;
    Element term = x;
    for (unsigned i = 0; i < n_ / m; ++i) {
        acc = add(acc, term);
        term = pow(term, frob);
    }
    return acc;
}

FieldSpec make_field(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus) {
    return FieldSpec(p, n, std::move(modulus));
}

FieldSpec parse_field(std::string_view literal, std::optional<std::vector<std::uint32_t>> modulus) {
    auto caret = literal.find('^');
    auto number = [&](std::string_view s) {
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            fail(ErrorKind::Parse, "bad field literal '" + std::string(literal) + "'");
        return v;
    };
    if (caret == std::string_view::npos) return FieldSpec(static_cast<std::uint32_t>(number(literal)), 1, std::move(modulus));
    return FieldSpec(static_cast<std::uint32_t>(number(literal.substr(0, caret))),
                     static_cast<unsigned>(number(literal.substr(caret + 1))), std::move(modulus));
}

Subfield::Subfield(const FieldSpec& field, unsigned m) : m_(m) {
    const unsigned n = field.degree();
    if (m == 0 || n % m != 0)
        fail(ErrorKind::Domain, "subfield degree " + std::to_string(m) + " does not divide " + std::to_string(n));
    const std::uint32_t p = field.characteristic();
    const std::size_t sub_order = static_cast<std::size_t>(ipow(p, m));
    group_ = GroupSpec(std::vector<std::size_t>(m, p));
    const Element b = field.antilog((field.size() - 1) / (sub_order - 1));
    std::vector<Element> basis;
    Element power = 1;
    for (unsigned i = 0; i < m; ++i) {
        basis.push_back(power);
        power = field.mul(power, b);
    }
    to_sub_.assign(field.size(), kAbsent);
    to_field_.assign(sub_order, 0);
    for (Element y = 0; y < sub_order; ++y) {
        Element v = 0;
        Element rest = y;
        for (unsigned i = 0; i < m; ++i) {
            Element c = rest % p;
            rest /= p;
            for (Element k = 0; k < c; ++k) v = field.add(v, basis[i]);
        }
        if (to_sub_[v] != kAbsent) fail(ErrorKind::Internal, "subfield basis is dependent");
        to_sub_[v] = static_cast<std::uint32_t>(y);
        to_field_[y] = static_cast<std::uint32_t>(v);
    }
}

Element Subfield::project(Element x) const {
    if (x >= to_sub_.size() || to_sub_[x] == kAbsent)
        fail(ErrorKind::Domain, "element " + std::to_string(x) + " is not in the subfield");
    return to_sub_[x];
}

FunctionTable build_power(const FieldSpec& f, std::uint64_t d) {
    std::vector<std::uint32_t> v(f.size());
    for (Element x = 0; x < f.size(); ++x) v[x] = static_cast<std::uint32_t>(f.pow(x, d));
    return FunctionTable(f.group(), f.group(), std::move(v));
}

FunctionTable build_inverse(const FieldSpec& f) {
    std::vector<std::uint32_t> v(f.size());
    for (Element x = 0; x < f.size(); ++x) v[x] = static_cast<std::uint32_t>(f.inv(x));
    return FunctionTable(f.group(), f.group(), std::move(v));
}

FunctionTable build_gold(const FieldSpec& f, unsigned i) {
    if (f.characteristic() != 2) fail(ErrorKind::Domain, "Gold maps need characteristic 2");
    return build_power(f, ipow(2, i) + 1);
}

FunctionTable build_quadratic(const FieldSpec& f, unsigned i, unsigned j) {
    if (i <= j) fail(ErrorKind::Domain, "quadratic exponent needs i > j");
    std::uint64_t a = ipow(f.characteristic(), i);
    std::uint64_t b = ipow(f.characteristic(), j);
    if (a > std::numeric_limits<std::uint64_t>::max() - b) fail(ErrorKind::Capacity, "exponent overflow");
    return build_power(f, a + b);
}

FunctionTable build_projection(const FieldSpec& f, unsigned m) {
    if (f.characteristic() != 2) fail(ErrorKind::Domain, "projection maps need characteristic 2");
    Subfield sub(f, m);
    std::vector<std::uint32_t> v(f.size());
    for (Element x = 0; x < f.size(); ++x) v[x] = static_cast<std::uint32_t>(sub.project(f.trace(m, x)));
    return FunctionTable(f.group(), sub.group(), std::move(v));
}

FunctionTable restrict_to_subfield(const FieldSpec& f, const FunctionTable& table, unsigned m) {
    if (!(table.domain() == f.group() && table.codomain() == f.group()))
        fail(ErrorKind::Domain, "table is not a map on the field");
    Subfield sub(f, m);
    std::vector<std::uint32_t> v(table.size());
    for (Element x = 0; x < table.size(); ++x) v[x] = static_cast<std::uint32_t>(sub.project(table(x)));
    return FunctionTable(f.group(), sub.group(), std::move(v));
}

std::optional<std::uint64_t> power_exponent(const FieldSpec& f, const FunctionTable& table) {
    if (!(table.domain() == f.group())) return std::nullopt;
    std::function<Element(Element)> value;
    std::optional<Subfield> sub;
    if (table.codomain() == f.group()) {
        value = [&](Element x) { return table(x); };
    } else {
        const auto& orders = table.codomain().orders();
        const unsigned m = static_cast<unsigned>(orders.size());
        if (orders.front() != f.characteristic() || !table.codomain().is_elementary() || m > f.degree() ||
            f.degree() % m != 0)
            return std::nullopt;
        sub.emplace(f, m);
        value = [&](Element x) { return sub->embed(table(x)); };
    }
    const std::uint64_t order = f.size() - 1;
    Element at_gen = value(f.generator());
    if (at_gen == 0) return std::nullopt;
    const std::uint64_t e = f.log(at_gen);
    for (std::uint64_t k = 0; k < order; ++k)
        if (value(f.antilog(k)) != f.antilog(k * e % order)) return std::nullopt;
    Element at_zero = value(0);
    if (at_zero == 0) return e == 0 ? order : e;
    if (at_zero == 1 && e == 0) return 0;
    return std::nullopt;
}

}  // namespace imbalance
