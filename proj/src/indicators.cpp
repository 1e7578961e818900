#include "imbalance/indicators.hpp"

#include <algorithm>
#include <set>

#include "imbalance/errors.hpp"
#include "imbalance/parallel.hpp"

namespace imbalance {

namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

std::uint64_t choose2(std::uint64_t k) { return k * (k - (k > 0 ? 1 : 0)) / 2; }

// (|G1| - 1) |G1|^2 / |G2|
Rational balanced_floor(const GroupSpec& g1, const GroupSpec& g2) {
    const std::int64_t n = as_i64(g1.order());
    return Rational(n - 1) * Rational(n * n, as_i64(g2.order()));
}

}  // namespace

Rational imbalance(const FunctionTable& f) {
    std::vector<std::uint64_t> sizes(f.codomain().order(), 0);
    for (auto v : f.values()) ++sizes[v];
    std::uint64_t squares = 0;
    for (auto c : sizes) squares += c * c;
    const std::int64_t n = as_i64(f.domain().order());
    return Rational(static_cast<std::int64_t>(squares)) - Rational(n * n, as_i64(f.codomain().order()));
}

Rational derivative_imbalance(const DDTable& d) {
    std::uint64_t squares = 0;
    for (Element a = 1; a < d.rows(); ++a)
        for (std::uint64_t v : d.row(a)) squares += v * v;
    const std::int64_t n = as_i64(d.rows());
    return Rational(static_cast<std::int64_t>(squares)) - Rational(n - 1) * Rational(n * n, as_i64(d.cols()));
}

Rational derivative_imbalance(const FunctionTable& f) { return derivative_imbalance(DDTable(f)); }

std::uint64_t ambiguity(const DifferentialSpectrum& s) {
    std::uint64_t total = 0;
    for (auto [i, n] : s.counts) total += n * choose2(i);
    return total;
}

std::int64_t ambiguity_from_nb(const Rational& nb, const GroupSpec& g1, const GroupSpec& g2) {
    const std::int64_t n = as_i64(g1.order());
    Rational twice = nb + Rational(n - 1) * (Rational(n * n, as_i64(g2.order())) - Rational(n));
    Rational a = twice / Rational(2);
    if (!a.is_integer()) fail(ErrorKind::Internal, "rescaled ambiguity " + a.str() + " is not an integer");
    return a.num();
}

std::vector<std::uint64_t> per_row_ambiguity(const DDTable& d) {
    std::vector<std::uint64_t> out;
    out.reserve(d.rows() > 0 ? d.rows() - 1 : 0);
    for (Element a = 1; a < d.rows(); ++a) {
        std::uint64_t s = 0;
        for (auto v : d.row(a)) s += choose2(v);
        out.push_back(s);
    }
    return out;
}

std::uint64_t pair_count_oracle(const FunctionTable& f) {
    const std::size_t n = f.domain().order();
    if (n > kPairOracleCap) fail(ErrorKind::Capacity, "pair-count oracle is limited to |G1| <= 4096");
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    std::vector<std::uint64_t> per_row(n, 0);
    parallel_for(0, n, [&](std::size_t a) {
        std::vector<Element> d(n);
        for (Element x = 0; x < n; ++x) d[x] = g2.sub(f(g1.add(x, a)), f(x));
        std::uint64_t count = 0;
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) count += d[x] == d[y];
        per_row[a] = count;
    });
    std::uint64_t total = 0;
    for (auto c : per_row) total += c;
    return total;
}

Rational nb_from_pair_count(std::uint64_t total, const GroupSpec& g1, const GroupSpec& g2) {
    const std::int64_t n = as_i64(g1.order());
    return Rational(static_cast<std::int64_t>(total)) - Rational(n * n) - balanced_floor(g1, g2);
}

ThreeValueRelation three_value_relation(const DifferentialSpectrum& s, std::uint64_t amb, std::uint64_t def,
                                        const GroupSpec& g1, const GroupSpec& g2) {
    std::vector<std::uint32_t> values;
    for (auto [i, count] : s.counts)
        if (i != 0) values.push_back(i);
    if (values.empty() || values.size() > 2)
        fail(ErrorKind::Inapplicable, "spectrum has " + std::to_string(values.size()) + " nonzero values");
    const std::int64_t n = as_i64(g1.order());
    const std::int64_t m = as_i64(g2.order());
    ThreeValueRelation r;
    if (values.size() == 1) {
        r.item = 1;
        r.i = values[0];
        const std::int64_t i = r.i;
        r.nb_closed_form = Rational(n - 1) * (Rational(i * n) - Rational(n * n, m));
        r.ambiguity_closed_form = Rational((n - 1) * n * (i - 1), 2);
        r.deficiency_closed_form = std::max(Rational(0), Rational(n - 1) * (Rational(m) - Rational(n, i)));
        r.nb_printed_form = Rational(i * (i - 1)) + Rational(n - 1) * (Rational(n) - Rational(n * n, m));
        r.ambiguity_printed_form = Rational(i * (i - 1), 2);
        r.printed_form_discrepancy =
            r.nb_printed_form != r.nb_closed_form || r.ambiguity_printed_form != r.ambiguity_closed_form;
        r.holds = r.ambiguity_closed_form == Rational(static_cast<std::int64_t>(amb)) &&
                  r.deficiency_closed_form == Rational(static_cast<std::int64_t>(def));
        return r;
    }
    r.item = 2;
    r.i = values[0];
    r.j = values[1];
    const std::int64_t i = r.i;
    const std::int64_t j = r.j;
    r.lhs = 2 * static_cast<std::int64_t>(amb);
    r.rhs = i * j * static_cast<std::int64_t>(def) + (i + j - 1) * n * (n - 1) - i * j * m * (n - 1);
    r.holds = r.lhs == r.rhs;
    return r;
}

std::int64_t optimum_ambiguity_threshold(const GroupSpec& g1, const GroupSpec& g2) {
    if (g1.order() != g2.order()) fail(ErrorKind::Inapplicable, "optimum ambiguity needs groups of equal order");
    const std::int64_t n = as_i64(g1.order());
    if (n % 2 == 1) return 2 * (n - 1);
    const std::int64_t i1 = as_i64(g1.count_involutions());
    const std::int64_t i2 = as_i64(g2.count_involutions());
    if (i1 * i2 == 1) return 2 * (n - 2);
    const std::int64_t twice = 4 * (n - 1) - 3 * std::min(i1, i2) + i1 * i2;
    if (twice % 2 != 0) fail(ErrorKind::Internal, "optimum ambiguity threshold is not an integer");
    return twice / 2;
}

bool is_optimum(const FunctionTable& f, std::uint64_t amb) {
    if (!f.is_bijective()) fail(ErrorKind::Inapplicable, "optimum ambiguity is defined for bijections");
    return static_cast<std::int64_t>(amb) == optimum_ambiguity_threshold(f.domain(), f.codomain());
}

IndicatorReport indicators(const FunctionTable& f, const DDTable& d, const DifferentialSpectrum& s) {
    IndicatorReport r;
    r.imbalance = imbalance(f);
    r.nb = derivative_imbalance(d);
    r.ambiguity = ambiguity(s);
    r.ambiguity_rescaled = ambiguity_from_nb(r.nb, f.domain(), f.codomain());
    if (r.ambiguity_rescaled != static_cast<std::int64_t>(r.ambiguity))
        fail(ErrorKind::Internal, "ambiguity from the spectrum disagrees with the rescaled derivative imbalance");
    r.deficiency = deficiency(d);
    r.per_row_ambiguity = per_row_ambiguity(d);
    if (f.domain().order() == f.codomain().order()) {
        r.optimum_threshold = optimum_ambiguity_threshold(f.domain(), f.codomain());
        if (f.is_bijective()) r.is_optimum = static_cast<std::int64_t>(r.ambiguity) == *r.optimum_threshold;
    }
    return r;
}

}  // namespace imbalance
