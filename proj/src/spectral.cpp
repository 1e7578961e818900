#include "imbalance/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "imbalance/errors.hpp"
#include "imbalance/kernels.hpp"
#include "imbalance/parallel.hpp"

namespace imbalance {

namespace {

using cd = std::complex<double>;
using i128 = __int128;

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational exact_rational(i128 num, i128 den) {
    auto abs128 = [](i128 v) { return v < 0 ? -v : v; };
    i128 a = abs128(num);
    i128 b = abs128(den);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    const i128 lim = std::numeric_limits<std::int64_t>::max();
    if (abs128(num) > lim || abs128(den) > lim) fail(ErrorKind::Capacity, "value exceeds 64-bit rational range");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

// |G1|^2 + (|G1| - 1)|G1|^2 / |G2| as a rational.
Rational nb_offset(const GroupSpec& g1, const GroupSpec& g2) {
    const std::int64_t n = as_i64(g1.order());
    return Rational(n * n) + Rational(n - 1) * Rational(n * n, as_i64(g2.order()));
}

RoundedRational round_to_denominator(double raw, const GroupSpec& g1, const GroupSpec& g2) {
    const double m = static_cast<double>(g2.order());
    const double scaled = std::nearbyint(raw * m);
    RoundedRational r;
    r.raw = raw;
    r.value = Rational(static_cast<std::int64_t>(scaled), as_i64(g2.order()));
    r.rounding_distance = std::abs(raw - r.value.to_double());
    (void)g1;
    return r;
}

bool is_power_of_two(std::size_t n) { return n && !(n & (n - 1)); }

}  // namespace

FourierTable::FourierTable(GroupSpec g1, GroupSpec g2, std::vector<std::int32_t> walsh)
    : g1_(std::move(g1)), g2_(std::move(g2)), exact_(true), walsh_(std::move(walsh)) {}

FourierTable::FourierTable(GroupSpec g1, GroupSpec g2, std::vector<cd> values)
    : g1_(std::move(g1)), g2_(std::move(g2)), exact_(false), values_(std::move(values)) {}

cd FourierTable::value(Element alpha, Element beta) const {
    const std::size_t idx = beta * g1_.order() + alpha;
    return exact_ ? cd(walsh_[idx], 0.0) : values_[idx];
}

std::span<const std::int32_t> FourierTable::walsh_column(Element beta) const {
    if (!exact_) fail(ErrorKind::Inapplicable, "Fourier table is not on the integer path");
    return {walsh_.data() + beta * g1_.order(), g1_.order()};
}

std::span<const cd> FourierTable::complex_column(Element beta) const {
    if (exact_) fail(ErrorKind::Inapplicable, "Fourier table is on the integer path");
    return {values_.data() + beta * g1_.order(), g1_.order()};
}

std::vector<cd> character_transform(const GroupSpec& g, std::span<const cd> v, int sign) {
    if (v.size() != g.order()) fail(ErrorKind::Domain, "transform input has the wrong length");
    std::vector<cd> cur(v.begin(), v.end());
    std::vector<cd> line;
    std::vector<cd> out;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::size_t n = g.orders()[j];
        const std::size_t w = g.weights()[j];
        const auto& roots = g.roots(j);
        line.resize(n);
        out.resize(n);
        for (std::size_t base = 0; base < cur.size(); base += w * n)
            for (std::size_t off = 0; off < w; ++off) {
                for (std::size_t t = 0; t < n; ++t) line[t] = cur[base + off + t * w];
                for (std::size_t a = 0; a < n; ++a) {
                    cd s = 0;
                    std::size_t k = 0;
                    for (std::size_t t = 0; t < n; ++t) {
                        s += line[t] * (sign < 0 ? std::conj(roots[k]) : roots[k]);
                        k += a;
                        if (k >= n) k -= n;
                    }
                    out[a] = s;
                }
                for (std::size_t a = 0; a < n; ++a) cur[base + off + a * w] = out[a];
            }
    }
    return cur;
}

FourierTable fourier(const FunctionTable& f) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    const std::size_t n = g1.order();
    const std::size_t m = g2.order();
    if (n > kMaxFourierEntries / m) fail(ErrorKind::Capacity, "Fourier table exceeds 2^26 entries");
    if (f.is_binary()) {
        std::vector<std::int32_t> walsh(n * m);
        parallel_for(0, m, [&](std::size_t beta) {
            std::span<std::int32_t> col(walsh.data() + beta * n, n);
            kernels::parity_signs(f.values(), static_cast<std::uint32_t>(beta), col);
            kernels::fwht(col);
        });
        return FourierTable(g1, g2, std::move(walsh));
    }
    std::vector<cd> values(n * m);
    parallel_for(0, m, [&](std::size_t beta) {
        std::vector<cd> v(n);
        for (Element x = 0; x < n; ++x) v[x] = g2.character(beta, f(x));
        auto col = character_transform(g1, v, -1);
        std::copy(col.begin(), col.end(), values.begin() + static_cast<std::ptrdiff_t>(beta * n));
    });
    return FourierTable(g1, g2, std::move(values));
}

Linearity linearity(const FourierTable& ft) {
    const std::size_t n = ft.domain().order();
    const std::size_t m = ft.codomain().order();
    Linearity l;
    if (ft.exact()) {
        std::int64_t best = 0;
        for (Element beta = 1; beta < m; ++beta)
            for (auto w : ft.walsh_column(beta)) best = std::max<std::int64_t>(best, std::abs(static_cast<std::int64_t>(w)));
        for (Element beta = 1; beta < m; ++beta) {
            auto col = ft.walsh_column(beta);
            for (Element alpha = 0; alpha < n; ++alpha)
                if (std::abs(static_cast<std::int64_t>(col[alpha])) == best) l.argmax.emplace_back(beta, alpha);
        }
        l.exact = best;
        l.value = static_cast<double>(best);
        return l;
    }
    double best = 0;
    for (Element beta = 1; beta < m; ++beta)
        for (const cd& v : ft.complex_column(beta)) best = std::max(best, std::abs(v));
    for (Element beta = 1; beta < m; ++beta) {
        auto col = ft.complex_column(beta);
        for (Element alpha = 0; alpha < n; ++alpha)
            if (best - std::abs(col[alpha]) <= 1e-9 * best) l.argmax.emplace_back(beta, alpha);
    }
    l.value = best;
    return l;
}

double nonlinearity_normalized(const FourierTable& ft, const Linearity& l) {
    return (static_cast<double>(ft.domain().order()) - l.value) / static_cast<double>(ft.codomain().order());
}

double nonlinearity_classical(const FourierTable& ft, const Linearity& l) {
    if (!ft.domain().is_elementary_2() || !ft.codomain().is_elementary_2())
        fail(ErrorKind::Inapplicable, "classical nonlinearity needs elementary 2-groups");
    return static_cast<double>(ft.domain().order()) / 2.0 - l.value / 2.0;
}

FourthMoment fourth_moment(const FourierTable& ft) {
    FourthMoment fm;
    const std::size_t m = ft.codomain().order();
    if (ft.exact()) {
        unsigned __int128 total = 0;
        for (Element beta = 0; beta < m; ++beta) total += kernels::column_moments(ft.walsh_column(beta)).sum_fourth;
        fm.exact = total;
        fm.value = static_cast<double>(total);
        return fm;
    }
    double total = 0;
    for (Element beta = 0; beta < m; ++beta)
        for (const cd& v : ft.complex_column(beta)) {
            double s = std::norm(v);
            total += s * s;
        }
    fm.value = total;
    return fm;
}

RoundedRational nb_from_fourth_moment(const FourierTable& ft, const FourthMoment& fm) {
    const GroupSpec& g1 = ft.domain();
    const GroupSpec& g2 = ft.codomain();
    const i128 nm = static_cast<i128>(g1.order()) * static_cast<i128>(g2.order());
    if (fm.exact) {
        const i128 s = static_cast<i128>(*fm.exact);
        if (s % nm != 0) fail(ErrorKind::Internal, "fourth moment is not a multiple of |G1||G2|");
        RoundedRational r;
        r.exact = true;
        r.value = exact_rational(s / nm, 1) - nb_offset(g1, g2);
        r.raw = r.value.to_double();
        return r;
    }
    double raw = fm.value / static_cast<double>(nm) - nb_offset(g1, g2).to_double();
    return round_to_denominator(raw, g1, g2);
}

AutocorrelationTable::AutocorrelationTable(GroupSpec g1, GroupSpec g2, std::vector<std::int32_t> exact_values)
    : g1_(std::move(g1)), g2_(std::move(g2)), exact_(true), ints_(std::move(exact_values)) {}

AutocorrelationTable::AutocorrelationTable(GroupSpec g1, GroupSpec g2, std::vector<cd> values)
    : g1_(std::move(g1)), g2_(std::move(g2)), exact_(false), values_(std::move(values)) {}

cd AutocorrelationTable::value(Element alpha, Element beta) const {
    const std::size_t idx = alpha * g2_.order() + beta;
    return exact_ ? cd(ints_[idx], 0.0) : values_[idx];
}

AutocorrelationTable autocorrelation(const FunctionTable& f) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    const std::size_t n = g1.order();
    const std::size_t m = g2.order();
    if (n > kMaxFourierEntries / m) fail(ErrorKind::Capacity, "autocorrelation table exceeds 2^26 entries");
    if (f.is_binary()) {
        std::vector<std::int32_t> table(n * m, 0);
        parallel_for(0, n, [&](std::size_t alpha) {
            std::span<std::int32_t> row(table.data() + alpha * m, m);
            for (Element x = 0; x < n; ++x) ++row[f(x ^ alpha) ^ f(x)];
            kernels::fwht(row);
        });
        return AutocorrelationTable(g1, g2, std::move(table));
    }
    std::vector<cd> table(n * m);
    parallel_for(0, n, [&](std::size_t alpha) {
        std::vector<cd> hist(m, 0.0);
        std::vector<Element> shifted = g1.translates(alpha);
        for (Element x = 0; x < n; ++x) hist[g2.sub(f(shifted[x]), f(x))] += 1.0;
        auto row = character_transform(g2, hist, +1);
        std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(alpha * m));
    });
    return AutocorrelationTable(g1, g2, std::move(table));
}

RoundedRational nb_from_autocorrelation(const AutocorrelationTable& c) {
    const GroupSpec& g1 = c.domain();
    const GroupSpec& g2 = c.codomain();
    const std::size_t n = g1.order();
    const std::size_t m = g2.order();
    if (c.exact()) {
        i128 total = 0;
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < m; ++b) {
                const i128 v = static_cast<i128>(c.value(a, b).real());
                total += v * v;
            }
        RoundedRational r;
        r.exact = true;
        r.value = exact_rational(total, static_cast<i128>(m)) - nb_offset(g1, g2);
        r.raw = r.value.to_double();
        return r;
    }
    double total = 0;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < m; ++b) total += std::norm(c.value(a, b));
    return round_to_denominator(total / static_cast<double>(m) - nb_offset(g1, g2).to_double(), g1, g2);
}

SecondDerivativeSum second_derivative_charsum(const FunctionTable& f) {
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    const std::size_t n = g1.order();
    const std::size_t m = g2.order();
    if (n > kSecondDerivativeCap) fail(ErrorKind::Capacity, "second-derivative sum is limited to |G1| <= 1024");
    // Histogram of D_a D_b F(x) over all (a, b, x), one partial histogram per a.
    std::vector<std::vector<std::uint32_t>> partial(n, std::vector<std::uint32_t>(m, 0));
    if (f.is_binary()) {
        parallel_for(0, n, [&](std::size_t a) {
            auto& h = partial[a];
            for (Element b = 0; b < n; ++b)
                for (Element x = 0; x < n; ++x) ++h[f(x ^ a ^ b) ^ f(x ^ a) ^ f(x ^ b) ^ f(x)];
        });
    } else {
        std::vector<Element> sum_table(n * n);
        for (Element x = 0; x < n; ++x) {
            auto row = g1.translates(x);
            std::copy(row.begin(), row.end(), sum_table.begin() + static_cast<std::ptrdiff_t>(x * n));
        }
        auto plus = [&](Element x, Element y) { return sum_table[x * n + y]; };
        parallel_for(0, n, [&](std::size_t a) {
            auto& h = partial[a];
            for (Element b = 0; b < n; ++b)
                for (Element x = 0; x < n; ++x) {
                    Element xa = plus(x, a);
                    Element v = g2.add(g2.sub(f(plus(xa, b)), f(xa)), g2.sub(f(x), f(plus(x, b))));
                    ++h[v];
                }
        });
    }
    std::vector<std::int64_t> hist(m, 0);
    for (const auto& h : partial)
        for (Element v = 0; v < m; ++v) hist[v] += h[v];

    SecondDerivativeSum s;
    if (f.is_binary()) {
        std::vector<std::int32_t> t(hist.begin(), hist.end());
        kernels::fwht(t);
        std::int64_t total = 0;
        for (auto v : t) total += v;
        s.exact = total;
        s.real = static_cast<double>(total);
        return s;
    }
    std::vector<cd> h(hist.begin(), hist.end());
    auto t = character_transform(g2, h, +1);
    cd total = std::accumulate(t.begin(), t.end(), cd(0.0));
    s.real = total.real();
    s.imag = total.imag();
    return s;
}

RoundedRational nb_from_second_derivative(const SecondDerivativeSum& s, const GroupSpec& g1, const GroupSpec& g2) {
    if (s.exact) {
        RoundedRational r;
        r.exact = true;
        r.value = exact_rational(*s.exact, static_cast<i128>(g2.order())) - nb_offset(g1, g2);
        r.raw = r.value.to_double();
        return r;
    }
    return round_to_denominator(s.real / static_cast<double>(g2.order()) - nb_offset(g1, g2).to_double(), g1, g2);
}

CrossIdentityReport cross_identities(const FunctionTable& f, const DDTable& d, const FourierTable& ft) {
    CrossIdentityReport r;
    const GroupSpec& g1 = f.domain();
    const GroupSpec& g2 = f.codomain();
    const double n = static_cast<double>(g1.order());
    const double m = static_cast<double>(g2.order());
    for (Element a = 0; a < d.rows(); ++a)
        for (std::uint64_t v : d.row(a)) r.delta_squares += v * v;

    FourthMoment fm = fourth_moment(ft);
    AutocorrelationTable c = autocorrelation(f);
    std::optional<SecondDerivativeSum> s;
    if (g1.order() <= kSecondDerivativeCap) s = second_derivative_charsum(f);

    r.exact = ft.exact() && c.exact();
    std::vector<std::string> broken;
    auto relative = [&](double v) {
        double ref = static_cast<double>(r.delta_squares);
        return std::abs(v - ref) / std::max(ref, 1.0);
    };
    if (r.exact) {
        const i128 nm = static_cast<i128>(g1.order()) * static_cast<i128>(g2.order());
        const i128 ref = static_cast<i128>(r.delta_squares);
        const i128 s4 = static_cast<i128>(*fm.exact);
        if (s4 != ref * nm) broken.push_back("fourth moment");
        i128 c2 = 0;
        for (Element a = 0; a < g1.order(); ++a)
            for (Element b = 0; b < g2.order(); ++b) {
                const i128 v = static_cast<i128>(c.value(a, b).real());
                c2 += v * v;
            }
        if (c2 != ref * static_cast<i128>(g2.order())) broken.push_back("autocorrelation");
        if (s && static_cast<i128>(*s->exact) != ref * static_cast<i128>(g2.order())) broken.push_back("second derivative");
        r.fourier = static_cast<double>(s4) / static_cast<double>(nm);
        r.autocorrelation = static_cast<double>(c2) / m;
        if (s) r.second_derivative = static_cast<double>(*s->exact) / m;
    } else {
        r.fourier = fm.value / (n * m);
        double c2 = 0;
        for (Element a = 0; a < g1.order(); ++a)
            for (Element b = 0; b < g2.order(); ++b) c2 += std::norm(c.value(a, b));
        r.autocorrelation = c2 / m;
        if (s) r.second_derivative = s->real / m;
    }
    r.max_relative_deviation = std::max(relative(r.fourier), relative(r.autocorrelation));
    if (r.second_derivative) r.max_relative_deviation = std::max(r.max_relative_deviation, relative(*r.second_derivative));
    if (!r.exact) {
        if (relative(r.fourier) > 1e-6) broken.push_back("fourth moment");
        if (relative(r.autocorrelation) > 1e-6) broken.push_back("autocorrelation");
        if (r.second_derivative && relative(*r.second_derivative) > 1e-6) broken.push_back("second derivative");
        if (s && std::abs(s->imag) > 1e-6 * std::max(std::abs(s->real), 1.0)) broken.push_back("second derivative imaginary part");
    }
    if (!broken.empty()) {
        std::string msg = "sum of squared differential counts disagrees with:";
        for (const auto& b : broken) msg += " " + b + ";";
        fail(ErrorKind::IdentityViolation, msg);
    }
    return r;
}

PlateauedProfile plateaued_profile(const FourierTable& ft) {
    if (!ft.exact()) fail(ErrorKind::Inapplicable, "plateaued profile needs the integer Walsh path");
    const std::size_t m = ft.codomain().order();
    PlateauedProfile p;
    p.plateaued.assign(m, false);
    p.amplitude_squared.assign(m, 0);
    p.vectorial = true;
    for (Element beta = 1; beta < m; ++beta) {
        std::uint64_t level = 0;
        bool ok = true;
        for (auto w : ft.walsh_column(beta)) {
            const std::uint64_t sq = static_cast<std::uint64_t>(static_cast<std::int64_t>(w) * w);
            if (sq == 0) continue;
            if (level == 0) level = sq;
            else if (sq != level) ok = false;
        }
        p.plateaued[beta] = ok;
        p.amplitude_squared[beta] = ok ? level : 0;
        p.vectorial = p.vectorial && ok;
    }
    return p;
}

Rational nb_from_plateaued(const PlateauedProfile& p, const GroupSpec& g1, const GroupSpec& g2) {
    if (!p.vectorial) fail(ErrorKind::Inapplicable, "some component is not plateaued");
    const i128 n = static_cast<i128>(g1.order());
    const i128 m = static_cast<i128>(g2.order());
    i128 sum = 0;
    for (std::size_t beta = 1; beta < p.amplitude_squared.size(); ++beta) sum += p.amplitude_squared[beta];
    return exact_rational(sum * n - n * n * (m - 1), m);
}

bool power_plateaued_test(const FieldSpec& field, const FunctionTable& f) {
    if (field.characteristic() != 2) fail(ErrorKind::Inapplicable, "power plateaued test needs characteristic 2");
    if (!power_exponent(field, f)) fail(ErrorKind::Inapplicable, "table is not a power map of the field");
    const std::size_t n = f.domain().order();
    const std::size_t m = f.codomain().order();
    if (n > (std::size_t{1} << 12)) fail(ErrorKind::Capacity, "power plateaued test is limited to 2^12 elements");
    if (!is_power_of_two(m)) fail(ErrorKind::Internal, "codomain is not a 2-group");
    std::vector<std::uint64_t> at_one(m, 0);
    std::vector<std::uint64_t> at_zero(m, 0);
    std::vector<std::uint32_t> d(n);
    for (Element a = 0; a < n; ++a) {
        for (Element x = 0; x < n; ++x) d[x] = static_cast<std::uint32_t>(f(x ^ a) ^ f(x));
        for (Element b = 0; b < n; ++b) {
            ++at_one[d[b] ^ d[1]];
            ++at_zero[d[b] ^ d[0]];
        }
    }
    return at_one == at_zero;
}

PowerPlateauedNb nb_power_plateaued(const FieldSpec& field, const FunctionTable& f, const DDTable& d) {
    if (!power_plateaued_test(field, f)) fail(ErrorKind::Inapplicable, "power map is not plateaued");
    const std::int64_t n = as_i64(f.domain().order());
    const std::int64_t m = as_i64(f.codomain().order());
    PowerPlateauedNb r;
    r.delta11 = d(1, 1);
    const std::int64_t delta = r.delta11;
    const Rational tail = Rational(n * n, m) * Rational(n - 1);
    r.nb = Rational(n * (n - 1) * delta) - tail;
    r.nb_printed = Rational(n * (n - 1) * (delta - 1)) - tail;
    r.ambiguity = Rational(n / 2 * (n - 1) * (delta - 1));
    r.printed_form_discrepancy = r.nb != r.nb_printed;
    return r;
}

}  // namespace imbalance
