#include "imbalance/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "imbalance/errors.hpp"

namespace imbalance {

namespace {

BigRational q(std::int64_t v) { return BigRational(v); }
BigRational q(const Rational& r) { return BigRational(BigInt(r.num()), BigInt(r.den())); }
BigRational frac(std::int64_t a, std::int64_t b) { return BigRational(BigInt(a), BigInt(b)); }

BigRational pow2(long e) {
    BigInt p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

BigInt floor_of(const BigRational& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    BigInt fl = num / den;
    if (num % den != 0 && num < 0) fl -= 1;
    return fl;
}

BigInt ceil_of(const BigRational& v) {
    BigInt fl = floor_of(v);
    return BigRational(fl) == v ? fl : BigInt(fl + 1);
}

double dbl(const BigRational& v) { return v.convert_to<double>(); }

std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

struct Builder {
    std::vector<BoundRecord> out;

    BoundRecord& open(std::string id, std::string description) {
        BoundRecord r;
        r.id = std::move(id);
        r.description = std::move(description);
        out.push_back(std::move(r));
        return out.back();
    }

    void skip(std::string id, std::string description, std::string why) {
        BoundRecord& r = open(std::move(id), std::move(description));
        r.applicable = false;
        r.applicability = std::move(why);
    }

    static void compare(BoundRecord& r, Relation rel, BoundValue lhs, BoundValue rhs) {
        r.applicable = true;
        r.relation = rel;
        if (lhs.exact() && rhs.exact()) {
            const BigRational& l = lhs.rational();
            const BigRational& h = rhs.rational();
            switch (rel) {
                case Relation::LessEqual: r.holds = l <= h; break;
                case Relation::GreaterEqual: r.holds = l >= h; break;
                case Relation::Equal: r.holds = l == h; break;
                case Relation::Greater: r.holds = l > h; break;
            }
            r.tight = rel != Relation::Greater && l == h;
        } else {
            const double l = lhs.approx();
            const double h = rhs.approx();
            const double tol = kBoundTolerance * std::max(1.0, std::abs(h));
            const bool close = std::abs(l - h) <= tol;
            switch (rel) {
                case Relation::LessEqual: r.holds = l <= h + tol; break;
                case Relation::GreaterEqual: r.holds = l >= h - tol; break;
                case Relation::Equal: r.holds = close; break;
                case Relation::Greater: r.holds = l > h + tol; break;
            }
            r.tight = rel != Relation::Greater && close;
        }
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
    }
};

bool odd_or_upper_half(unsigned n, unsigned m) {
    return (n % 2 == 1 && m < n) || (n % 2 == 0 && 2 * m > n && m < n);
}

}  // namespace

double BoundValue::approx() const {
    if (exact()) return dbl(rational());
    return std::get<double>(value_);
}

std::string BoundValue::str() const {
    if (exact()) {
        const BigRational& r = rational();
        BigInt den = boost::multiprecision::denominator(r);
        std::string s = boost::multiprecision::numerator(r).str();
        return den == 1 ? s : s + "/" + den.str();
    }
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(value_);
    return os.str();
}

const char* to_string(Relation r) {
    switch (r) {
        case Relation::LessEqual: return "le";
        case Relation::GreaterEqual: return "ge";
        case Relation::Equal: return "eq";
        case Relation::Greater: return "gt";
    }
    return "?";
}

std::vector<BoundRecord> evaluate_bounds(const Analysis& a, std::span<const AffineMap> affine_shifts) {
    Builder b;
    const GroupSpec& g1 = a.f.domain();
    const GroupSpec& g2 = a.f.codomain();
    const std::int64_t N = static_cast<std::int64_t>(g1.order());
    const std::int64_t M = static_cast<std::int64_t>(g2.order());
    const BigRational nq = q(N);
    const BigRational mq = q(M);
    const BigRational nb = q(a.indicators.nb);
    const std::int64_t amb = static_cast<std::int64_t>(a.indicators.ambiguity);
    const std::int64_t def = static_cast<std::int64_t>(a.indicators.deficiency);
    const std::int64_t k = a.spectrum.delta;
    const BigRational n2_over_m = nq * nq / mq;
    const bool bin = a.binary();
    const unsigned n = bin ? g1.dimension() : 0;
    const unsigned m = bin ? g2.dimension() : 0;
    const std::string not_binary = "needs G1 = F_2^n and G2 = F_2^m";
    const std::string no_fourier = "Fourier table over its size cap";

    // Exact classical nonlinearity on the integer path.
    std::optional<BigRational> nl_exact;
    if (bin && a.linearity && a.linearity->exact) nl_exact = (nq - q(*a.linearity->exact)) / 2;

    {
        auto& r = b.open("B1", "NB_F >= 0, equality iff F is perfect nonlinear");
        r.applicability = "all functions";
        Builder::compare(r, Relation::GreaterEqual, nb, BigRational(0));
        r.context["pn"] = a.pn;
    }
    {
        auto& r = b.open("B2", "NB_F <= (|G1|-1)(|G1|^2 - |G1|^2/|G2|), equality iff F is affine");
        r.applicability = "all functions";
        Builder::compare(r, Relation::LessEqual, nb, (nq - 1) * (nq * nq - n2_over_m));
        r.context["affine"] = k == N;
    }
    {
        const BigRational coef = mq / ((nq - 1) * (mq - 1));
        const BigRational centre = nq - nq / mq;
        auto shift_bound = [&](const std::string& id, const FunctionTable& shifted) {
            auto& r = b.open(id, "NB_F >= |G2|/((|G1|-1)(|G2|-1)) (Nb_{F+A} - (|G1| - |G1|/|G2|))^2");
            r.applicability = "affine A: G1 -> G2";
            const BigRational nb_shift = q(imbalance(shifted));
            const BigRational d = nb_shift - centre;
            Builder::compare(r, Relation::GreaterEqual, nb, coef * d * d);
        };
        shift_bound("B3.0", a.f);
        for (std::size_t i = 0; i < affine_shifts.size(); ++i) {
            const AffineMap& s = affine_shifts[i];
            const std::string id = "B3." + std::to_string(i + 1);
            if (!(s.table().domain() == g1) || !(s.table().codomain() == g2)) {
                b.skip(id, "single affine shift bound", "shift is not a map G1 -> G2");
                continue;
            }
            std::vector<std::uint32_t> v(g1.order());
            for (Element x = 0; x < g1.order(); ++x) v[x] = static_cast<std::uint32_t>(g2.add(a.f(x), s(x)));
            shift_bound(id, FunctionTable(g1, g2, std::move(v)));
        }
    }
    {
        auto& r = b.open("B4", "NB_F >= |G1|^2 (|G1|-1)(1/T_F - 1/|G2|)");
        r.applicability = "all functions";
        const BigRational tf = q(static_cast<std::int64_t>(a.t_f));
        Builder::compare(r, Relation::GreaterEqual, nb, nq * nq * (nq - 1) * (1 / tf - 1 / mq));
        r.context["T_F"] = static_cast<std::int64_t>(a.t_f);
    }
    if (g1.is_elementary_2()) {
        auto& r = b.open("B5", "NB_F >= max{0, (|G1|-1)(2|G1| - |G1|^2/|G2|)}");
        r.applicability = "G1 an elementary 2-group";
        Builder::compare(r, Relation::GreaterEqual, nb, std::max(BigRational(0), (nq - 1) * (2 * nq - n2_over_m)));
    } else {
        b.skip("B5", "characteristic-2 bound", "G1 is not an elementary 2-group");
    }

    if (bin && a.nonlinearity_classical) {
        const double nl = *a.nonlinearity_classical;
        {
            auto& r = b.open("B6", "NL(F) <= 2^{n-1} - sqrt(2^n + 2^{m-n} NB_F/(2^m-1)) / 2");
            r.applicability = "binary (n, m)-function";
            const double inner = dbl(pow2(n) + pow2(static_cast<long>(m) - n) * nb / (pow2(m) - 1));
            Builder::compare(r, Relation::LessEqual, nl, dbl(pow2(n - 1)) - 0.5 * std::sqrt(inner));
        }
        {
            auto& r = b.open("B7", "covering radius / Sidelnikov-Chabaud-Vaudenay unified bound");
            r.applicability = "binary (n, m)-function";
            const long mn = std::min<long>(m, static_cast<long>(n) - 1);
            const BigRational inner =
                ((pow2(n) - 1) * pow2(static_cast<long>(n + m) - mn) + pow2(n + m) - pow2(2 * n)) / (pow2(m) - 1);
            Builder::compare(r, Relation::LessEqual, nl, dbl(pow2(n - 1)) - 0.5 * std::sqrt(dbl(inner)));
        }
        if (n >= 2 && BigRational(m) < pow2(n) - 2) {
            auto& r = b.open("B8.3", "NL(F) <= 2^{n-1} - (m/2) 2^{n-1}/(2^{n-1}-1)");
            r.applicability = "binary, n >= 2, m < 2^n - 2";
            const BigRational rhs = pow2(n - 1) - frac(m, 2) * pow2(n - 1) / (pow2(n - 1) - 1);
            Builder::compare(r, Relation::LessEqual, *nl_exact, rhs);
        } else {
            b.skip("B8.3", "coding bound", "needs n >= 2 and m < 2^n - 2");
        }
        if (BigRational(m) < pow2(n) - n) {
            auto& r = b.open("B8.4", "NL(F) <= 2^{n-1} - n - m as printed");
            r.applicability = "binary, m < 2^n - n";
            Builder::compare(r, Relation::LessEqual, *nl_exact, pow2(n - 1) - n - m);
            r.discrepancy = true;
            r.note = "printed bound is violated by bent (n=2, m=1) and APN (n=3, m=3) functions; no corrected form";
        } else {
            b.skip("B8.4", "coding bound", "needs m < 2^n - n");
        }
        if (n <= 12) {
            auto& r = b.open("B8.5", "sum_{i <= floor((NL-1)/2)} C(2^n, i) <= 2^{2^n - n - m - 1}");
            r.applicability = "binary, n <= 12";
            const BigInt top = floor_of((*nl_exact - 1) / 2);
            const BigInt len = BigInt(1) << n;
            BigInt sum = 0;
            BigInt term = 1;
            for (BigInt i = 0; i <= top; ++i) {
                sum += term;
                term = term * (len - i) / (i + 1);
            }
            Builder::compare(r, Relation::LessEqual, BigRational(sum),
                             pow2(static_cast<long>(len.convert_to<long>()) - n - m - 1));
        } else {
            b.skip("B8.5", "sphere-packing coding bound", "n > 12");
        }
    } else {
        for (const char* id : {"B6", "B7", "B8.3", "B8.4", "B8.5"})
            b.skip(id, "binary nonlinearity bound", bin ? no_fourier : not_binary);
    }

    if (N == M && a.bijective) {
        auto& r = b.open("B9", "optimum ambiguity lower bound for bijections");
        r.applicability = "bijection between groups of equal order";
        Builder::compare(r, Relation::GreaterEqual, q(amb), q(*a.indicators.optimum_threshold));
        r.context["iota1"] = static_cast<std::int64_t>(g1.count_involutions());
        r.context["iota2"] = static_cast<std::int64_t>(g2.count_involutions());
    } else {
        b.skip("B9", "optimum ambiguity lower bound", "needs a bijection between groups of equal order");
    }

    if (g1 == g2) {
        const std::int64_t rr = N / k;
        const std::int64_t ss = N % k;
        auto& lo = b.open("B10.lower", "C(k, 2) <= A(F)");
        lo.applicability = "G1 = G2";
        Builder::compare(lo, Relation::GreaterEqual, q(amb), q(static_cast<std::int64_t>(choose2(k))));
        auto& hi = b.open("B10.upper", "A(F) <= (n-1)(r C(k,2) + C(s,2)), n = r k + s");
        hi.applicability = "G1 = G2";
        Builder::compare(hi, Relation::LessEqual, q(amb),
                         q((N - 1) * (rr * static_cast<std::int64_t>(choose2(k)) + static_cast<std::int64_t>(choose2(ss)))));
        for (auto* rec : {&b.out[b.out.size() - 2], &b.out.back()}) {
            rec->context["k"] = k;
            rec->context["r"] = rr;
            rec->context["s"] = ss;
        }
    } else {
        b.skip("B10.lower", "ambiguity of differentially k-uniform maps", "needs G1 = G2");
        b.skip("B10.upper", "ambiguity of differentially k-uniform maps", "needs G1 = G2");
    }

    if (a.nonlinearity_normalized) {
        auto& r = b.open("B11", "normalized NL(F) <= |G1|/|G2| - sqrt(|G1| + |G2| NB_F/(|G1|(|G2|-1))) / |G2|");
        r.applicability = "all functions";
        const double inner = dbl(nq + mq * nb / (nq * (mq - 1)));
        Builder::compare(r, Relation::LessEqual, *a.nonlinearity_normalized,
                         double(N) / double(M) - std::sqrt(inner) / double(M));
    } else {
        b.skip("B11", "general nonlinearity bound", no_fourier);
    }
    {
        auto& r = b.open("B12", "NB_F >= (|G1|-1)(ceil(|G1|^2/|G2|) - |G1|^2/|G2|)");
        r.applicability = "all functions";
        Builder::compare(r, Relation::GreaterEqual, nb, (nq - 1) * (BigRational(ceil_of(n2_over_m)) - n2_over_m));
    }
    {
        auto& r = b.open("B13", "differential-k lower bound with ceilings");
        r.applicability = "all functions";
        const BigRational kq = q(k);
        const BigRational rhs = (nq - 2) * BigRational(ceil_of(n2_over_m)) +
                                BigRational(ceil_of((nq - kq) * (nq - kq) / (mq - 1))) + kq * kq - (nq - 1) * n2_over_m;
        Builder::compare(r, Relation::GreaterEqual, nb, rhs);
        r.context["k"] = k;
        auto& e = b.open("B13.eq20", "NB_F >= |G2|/(|G2|-1) (k - |G1|/|G2|)^2");
        e.applicability = "all functions";
        const BigRational d = kq - nq / mq;
        Builder::compare(e, Relation::GreaterEqual, nb, mq / (mq - 1) * d * d);
        e.context["k"] = k;
    }

    const bool b14 = bin && odd_or_upper_half(n, m);
    if (b14) {
        auto& r2 = b.open("B14.2", "NB_F >= 2 when no PN function exists");
        r2.applicability = "binary, n odd and m < n, or n even and n/2 < m < n";
        Builder::compare(r2, Relation::GreaterEqual, nb, BigRational(2));
        auto& r6 = b.open("B14.6", "NB_F >= 6 when no PN function exists");
        r6.applicability = r2.applicability;
        Builder::compare(r6, Relation::GreaterEqual, nb, BigRational(6));
    } else {
        b.skip("B14.2", "NB_F >= 2", "needs binary n odd and m < n, or n even and n/2 < m < n");
        b.skip("B14.6", "NB_F >= 6", "needs binary n odd and m < n, or n even and n/2 < m < n");
    }

    if (bin) {
        auto& r = b.open("B15", "NB_F >= (k^2 - 2k) N_k + (2^n-1)(2^{n+1} - 2^{2n-m})");
        r.applicability = "binary (n, m)-function";
        const std::int64_t nk = static_cast<std::int64_t>(a.spectrum.count(static_cast<std::uint32_t>(k)));
        const BigRational rhs = q(k * k - 2 * k) * nk + (pow2(n) - 1) * (pow2(n + 1) - pow2(2 * static_cast<long>(n) - m));
        Builder::compare(r, Relation::GreaterEqual, nb, rhs);
        bool three = true;
        for (auto [i, c] : a.spectrum.counts) three = three && (i == 0 || i == 2 || i == k);
        r.context["k"] = k;
        r.context["N_k"] = nk;
        r.context["values_in_0_2_k"] = three;
    } else {
        b.skip("B15", "refined differential-k bound", not_binary);
    }
    if (bin && n == m) {
        const BigRational rhs = (pow2(n) - 1) * pow2(static_cast<long>(n) - 1);
        auto& ra = b.open("B16.ambiguity", "A(F) >= (2^n-1) 2^{n-1}, equality iff APN");
        ra.applicability = "binary (n, n)-function";
        Builder::compare(ra, Relation::GreaterEqual, q(amb), rhs);
        auto& rd = b.open("B16.deficiency", "D(F) >= (2^n-1) 2^{n-1}, equality iff APN");
        rd.applicability = "binary (n, n)-function";
        Builder::compare(rd, Relation::GreaterEqual, q(def), rhs);
        ra.context["apn"] = rd.context["apn"] = a.apn;
    } else {
        b.skip("B16.ambiguity", "APN ambiguity bound", "needs a binary (n, n)-function");
        b.skip("B16.deficiency", "APN deficiency bound", "needs a binary (n, n)-function");
    }

    // Fourth moment bounds.
    std::optional<BoundValue> s4;
    if (a.fourth_moment) {
        if (a.fourth_moment->exact) {
            const unsigned __int128 v = *a.fourth_moment->exact;
            BigInt big = static_cast<std::uint64_t>(v >> 64);
            big <<= 64;
            big += static_cast<std::uint64_t>(v);
            s4 = BoundValue(BigRational(big));
        } else {
            s4 = BoundValue(a.fourth_moment->value);
        }
        auto& r = b.open("B17.cs", "sum |hat F|^4 >= |G1|^4 + (|G2|-1)|G1|^3");
        r.applicability = "all functions";
        Builder::compare(r, Relation::GreaterEqual, *s4, nq * nq * nq * nq + (mq - 1) * nq * nq * nq);
    } else {
        b.skip("B17.cs", "fourth moment lower bound", no_fourier);
    }
    if (bin && s4 && n > 2 && (odd_or_upper_half(n, m) || m == n)) {
        auto& r = b.open("B17.cor14", "sum |hat F|^4 >= 2^{4n} + 2^{3n}(2^m-1) + 3 2^{n+m+1}");
        r.applicability = "binary, n > 2, and n odd with m <= n or n even with n/2 < m <= n";
        Builder::compare(r, Relation::GreaterEqual, *s4, pow2(4 * n) + pow2(3 * n) * (pow2(m) - 1) + 3 * pow2(n + m + 1));
    } else {
        b.skip("B17.cor14", "improved fourth moment bound", "needs binary, n > 2 and a qualifying m");
    }
    if (bin && s4 && n >= 3 && m + 1 == n) {
        auto& r = b.open("B17.nm1", "sum |hat F|^4 >= 3 2^{4n-1} - 2^{3n} + 2^{2n+2}");
        r.applicability = "binary, n >= 3, m = n - 1";
        Builder::compare(r, Relation::GreaterEqual, *s4, 3 * pow2(4 * n - 1) - pow2(3 * n) + pow2(2 * n + 2));
    } else {
        b.skip("B17.nm1", "(n, n-1) fourth moment bound", "needs binary, n >= 3, m = n - 1");
    }
    if (bin && n >= 3 && m + 2 == n) {
        auto& r = b.open("B17.nm2.prop", "NB_F >= k(k-4) - 2 delta_k");
        r.applicability = "binary, m = n - 2";
        const std::int64_t dk = k % 4 == 0 ? 0 : 2;
        Builder::compare(r, Relation::GreaterEqual, nb, q(k * (k - 4) - 2 * dk));
        r.context["k"] = k;
        r.context["delta_k"] = dk;
    } else {
        b.skip("B17.nm2.prop", "(n, n-2) bound", "needs binary, m = n - 2");
    }
    if (bin && s4 && n >= 5 && m + 2 == n) {
        auto& r = b.open("B17.nm2.cor", "sum |hat F|^4 >= 5 2^{4n-2} - 2^{3n} + 2^{2n+1}");
        r.applicability = "binary, n >= 5, m = n - 2";
        Builder::compare(r, Relation::GreaterEqual, *s4, 5 * pow2(4 * n - 2) - pow2(3 * n) + pow2(2 * n + 1));
    } else {
        b.skip("B17.nm2.cor", "(n, n-2) fourth moment bound", "needs binary, n >= 5, m = n - 2");
    }
    if (bin && a.nonlinearity_classical && n >= 3 && m + 1 == n) {
        auto& r = b.open("B17.nl_nm1", "NL(F) <= 2^{n-1} - sqrt(2^n + 4/(2^{n-1}-1)) / 2");
        r.applicability = "binary, n >= 3, m = n - 1";
        Builder::compare(r, Relation::LessEqual, *a.nonlinearity_classical,
                         dbl(pow2(n - 1)) - 0.5 * std::sqrt(dbl(pow2(n) + 4 / (pow2(n - 1) - 1))));
    } else {
        b.skip("B17.nl_nm1", "(n, n-1) nonlinearity bound", "needs binary, n >= 3, m = n - 1");
    }
    if (bin && a.nonlinearity_classical && n >= 5 && m + 2 == n) {
        auto& r = b.open("B17.nl_nm2", "NL(F) <= 2^{n-1} - sqrt(2^n + 1/(2^{n-2}-1)) / 2");
        r.applicability = "binary, n >= 5, m = n - 2";
        Builder::compare(r, Relation::LessEqual, *a.nonlinearity_classical,
                         dbl(pow2(n - 1)) - 0.5 * std::sqrt(dbl(pow2(n) + 1 / (pow2(n - 2) - 1))));
        r.note = "the fourth moment bound supports 2/(2^{n-2}-1) inside the root; the weaker printed 1/(2^{n-2}-1) is evaluated";
    } else {
        b.skip("B17.nl_nm2", "(n, n-2) nonlinearity bound", "needs binary, n >= 5, m = n - 2");
    }

    // Nonlinearity of optimum-ambiguity permutations (normalized convention).
    const bool optimum = a.indicators.is_optimum.value_or(false) && a.nonlinearity_normalized;
    auto sandwich = [&](const std::string& id, double lower_inner, double upper_inner) {
        const double nlv = *a.nonlinearity_normalized;
        const double nd = static_cast<double>(N);
        auto& lo = b.open(id + ".lower", "normalized NL of an optimum-ambiguity permutation, lower side");
        lo.applicability = "optimum-ambiguity permutation, normalized nonlinearity";
        Builder::compare(lo, Relation::GreaterEqual, nlv, (nd - std::sqrt(lower_inner)) / nd);
        auto& hi = b.open(id + ".upper", "normalized NL of an optimum-ambiguity permutation, upper side");
        hi.applicability = lo.applicability;
        Builder::compare(hi, Relation::LessEqual, nlv, (nd - std::sqrt(upper_inner)) / nd);
    };
    const double nd = static_cast<double>(N);
    if (optimum && g1 == g2 && g1.is_elementary() && g1.orders().front() % 2 == 1) {
        sandwich("B18.fq", 5 * nd - 4, nd + 4);
    } else {
        b.skip("B18.fq.lower", "optimum-ambiguity nonlinearity sandwich over F_q", "needs an optimum permutation of F_q, q odd");
        b.skip("B18.fq.upper", "optimum-ambiguity nonlinearity sandwich over F_q", "needs an optimum permutation of F_q, q odd");
    }
    if (optimum && g1 == g2 && g1.is_cyclic()) {
        if (N % 2 == 1) sandwich("B18.cyclic", 5 * nd - 4, nd + 4);
        else sandwich("B18.cyclic", 5 * nd - 6, nd + 4 - 4 / (nd - 1));
    } else {
        b.skip("B18.cyclic.lower", "optimum-ambiguity nonlinearity sandwich on Z_n", "needs an optimum permutation of Z_n");
        b.skip("B18.cyclic.upper", "optimum-ambiguity nonlinearity sandwich on Z_n", "needs an optimum permutation of Z_n");
    }

    // Power maps over GF(2^n).
    const bool power = bin && a.field && a.field->characteristic() == 2 && a.power_exponent;
    if (power) {
        const auto row = a.ddt.row(1);
        std::int64_t sq = 0;
        for (std::int64_t v : row) sq += v * v;
        const BigRational tail = pow2(2 * static_cast<long>(n) - m) * (pow2(n) - 1);
        auto& r = b.open("B19.power_nb", "NB_F = (2^n-1) sum_b delta(1,b)^2 - 2^{2n-m}(2^n-1)");
        r.applicability = "power map over GF(2^n)";
        Builder::compare(r, Relation::Equal, nb, (pow2(n) - 1) * sq - tail);
        r.context["d"] = static_cast<std::int64_t>(*a.power_exponent);

        std::int64_t kp = 0;
        for (std::int64_t v : row) kp = std::max(kp, v);
        const std::int64_t nkp = std::count(row.begin(), row.end(), static_cast<std::uint32_t>(kp));
        auto& rk = b.open("B19.power_k", "NB_F >= (k^2-2k)(2^n-1) N'_k + (2^n-1)(2^{n+1} - 2^{2n-m})");
        rk.applicability = "power map over GF(2^n)";
        Builder::compare(rk, Relation::GreaterEqual, nb,
                         q(kp * kp - 2 * kp) * (pow2(n) - 1) * nkp + (pow2(n) - 1) * (pow2(n + 1) - pow2(2 * static_cast<long>(n) - m)));
        rk.context["k"] = kp;
        rk.context["N_k_prime"] = nkp;

        if (n % 2 == 0 && m == n && a.bijective) {
            auto& ri = b.open("B19.inverse", "NB_F >= (2^n-1)(2^n+8) for power permutations, n even");
            ri.applicability = "power permutation of GF(2^n), n even";
            Builder::compare(ri, Relation::GreaterEqual, nb, (pow2(n) - 1) * (pow2(n) + 8));
        } else {
            b.skip("B19.inverse", "power permutation bound", "needs a power permutation of GF(2^n) with n even");
        }
        std::optional<PowerPlateauedNb> pp;
        if (N <= (1 << 12) && power_plateaued_test(*a.field, a.f)) pp = nb_power_plateaued(*a.field, a.f, a.ddt);
        if (pp) {
            auto& rp = b.open("B19.power_plateaued", "NB_F = 2^n(2^n-1) delta(1,1) - 2^{2n-m}(2^n-1)");
            rp.applicability = "plateaued power map over GF(2^n)";
            Builder::compare(rp, Relation::Equal, nb, q(pp->nb));
            rp.discrepancy = pp->printed_form_discrepancy;
            rp.note = "printed form with (delta(1,1) - 1) evaluates to " + pp->nb_printed.str() +
                      "; the form carried through the derivation is evaluated";
            rp.context["delta11"] = pp->delta11;
        } else {
            b.skip("B19.power_plateaued", "plateaued power map identity", "power map is not plateaued or exceeds 2^12 elements");
        }
    } else {
        for (const char* id : {"B19.power_nb", "B19.power_k", "B19.inverse", "B19.power_plateaued"})
            b.skip(id, "power map identity", "needs a power map over GF(2^n)");
    }
    if (bin && a.plateaued && a.plateaued->vectorial) {
        auto& r = b.open("B19.plateaued", "NB_F = 2^{n-m} sum mu_beta^2 - 2^{2n-m}(2^m-1)");
        r.applicability = "every component plateaued";
        Builder::compare(r, Relation::Equal, nb, q(nb_from_plateaued(*a.plateaued, g1, g2)));
    } else {
        b.skip("B19.plateaued", "plateaued identity", "needs binary groups with every component plateaued");
    }

    if (bin) {
        auto& r = b.open("open_problem", "NB_F > 2^{n-m+2}(2^{n/2}+1)(2^m-1)");
        r.applicability = "binary; informational only";
        r.informational = true;
        const double rhs = dbl(pow2(static_cast<long>(n) - m + 2) * (pow2(m) - 1)) * (std::pow(2.0, n / 2.0) + 1);
        Builder::compare(r, Relation::Greater, dbl(nb), rhs);
    } else {
        b.skip("open_problem", "open problem quantity", not_binary);
        b.out.back().informational = true;
    }
    return b.out;
}

std::vector<const BoundRecord*> unsound_records(const std::vector<BoundRecord>& ledger) {
    std::vector<const BoundRecord*> bad;
    for (const auto& r : ledger)
        if (r.applicable && !r.holds && !r.discrepancy && !r.informational) bad.push_back(&r);
    return bad;
}

}  // namespace imbalance
