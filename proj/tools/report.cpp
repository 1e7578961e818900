#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace imbalance::cli {

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json to_json(const BoundValue& v) {
    if (!v.exact()) return round12(v.approx());
    const BigRational& r = v.rational();
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()},
                {"approx", round12(v.approx())}};
}

json to_json(const FunctionTable& f) {
    return json{{"G1", f.domain().literal()},
                {"G2", f.codomain().literal()},
                {"map", std::vector<std::uint32_t>(f.values().begin(), f.values().end())}};
}

json to_json(const BoundRecord& r) {
    json j{{"id", r.id},
           {"description", r.description},
           {"applicable", r.applicable},
           {"applicability", r.applicability},
           {"holds", r.holds},
           {"tight", r.tight},
           {"discrepancy", r.discrepancy},
           {"informational", r.informational},
           {"context", r.context}};
    j["relation"] = r.applicable ? json(to_string(r.relation)) : json(nullptr);
    j["lhs"] = r.lhs ? to_json(*r.lhs) : json(nullptr);
    j["rhs"] = r.rhs ? to_json(*r.rhs) : json(nullptr);
    j["note"] = r.note;
    return j;
}

json to_json(const std::vector<BoundRecord>& ledger) {
    json arr = json::array();
    for (const auto& r : ledger) arr.push_back(to_json(r));
    return arr;
}

json to_json(const SearchReport& r) {
    json hist = json::array();
    for (const auto& [nb, count] : r.nb_histogram) hist.push_back(json{{"nb", to_json(nb)}, {"count", count}});
    json j{{"G1", r.g1.literal()},
           {"G2", r.g2.literal()},
           {"mode", r.bijections ? "bijections" : "functions"},
           {"exhaustive", r.exhaustive},
           {"examined", r.examined},
           {"min_nb", to_json(r.min_nb)},
           {"nb_witness", to_json(r.nb_witness)},
           {"nb_witness_count", r.nb_witness_count},
           {"min_ambiguity", r.min_ambiguity},
           {"ambiguity_witness", to_json(r.ambiguity_witness)},
           {"ambiguity_witness_count", r.ambiguity_witness_count},
           {"nb_histogram", hist},
           {"witness_bounds", to_json(r.witness_bounds)}};
    j["seed"] = r.exhaustive ? json(nullptr) : json(r.seed);
    j["optimum_threshold"] = r.optimum_threshold ? json(*r.optimum_threshold) : json(nullptr);
    return j;
}

json indicator_block(const Analysis& a) {
    const auto& ind = a.indicators;
    json j{{"imbalance", to_json(ind.imbalance)},
           {"nb", to_json(ind.nb)},
           {"ambiguity", ind.ambiguity},
           {"ambiguity_rescaled", ind.ambiguity_rescaled},
           {"deficiency", ind.deficiency},
           {"per_row_ambiguity", ind.per_row_ambiguity},
           {"t_f", a.t_f},
           {"apn", a.apn},
           {"pn", a.pn},
           {"bijective", a.bijective}};
    j["optimum_threshold"] = ind.optimum_threshold ? json(*ind.optimum_threshold) : json(nullptr);
    j["is_optimum"] = ind.is_optimum ? json(*ind.is_optimum) : json(nullptr);
    return j;
}

json spectrum_block(const Analysis& a) {
    json counts = json::object();
    for (auto [i, n] : a.spectrum.counts) counts[std::to_string(i)] = n;
    return json{{"delta_max", a.spectrum.delta}, {"spectrum", counts}, {"deficiency", a.indicators.deficiency}};
}

json spectral_block(const Analysis& a) {
    json j = json::object();
    if (!a.fourier) {
        j["available"] = false;
        return j;
    }
    j["available"] = true;
    j["exact"] = a.fourier->exact();
    j["linearity"] = a.linearity->exact ? json(*a.linearity->exact) : json(round12(a.linearity->value));
    j["nonlinearity_normalized"] = round12(*a.nonlinearity_normalized);
    j["nonlinearity_classical"] = a.nonlinearity_classical ? json(round12(*a.nonlinearity_classical)) : json(nullptr);
    if (a.fourth_moment->exact) {
        const unsigned __int128 v = *a.fourth_moment->exact;
        BigInt big = static_cast<std::uint64_t>(v >> 64);
        big <<= 64;
        big += static_cast<std::uint64_t>(v);
        j["fourth_moment"] = big.str();
    } else {
        j["fourth_moment"] = round12(a.fourth_moment->value);
    }
    if (a.plateaued) {
        json amps = json::object();
        for (std::size_t b = 1; b < a.plateaued->plateaued.size(); ++b)
            if (a.plateaued->plateaued[b]) amps[std::to_string(b)] = a.plateaued->amplitude_squared[b];
        j["plateaued"] = json{{"vectorial", a.plateaued->vectorial}, {"amplitudes", amps}};
    } else {
        j["plateaued"] = nullptr;
    }
    return j;
}

json ddt_block(const DDTable& d) {
    json rows = json::array();
    for (Element a = 0; a < d.rows(); ++a) {
        auto r = d.row(a);
        rows.push_back(std::vector<std::uint32_t>(r.begin(), r.end()));
    }
    return rows;
}

}  // namespace imbalance::cli
