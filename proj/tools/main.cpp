#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "imbalance/analysis.hpp"
#include "imbalance/bounds.hpp"
#include "imbalance/errors.hpp"
#include "imbalance/gfield.hpp"
#include "imbalance/kernels.hpp"
#include "imbalance/search.hpp"
#include "imbalance/tableio.hpp"
#include "report.hpp"

namespace {

using namespace imbalance;
using cli::json;

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Capacity: return kCapacity;
        case ErrorKind::IdentityViolation:
        case ErrorKind::Internal: return kVerifyFailed;
        default: return kUsage;
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::uint32_t> parse_poly(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            fail(ErrorKind::Usage, "bad --poly coefficient '" + item + "'");
        }
    }
    return out;
}

struct FieldFlags {
    std::string field;
    std::string poly;

    std::optional<FieldSpec> get() const {
        if (field.empty()) {
            if (!poly.empty()) fail(ErrorKind::Usage, "--poly needs --field");
            return std::nullopt;
        }
        std::optional<std::vector<std::uint32_t>> modulus;
        if (!poly.empty()) modulus = parse_poly(poly);
        return parse_field(field, modulus);
    }
};

void add_field_flags(CLI::App* cmd, FieldFlags& f) {
    cmd->add_option("--field", f.field, "Field literal p^n the table lives on");
    cmd->add_option("--poly", f.poly, "Modulus coefficients c0,...,cn (low to high)");
}

std::optional<FieldSpec> field_for(const FieldFlags& flags, const FunctionTable& f) {
    auto field = flags.get();
    if (field && !(field->group() == f.domain()))
        fail(ErrorKind::Usage, "--field does not match the table's domain G1");
    return field;
}

void summary(const Analysis& a) {
    std::cerr << "G1 = [" << a.f.domain().literal() << "], G2 = [" << a.f.codomain().literal() << "]: NB = "
              << a.indicators.nb.str() << ", ambiguity = " << a.indicators.ambiguity
              << ", deficiency = " << a.indicators.deficiency << ", delta = " << a.spectrum.delta << '\n';
}

json cross_block(const Analysis& a) {
    json j;
    if (!a.fourier) {
        j["available"] = false;
        return j;
    }
    j["available"] = true;
    try {
        auto r = cross_identities(a.f, a.ddt, *a.fourier);
        j["passed"] = true;
        j["delta_squares"] = r.delta_squares;
        j["fourier"] = cli::round12(r.fourier);
        j["autocorrelation"] = cli::round12(r.autocorrelation);
        j["second_derivative"] = r.second_derivative ? json(cli::round12(*r.second_derivative)) : json(nullptr);
        j["max_relative_deviation"] = cli::round12(r.max_relative_deviation);
        j["exact"] = r.exact;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::IdentityViolation) throw;
        j["passed"] = false;
        j["error"] = e.what();
    }
    return j;
}

json analysis_report(const Analysis& a, const std::vector<BoundRecord>& ledger, const std::string& source) {
    json j;
    j["provenance"] = json{{"input", source}, {"tool_version", kVersion}, {"kernels", kernels::active().name}};
    j["table"] = cli::to_json(a.f);
    j["indicators"] = cli::indicator_block(a);
    j["differential"] = cli::spectrum_block(a);
    j["spectral"] = cli::spectral_block(a);
    j["bounds"] = cli::to_json(ledger);
    j["verification"] = json{{"cross_identities", cross_block(a)},
                             {"rescaling", a.indicators.ambiguity_rescaled ==
                                               static_cast<std::int64_t>(a.indicators.ambiguity)}};
    if (a.field) {
        j["field"] = json{{"p", a.field->characteristic()}, {"n", a.field->degree()}, {"modulus", a.field->modulus()}};
        j["power_exponent"] = a.power_exponent ? json(*a.power_exponent) : json(nullptr);
    }
    return j;
}

int cmd_analyze(const std::string& path, bool with_ddt, bool oracle, const FieldFlags& ff) {
    FunctionTable f = read_table_file(path);
    Analysis a = analyze(f, field_for(ff, f));
    auto ledger = evaluate_bounds(a);
    json j = analysis_report(a, ledger, path);
    if (with_ddt) j["ddt"] = cli::ddt_block(a.ddt);
    if (oracle) {
        std::uint64_t total = pair_count_oracle(a.f);
        Rational nb = nb_from_pair_count(total, a.f.domain(), a.f.codomain());
        j["verification"]["oracle"] = json{{"pair_count", total}, {"nb", cli::to_json(nb)}, {"agrees", nb == a.indicators.nb}};
    }
    emit(j);
    summary(a);
    if (oracle && !j["verification"]["oracle"]["agrees"].get<bool>()) return kVerifyFailed;
    return kOk;
}

int cmd_bounds(const std::string& path, const std::string& shifts_path, const FieldFlags& ff) {
    FunctionTable f = read_table_file(path);
    std::vector<AffineMap> shifts;
    if (!shifts_path.empty())
        for (auto& t : read_table_list_file(shifts_path)) shifts.emplace_back(std::move(t));
    Analysis a = analyze(f, field_for(ff, f));
    auto ledger = evaluate_bounds(a, shifts);
    emit(cli::to_json(ledger));
    auto bad = unsound_records(ledger);
    std::size_t applicable = 0, tight = 0;
    for (const auto& r : ledger) {
        applicable += r.applicable;
        tight += r.applicable && r.tight;
    }
    std::cerr << ledger.size() << " records, " << applicable << " applicable, " << tight << " tight, " << bad.size()
              << " violated\n";
    return kOk;
}

int cmd_verify(const std::string& path) {
    FunctionTable f = read_table_file(path);
    json checks = json::object();
    bool ok = true;
    auto record = [&](const std::string& name, bool passed, json detail) {
        detail["passed"] = passed;
        checks[name] = std::move(detail);
        ok = ok && passed;
    };

    DDTable d(f);
    const std::int64_t n = static_cast<std::int64_t>(f.domain().order());
    const std::int64_t m = static_cast<std::int64_t>(f.codomain().order());
    {
        std::uint64_t rows = 0, weighted = 0;
        for (Element a = 1; a < d.rows(); ++a)
            for (auto v : d.row(a)) {
                ++rows;
                weighted += v;
            }
        std::map<std::uint32_t, std::uint64_t> counts;
        for (Element a = 1; a < d.rows(); ++a)
            for (auto v : d.row(a)) ++counts[v];
        std::uint64_t sum_n = 0, sum_in = 0;
        for (auto [i, c] : counts) {
            sum_n += c;
            sum_in += i * c;
        }
        bool passed = sum_n == static_cast<std::uint64_t>((n - 1) * m) && sum_in == static_cast<std::uint64_t>((n - 1) * n);
        record("spectrum", passed, json{{"sum_N_i", sum_n}, {"sum_i_N_i", sum_in}});
    }
    DifferentialSpectrum s = spectrum(d);
    Rational nb = derivative_imbalance(d);
    {
        std::int64_t direct = static_cast<std::int64_t>(ambiguity(s));
        std::int64_t rescaled = ambiguity_from_nb(nb, f.domain(), f.codomain());
        record("rescaling", direct == rescaled, json{{"ambiguity", direct}, {"ambiguity_from_nb", rescaled}});
    }
    if (static_cast<std::size_t>(n * m) <= kMaxFourierEntries) {
        FourierTable ft = fourier(f);
        double worst = 0;
        bool exact_ok = true;
        for (Element beta = 0; beta < static_cast<Element>(m); ++beta) {
            if (ft.exact()) {
                std::int64_t sum = 0;
                for (auto w : ft.walsh_column(beta)) sum += std::int64_t{w} * w;
                exact_ok = exact_ok && sum == n * n;
            } else {
                double sum = 0;
                for (auto c : ft.complex_column(beta)) sum += std::norm(c);
                worst = std::max(worst, std::abs(sum - double(n * n)) / double(n * n));
            }
        }
        record("parseval", exact_ok && worst <= 1e-6, json{{"max_relative_deviation", cli::round12(worst)}});
        Analysis a = analyze(f);
        json cross = cross_block(a);
        record("cross_identities", cross.value("passed", false), cross);
    } else {
        record("parseval", false, json{{"error", "Fourier table over its size cap"}});
    }
    if (f.domain().order() <= kPairOracleCap) {
        std::uint64_t total = pair_count_oracle(f);
        Rational onb = nb_from_pair_count(total, f.domain(), f.codomain());
        record("pair_count_oracle", onb == nb, json{{"nb", cli::to_json(onb)}});
    }
    emit(json{{"input", path}, {"nb", cli::to_json(nb)}, {"checks", checks}, {"passed", ok}});
    std::cerr << (ok ? "all identities hold" : "identity check FAILED") << " (NB = " << nb.str() << ")\n";
    return ok ? kOk : kVerifyFailed;
}

struct GenFlags {
    FieldFlags field;
    std::optional<std::uint64_t> power;
    std::optional<unsigned> gold;
    std::string quadratic;
    bool inverse = false;
    std::optional<unsigned> trace;
    std::string group;
    std::string codomain;
    std::optional<std::uint64_t> random;
    bool bijection = false;
    bool as_json = false;
    std::string output;
};

int cmd_gen(const GenFlags& g) {
    FunctionTable f;
    const bool field_mode = !g.field.field.empty();
    const int families = (g.power ? 1 : 0) + (g.gold ? 1 : 0) + (!g.quadratic.empty() ? 1 : 0) + (g.inverse ? 1 : 0) +
                         (g.trace ? 1 : 0);
    if (field_mode) {
        if (!g.group.empty() || g.random || g.bijection || !g.codomain.empty())
            fail(ErrorKind::Usage, "--field cannot be combined with --group/--random/--bijection/--codomain");
        if (families != 1)
            fail(ErrorKind::Usage, "--field needs exactly one of --power, --gold, --quadratic, --inverse, --trace");
        FieldSpec field = *g.field.get();
        if (g.power) f = build_power(field, *g.power);
        else if (g.gold) f = build_gold(field, *g.gold);
        else if (g.inverse) f = build_inverse(field);
        else if (g.trace) f = build_projection(field, *g.trace);
        else {
            auto ij = parse_poly(g.quadratic);
            if (ij.size() != 2) fail(ErrorKind::Usage, "--quadratic takes i,j");
            f = build_quadratic(field, ij[0], ij[1]);
        }
    } else {
        if (families != 0 || !g.field.poly.empty()) fail(ErrorKind::Usage, "field families need --field");
        if (g.group.empty() || !g.random) fail(ErrorKind::Usage, "need --field p^n or --group \"<orders>\" --random <seed>");
        GroupSpec g1 = parse_group(g.group);
        if (g.bijection) {
            if (!g.codomain.empty()) fail(ErrorKind::Usage, "--bijection maps a group to itself");
            f = random_bijection(g1, *g.random);
        } else {
            f = random_function(g1, g.codomain.empty() ? g1 : parse_group(g.codomain), *g.random);
        }
    }
    std::string text = g.as_json ? format_table_json(f) + "\n" : format_table_text(f);
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.output, std::ios::binary);
        if (!out) fail(ErrorKind::Usage, "cannot write " + g.output);
        out << text;
    }
    return kOk;
}

struct SearchFlags {
    std::string group, g1, g2;
    bool bijections = false;
    bool exhaustive = false;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    std::string format = "json";
};

int cmd_search(const SearchFlags& s) {
    if (!s.group.empty() && (!s.g1.empty() || !s.g2.empty())) fail(ErrorKind::Usage, "use --group or --g1/--g2, not both");
    if (s.exhaustive && s.sample) fail(ErrorKind::Usage, "--exhaustive and --sample are exclusive");
    std::string l1 = s.group.empty() ? s.g1 : s.group;
    std::string l2 = s.group.empty() ? s.g2 : s.group;
    if (l1.empty() || l2.empty()) fail(ErrorKind::Usage, "need --group or both --g1 and --g2");
    SearchOptions opt{s.bijections, s.sample, s.seed};
    SearchReport rep;
    try {
        rep = exhaustive_min_nb(parse_group(l1), parse_group(l2), opt);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Capacity) fail(ErrorKind::Capacity, std::string(e.what()) + " (pass --sample N)");
        throw;
    }
    if (s.format == "csv") {
        std::cout << "G1,G2,mode,exhaustive,examined,min_nb,min_ambiguity,nb_witness,ambiguity_witness\n";
        auto map_str = [](const FunctionTable& f) {
            std::string out;
            for (auto v : f.values()) out += (out.empty() ? "" : " ") + std::to_string(v);
            return out;
        };
        std::cout << '"' << rep.g1.literal() << "\",\"" << rep.g2.literal() << "\"," << (rep.bijections ? "bijections" : "functions")
                  << ',' << (rep.exhaustive ? "true" : "false") << ',' << rep.examined << ',' << rep.min_nb.str() << ','
                  << rep.min_ambiguity << ",\"" << map_str(rep.nb_witness) << "\",\"" << map_str(rep.ambiguity_witness)
                  << "\"\n";
    } else {
        emit(cli::to_json(rep));
    }
    std::cerr << (rep.exhaustive ? "exhaustive" : "sampled") << " search over " << rep.examined
              << (rep.bijections ? " bijections" : " functions") << ": min NB = " << rep.min_nb.str()
              << ", min ambiguity = " << rep.min_ambiguity << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivative imbalance, ambiguity and deficiency toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string path, shifts;
    bool with_ddt = false, oracle = false;
    FieldFlags analyze_field, bounds_field;
    auto* analyze_cmd = app.add_subcommand("analyze", "Full JSON report for a function table");
    analyze_cmd->add_option("file", path, "Table file (text or JSON)")->required();
    analyze_cmd->add_flag("--ddt", with_ddt, "Embed the full difference distribution table");
    analyze_cmd->add_flag("--oracle-check", oracle, "Cross-check NB with the direct pair count");
    add_field_flags(analyze_cmd, analyze_field);

    auto* bounds_cmd = app.add_subcommand("bounds", "Bound ledger as JSON");
    bounds_cmd->add_option("file", path, "Table file")->required();
    bounds_cmd->add_option("--affine-shifts", shifts, "File with affine maps G1 -> G2");
    add_field_flags(bounds_cmd, bounds_field);

    auto* verify_cmd = app.add_subcommand("verify", "Check the identities; exit 1 on failure");
    verify_cmd->add_option("file", path, "Table file")->required();

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a function table");
    add_field_flags(gen_cmd, gen.field);
    gen_cmd->add_option("--power", gen.power, "x^d");
    gen_cmd->add_option("--gold", gen.gold, "x^(2^i + 1)");
    gen_cmd->add_option("--quadratic", gen.quadratic, "x^(p^i + p^j) as i,j");
    gen_cmd->add_flag("--inverse", gen.inverse, "x^-1 with 0 -> 0");
    gen_cmd->add_option("--trace", gen.trace, "Relative trace onto GF(p^m)");
    gen_cmd->add_option("--group", gen.group, "Domain group orders");
    gen_cmd->add_option("--codomain", gen.codomain, "Codomain orders for --random (default: --group)");
    gen_cmd->add_option("--random", gen.random, "Seed for a random table");
    gen_cmd->add_flag("--bijection", gen.bijection, "Random permutation instead of a random map");
    gen_cmd->add_flag("--json", gen.as_json, "Write the JSON form");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    SearchFlags search;
    auto* search_cmd = app.add_subcommand("search", "Minimum NB and ambiguity over a function space");
    search_cmd->add_option("--group", search.group, "G1 = G2 orders");
    search_cmd->add_option("--g1", search.g1, "Domain orders");
    search_cmd->add_option("--g2", search.g2, "Codomain orders");
    search_cmd->add_flag("--bijections", search.bijections, "Search bijections only");
    search_cmd->add_flag("--exhaustive", search.exhaustive, "Enumerate the whole space (default)");
    search_cmd->add_option("--sample", search.sample, "Number of random samples");
    search_cmd->add_option("--seed", search.seed, "Sampling seed");
    search_cmd->add_option("--format", search.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(path, with_ddt, oracle, analyze_field);
        if (*bounds_cmd) return cmd_bounds(path, shifts, bounds_field);
        if (*verify_cmd) return cmd_verify(path);
        if (*gen_cmd) return cmd_gen(gen);
        if (*search_cmd) return cmd_search(search);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
