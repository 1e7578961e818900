#include "imbalance/search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "imbalance/analysis.hpp"
#include "imbalance/errors.hpp"

namespace imbalance {

namespace {

// Sum of delta(a, b)^2 and of C(delta(a, b), 2) over a != 0, from dense
// translate and difference tables.
class Scorer {
public:
    Scorer(const GroupSpec& g1, const GroupSpec& g2) : n_(g1.order()), m_(g2.order()), hist_(g2.order()) {
        shifted_.reserve((n_ - 1) * n_);
        for (Element a = 1; a < n_; ++a) {
            auto t = g1.translates(a);
            shifted_.insert(shifted_.end(), t.begin(), t.end());
        }
        diff_.resize(m_ * m_);
        for (Element u = 0; u < m_; ++u)
            for (Element v = 0; v < m_; ++v) diff_[u * m_ + v] = static_cast<std::uint32_t>(g2.sub(u, v));
    }

    std::pair<std::uint64_t, std::uint64_t> operator()(std::span<const std::uint32_t> f) {
        std::uint64_t squares = 0;
        std::uint64_t pairs = 0;
        for (std::size_t a = 0; a + 1 < n_; ++a) {
            std::fill(hist_.begin(), hist_.end(), 0u);
            const Element* t = shifted_.data() + a * n_;
            for (std::size_t x = 0; x < n_; ++x) ++hist_[diff_[f[t[x]] * m_ + f[x]]];
            for (std::uint32_t c : hist_) {
                squares += std::uint64_t{c} * c;
                pairs += std::uint64_t{c} * (c - (c > 0)) / 2;
            }
        }
        return {squares, pairs};
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<Element> shifted_;
    std::vector<std::uint32_t> diff_;
    std::vector<std::uint32_t> hist_;
};

}  // namespace

std::optional<std::uint64_t> search_space_size(const GroupSpec& g1, const GroupSpec& g2, bool bijections) {
    unsigned __int128 total = 1;
    const auto limit = static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max());
    if (bijections) {
        for (std::size_t i = 2; i <= g1.order(); ++i) {
            total *= i;
            if (total > limit) return std::nullopt;
        }
    } else {
        for (std::size_t i = 0; i < g1.order(); ++i) {
            total *= g2.order();
            if (total > limit) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(total);
}

SearchReport exhaustive_min_nb(const GroupSpec& g1, const GroupSpec& g2, const SearchOptions& options) {
    if (options.bijections && g1.order() != g2.order())
        fail(ErrorKind::Usage, "bijection search needs groups of equal order");
    if (!options.sample) {
        auto size = search_space_size(g1, g2, options.bijections);
        if (!size || *size > kMaxExhaustive)
            fail(ErrorKind::Capacity, "search space exceeds 2^24 functions; use sampling instead");
    }
    if (g1.order() > (std::size_t{1} << 16)) fail(ErrorKind::Capacity, "domain too large to search");

    SearchReport rep;
    rep.g1 = g1;
    rep.g2 = g2;
    rep.bijections = options.bijections;
    rep.exhaustive = !options.sample;
    rep.seed = options.seed;

    const std::int64_t n = static_cast<std::int64_t>(g1.order());
    const std::int64_t m = static_cast<std::int64_t>(g2.order());
    // NB = sum delta^2 over a != 0 minus (|G1| - 1)|G1|^2 / |G2|.
    const Rational offset = Rational((n - 1) * n * n, m);

    Scorer score(g1, g2);
    std::map<std::uint64_t, std::uint64_t> by_squares;
    std::uint64_t best_sq = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best_pairs = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint32_t> best_sq_table, best_pairs_table;

    auto visit = [&](std::span<const std::uint32_t> f) {
        auto [sq, pairs] = score(f);
        ++rep.examined;
        ++by_squares[sq];
        if (sq < best_sq) {
            best_sq = sq;
            best_sq_table.assign(f.begin(), f.end());
            rep.nb_witness_count = 0;
        }
        if (sq == best_sq) ++rep.nb_witness_count;
        if (pairs < best_pairs) {
            best_pairs = pairs;
            best_pairs_table.assign(f.begin(), f.end());
            rep.ambiguity_witness_count = 0;
        }
        if (pairs == best_pairs) ++rep.ambiguity_witness_count;
    };

    std::vector<std::uint32_t> cur(g1.order());
    if (options.sample) {
        Rng rng(options.seed);
        for (std::uint64_t i = 0; i < *options.sample; ++i) {
            FunctionTable f = options.bijections ? random_bijection(g1, rng) : random_function(g1, g2, rng);
            visit(f.values());
        }
    } else if (options.bijections) {
        std::iota(cur.begin(), cur.end(), 0u);
        do visit(cur);
        while (std::next_permutation(cur.begin(), cur.end()));
    } else {
        std::fill(cur.begin(), cur.end(), 0u);
        const std::uint32_t top = static_cast<std::uint32_t>(m);
        while (true) {
            visit(cur);
            std::size_t i = 0;
            while (i < cur.size() && ++cur[i] == top) cur[i++] = 0;
            if (i == cur.size()) break;
        }
    }

    rep.min_nb = Rational(static_cast<std::int64_t>(best_sq)) - offset;
    rep.nb_witness = FunctionTable(g1, g2, std::move(best_sq_table));
    rep.min_ambiguity = best_pairs;
    rep.ambiguity_witness = FunctionTable(g1, g2, std::move(best_pairs_table));
    for (auto [sq, count] : by_squares)
        rep.nb_histogram.emplace_back(Rational(static_cast<std::int64_t>(sq)) - offset, count);
    if (options.bijections) rep.optimum_threshold = optimum_ambiguity_threshold(g1, g2);
    rep.witness_bounds = evaluate_bounds(analyze(rep.nb_witness));
    return rep;
}

}  // namespace imbalance
