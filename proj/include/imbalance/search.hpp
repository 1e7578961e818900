#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "imbalance/bounds.hpp"
#include "imbalance/functable.hpp"
#include "imbalance/rational.hpp"

namespace imbalance {

struct SearchOptions {
    bool bijections = false;
    /// Number of random samples; exhaustive enumeration when absent.
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
};

/// Largest search space enumerated exhaustively.
inline constexpr std::uint64_t kMaxExhaustive = std::uint64_t{1} << 24;

struct SearchReport {
    GroupSpec g1;
    GroupSpec g2;
    bool bijections = false;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t examined = 0;

    Rational min_nb;
    FunctionTable nb_witness;
    std::uint64_t nb_witness_count = 0;
    std::uint64_t min_ambiguity = 0;
    FunctionTable ambiguity_witness;
    std::uint64_t ambiguity_witness_count = 0;
    /// NB value -> number of functions attaining it.
    std::vector<std::pair<Rational, std::uint64_t>> nb_histogram;

    std::optional<std::int64_t> optimum_threshold;
    /// Ledger evaluated on the NB witness.
    std::vector<BoundRecord> witness_bounds;
};

/// Size of the exhaustive search space, or nullopt when it exceeds 2^64.
std::optional<std::uint64_t> search_space_size(const GroupSpec& g1, const GroupSpec& g2, bool bijections);

/// Minimum NB and ambiguity over all functions (or bijections) G1 -> G2, or
/// over a seeded sample. Throws Capacity when an exhaustive space exceeds
/// kMaxExhaustive and Usage when bijections are asked for unequal orders.
SearchReport exhaustive_min_nb(const GroupSpec& g1, const GroupSpec& g2, const SearchOptions& options);

}  // namespace imbalance
