#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "imbalance/ddt.hpp"
#include "imbalance/functable.hpp"
#include "imbalance/rational.hpp"

namespace imbalance {

/// Nb_F = sum_b |F^{-1}(b)|^2 - |G1|^2 / |G2|.
Rational imbalance(const FunctionTable& f);
/// NB_F = sum over a != 0 of Nb_{D_a F}, read off the difference table.
Rational derivative_imbalance(const DDTable& d);
Rational derivative_imbalance(const FunctionTable& f);

/// A(F) = sum_i N_i * C(i, 2).
std::uint64_t ambiguity(const DifferentialSpectrum& s);
/// A(F) recovered from NB_F by the affine rescaling between the two
/// indicators. Raises Internal when the result is not an integer.
std::int64_t ambiguity_from_nb(const Rational& nb, const GroupSpec& g1, const GroupSpec& g2);
/// A_a(F) = sum_b C(delta(a, b), 2) for a = 1 .. |G1| - 1.
std::vector<std::uint64_t> per_row_ambiguity(const DDTable& d);

/// Largest |G1| accepted by pair_count_oracle.
inline constexpr std::size_t kPairOracleCap = std::size_t{1} << 12;
/// sum over all a in G1 of |{(x, y) : D_a F(x) = D_a F(y)}| by a direct
/// double loop per row. Throws Capacity above kPairOracleCap.
std::uint64_t pair_count_oracle(const FunctionTable& f);
/// NB_F from the pair total: total - |G1|^2 - (|G1| - 1)|G1|^2 / |G2|.
Rational nb_from_pair_count(std::uint64_t total, const GroupSpec& g1, const GroupSpec& g2);

/// Closed forms for spectra with at most two nonzero values.
struct ThreeValueRelation {
    int item = 0;  // 1: values in {0, i}; 2: values in {0, i, j}
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    // item 1
    Rational nb_closed_form;            // (|G1| - 1)(i |G1| - |G1|^2 / |G2|)
    Rational ambiguity_closed_form;     // (|G1| - 1)|G1|(i - 1) / 2
    Rational deficiency_closed_form;    // max{0, (|G1| - 1)(|G2| - |G1| / i)}
    Rational nb_printed_form;           // i(i - 1) + (|G1| - 1)(|G1| - |G1|^2 / |G2|)
    Rational ambiguity_printed_form;    // C(i, 2)
    bool printed_form_discrepancy = false;
    // item 2: 2A = i j D + (i + j - 1)|G1|(|G1| - 1) - i j |G2|(|G1| - 1)
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};
/// Throws Inapplicable when more than two nonzero values occur.
ThreeValueRelation three_value_relation(const DifferentialSpectrum& s, std::uint64_t ambiguity, std::uint64_t deficiency,
                                        const GroupSpec& g1, const GroupSpec& g2);

/// Lower bound on A(F) for bijections between groups of equal order, from the
/// group orders and their involution counts. Throws Inapplicable when the
/// orders differ.
std::int64_t optimum_ambiguity_threshold(const GroupSpec& g1, const GroupSpec& g2);
/// Throws Inapplicable unless F is a bijection.
bool is_optimum(const FunctionTable& f, std::uint64_t ambiguity);

struct IndicatorReport {
    Rational imbalance;
    Rational nb;
    std::uint64_t ambiguity = 0;
    std::int64_t ambiguity_rescaled = 0;
    std::uint64_t deficiency = 0;
    std::vector<std::uint64_t> per_row_ambiguity;
    std::optional<std::int64_t> optimum_threshold;
    std::optional<bool> is_optimum;
};

/// Computes every indicator; raises Internal if the spectrum-based and the
/// rescaled ambiguity disagree.
IndicatorReport indicators(const FunctionTable& f, const DDTable& d, const DifferentialSpectrum& s);

}  // namespace imbalance
