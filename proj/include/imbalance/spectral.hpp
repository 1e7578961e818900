#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "imbalance/ddt.hpp"
#include "imbalance/functable.hpp"
#include "imbalance/gfield.hpp"
#include "imbalance/rational.hpp"

namespace imbalance {

/// Largest |G1| * |G2| for which the Fourier table is materialized.
inline constexpr std::size_t kMaxFourierEntries = std::size_t{1} << 26;

/// hat F(alpha, beta) = sum_x psi_beta(F(x)) conj(chi_alpha(x)), stored column
/// by column (beta major). Between elementary 2-groups every value is an
/// integer and the table is exact.
class FourierTable {
public:
    FourierTable() = default;
    FourierTable(GroupSpec g1, GroupSpec g2, std::vector<std::int32_t> walsh);
    FourierTable(GroupSpec g1, GroupSpec g2, std::vector<std::complex<double>> values);

    const GroupSpec& domain() const noexcept { return g1_; }
    const GroupSpec& codomain() const noexcept { return g2_; }
    bool exact() const noexcept { return exact_; }
    std::complex<double> value(Element alpha, Element beta) const;
    double magnitude(Element alpha, Element beta) const { return std::abs(value(alpha, beta)); }
    /// Integer column of the exact path.
    std::span<const std::int32_t> walsh_column(Element beta) const;
    std::span<const std::complex<double>> complex_column(Element beta) const;

private:
    GroupSpec g1_;
    GroupSpec g2_;
    bool exact_ = false;
    std::vector<std::int32_t> walsh_;
    std::vector<std::complex<double>> values_;
};

/// Throws Capacity when |G1| * |G2| > kMaxFourierEntries.
FourierTable fourier(const FunctionTable& f);

/// out[alpha] = sum_x v[x] exp(sign * 2 pi i sum_j alpha_j x_j / n_j), computed
/// one cyclic factor at a time.
std::vector<std::complex<double>> character_transform(const GroupSpec& g, std::span<const std::complex<double>> v,
                                                      int sign);

struct Linearity {
    double value = 0;
    std::optional<std::int64_t> exact;
    /// Every maximizing (beta, alpha), sorted.
    std::vector<std::pair<Element, Element>> argmax;
};
/// max over alpha in G1 and beta != 0 of |hat F(alpha, beta)|.
Linearity linearity(const FourierTable& ft);
/// (|G1| - L) / |G2|.
double nonlinearity_normalized(const FourierTable& ft, const Linearity& l);
/// 2^{n-1} - L / 2; elementary 2-groups only (Inapplicable otherwise).
double nonlinearity_classical(const FourierTable& ft, const Linearity& l);

/// NB_F reconstructed from a spectral quantity. On the exact path `value` is
/// the exact result; otherwise it is the nearest rational with denominator
/// |G2| and rounding_distance is |raw - value|.
struct RoundedRational {
    Rational value;
    double raw = 0;
    double rounding_distance = 0;
    bool exact = false;
};

struct FourthMoment {
    double value = 0;
    std::optional<unsigned __int128> exact;
};
/// sum over all alpha, beta of |hat F|^4.
FourthMoment fourth_moment(const FourierTable& ft);
RoundedRational nb_from_fourth_moment(const FourierTable& ft, const FourthMoment& m);

/// C_F(alpha, beta) = sum_x psi_beta(F(x + alpha)) conj(psi_beta(F(x))), row
/// major (alpha major). Exact integers between elementary 2-groups.
class AutocorrelationTable {
public:
    AutocorrelationTable() = default;
    AutocorrelationTable(GroupSpec g1, GroupSpec g2, std::vector<std::int32_t> exact_values);
    AutocorrelationTable(GroupSpec g1, GroupSpec g2, std::vector<std::complex<double>> values);
    const GroupSpec& domain() const noexcept { return g1_; }
    const GroupSpec& codomain() const noexcept { return g2_; }
    bool exact() const noexcept { return exact_; }
    std::complex<double> value(Element alpha, Element beta) const;

private:
    GroupSpec g1_;
    GroupSpec g2_;
    bool exact_ = false;
    std::vector<std::int32_t> ints_;
    std::vector<std::complex<double>> values_;
};

/// Built from a per-shift histogram of the derivative values and a character
/// transform over G2. Throws Capacity above kMaxFourierEntries.
AutocorrelationTable autocorrelation(const FunctionTable& f);
RoundedRational nb_from_autocorrelation(const AutocorrelationTable& c);

/// Largest |G1| accepted by second_derivative_charsum.
inline constexpr std::size_t kSecondDerivativeCap = std::size_t{1} << 10;
struct SecondDerivativeSum {
    double real = 0;
    double imag = 0;
    std::optional<std::int64_t> exact;
};
/// S = sum_beta sum_{a, b, x} psi_beta(D_a D_b F(x)). Throws Capacity above
/// kSecondDerivativeCap.
SecondDerivativeSum second_derivative_charsum(const FunctionTable& f);
RoundedRational nb_from_second_derivative(const SecondDerivativeSum& s, const GroupSpec& g1, const GroupSpec& g2);

/// The four expressions for sum_{a, b} delta_F(a, b)^2.
struct CrossIdentityReport {
    std::uint64_t delta_squares = 0;
    double fourier = 0;
    double autocorrelation = 0;
    std::optional<double> second_derivative;  // absent above its cap
    double max_relative_deviation = 0;
    bool exact = false;
};
/// Throws IdentityViolation when any expression deviates by more than 1e-6
/// relative (or at all on the exact path).
CrossIdentityReport cross_identities(const FunctionTable& f, const DDTable& d, const FourierTable& ft);

struct PlateauedProfile {
    /// Indexed by beta; entry 0 is unused.
    std::vector<bool> plateaued;
    /// mu_beta^2, or 0 for a component that is not plateaued.
    std::vector<std::uint64_t> amplitude_squared;
    bool vectorial = false;
};
/// Exact path only (Inapplicable otherwise).
PlateauedProfile plateaued_profile(const FourierTable& ft);
/// 2^{n-m} sum_beta mu_beta^2 - 2^{2n-m}(2^m - 1); Inapplicable when some
/// component is not plateaued.
Rational nb_from_plateaued(const PlateauedProfile& p, const GroupSpec& g1, const GroupSpec& g2);

/// Compares, for every v, the number of (a, b) with D_a F(b) + D_a F(1) = v and
/// with D_a F(b) + D_a F(0) = v. Inapplicable unless F is a power map over a
/// field of characteristic 2. Capacity above 2^12 elements.
bool power_plateaued_test(const FieldSpec& field, const FunctionTable& f);

struct PowerPlateauedNb {
    std::uint32_t delta11 = 0;
    Rational nb;          // 2^n (2^n - 1) delta(1,1) - 2^{2n-m} (2^n - 1)
    Rational ambiguity;   // 2^{n-1} (2^n - 1) (delta(1,1) - 1)
    Rational nb_printed;  // 2^n (2^n - 1)(delta(1,1) - 1) - 2^{2n-m} (2^n - 1)
    bool printed_form_discrepancy = false;
};
/// Inapplicable unless power_plateaued_test passes.
PowerPlateauedNb nb_power_plateaued(const FieldSpec& field, const FunctionTable& f, const DDTable& d);

}  // namespace imbalance
