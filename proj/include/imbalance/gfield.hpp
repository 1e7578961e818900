#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "imbalance/functable.hpp"
#include "imbalance/group.hpp"

namespace imbalance {

/// GF(p^n) on top of the additive group Z_p^n.
///
/// An element's index is its coordinate vector in the polynomial basis
/// {1, X, ..., X^{n-1}}, little-endian, so field addition is group addition.
/// Multiplication goes through log/antilog tables built from a primitive
/// element that is verified to have order p^n - 1.
class FieldSpec {
public:
    /// Throws Domain for a non-prime p, n == 0 or p^n > 2^16, and
    /// InvalidModulus for a modulus that is not monic of degree n or is
    /// reducible.
    FieldSpec(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::size_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    const GroupSpec& group() const noexcept { return group_; }
    Element generator() const noexcept { return generator_; }

    Element add(Element x, Element y) const { return group_.add(x, y); }
    Element sub(Element x, Element y) const { return group_.sub(x, y); }
    Element mul(Element x, Element y) const;
    /// x^d with 0^0 = 1.
    Element pow(Element x, std::uint64_t d) const;
    /// Multiplicative inverse with inv(0) = 0.
    Element inv(Element x) const;

    /// Discrete log base the generator; x must be nonzero.
    std::uint32_t log(Element x) const;
    Element antilog(std::uint64_t k) const { return antilog_[k % (q_ - 1)]; }

    /// Relative trace Tr_m^n(x) = sum_{i < n/m} x^{p^{m i}}; throws Domain
    /// unless m divides n.
    Element trace(unsigned m, Element x) const;

    /// The element of the prime field with integer value c.
    Element scalar(std::uint32_t c) const { return c % p_; }

private:
    std::uint32_t p_;
    unsigned n_;
    std::size_t q_;
    std::vector<std::uint32_t> modulus_;
    GroupSpec group_;
    Element generator_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> antilog_;
};

FieldSpec make_field(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Built-in modulus for (p, n), coefficients low to high; empty when none is
/// compiled in.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned n);

/// Parses "p^n" (or a bare prime for n = 1).
FieldSpec parse_field(std::string_view literal, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Subfield GF(p^m) inside GF(p^n) identified with Z_p^m through the basis
/// {1, b, ..., b^{m-1}} where b generates the subfield's multiplicative group.
class Subfield {
public:
    Subfield(const FieldSpec& field, unsigned m);

    unsigned degree() const noexcept { return m_; }
    const GroupSpec& group() const noexcept { return group_; }
    bool contains(Element x) const { return to_sub_[x] != kAbsent; }
    /// Subfield coordinates of a field element that lies in the subfield.
    Element project(Element x) const;
    Element embed(Element y) const { return to_field_[y]; }

private:
    static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
    unsigned m_;
    GroupSpec group_;
    std::vector<std::uint32_t> to_sub_;
    std::vector<std::uint32_t> to_field_;
};

/// x -> x^d. Throws Capacity when d does not fit 64 bits.
FunctionTable build_power(const FieldSpec& f, std::uint64_t d);
/// x -> x^{-1} with 0 -> 0.
FunctionTable build_inverse(const FieldSpec& f);
/// Gold map x^{2^i + 1}; characteristic 2 only.
FunctionTable build_gold(const FieldSpec& f, unsigned i);
/// Dembowski-Ostrom monomial x^{p^i + p^j}, i > j >= 0.
FunctionTable build_quadratic(const FieldSpec& f, unsigned i, unsigned j);
/// GF(2^n) -> GF(2^m), x -> Tr_m^n(x) in subfield coordinates.
FunctionTable build_projection(const FieldSpec& f, unsigned m);

/// Re-expresses a table whose values all lie in GF(p^m) as a function into
/// Z_p^m. Throws Domain when some value leaves the subfield.
FunctionTable restrict_to_subfield(const FieldSpec& f, const FunctionTable& table, unsigned m);

/// The exponent d when `table` (domain = field group, codomain = field group or
/// the subfield group of degree m) equals x -> x^d; nullopt otherwise.
std::optional<std::uint64_t> power_exponent(const FieldSpec& f, const FunctionTable& table);

}  // namespace imbalance
