#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace imbalance {

/// Index of a group element in mixed-radix little-endian form.
using Element = std::size_t;

/// Finite Abelian group Z_{n_1} x ... x Z_{n_k}.
///
/// Elements are identified with integers in [0, |G|): coordinate j has place
/// value n_0 * ... * n_{j-1}. Characters use the coordinate identity
/// isomorphism, chi_alpha(x) = exp(2 pi i sum_j alpha_j x_j / n_j).
class GroupSpec {
public:
    GroupSpec() = default;

    /// Throws InvalidGroup for an empty list or any order < 2, Capacity when
    /// the product overflows std::size_t.
    explicit GroupSpec(std::vector<std::size_t> orders);

    const std::vector<std::size_t>& orders() const noexcept { return orders_; }
    const std::vector<std::size_t>& weights() const noexcept { return weights_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return orders_.size(); }

    /// True when every cyclic factor is Z_2, i.e. G = F_2^k.
    bool is_elementary_2() const noexcept { return elementary_2_; }
    /// True when every cyclic factor has the same prime order p.
    bool is_elementary() const noexcept;
    /// True when G has a single cyclic factor.
    bool is_cyclic() const noexcept { return orders_.size() == 1; }
    /// log2 |G| for elementary 2-groups.
    unsigned dimension() const noexcept { return static_cast<unsigned>(orders_.size()); }

    void check(Element x) const;

    std::vector<std::size_t> decode(Element x) const;
    Element encode(std::span<const std::size_t> coords) const;

    Element add(Element x, Element y) const;
    Element sub(Element x, Element y) const;
    Element negate(Element x) const;

    /// x + a for every x in index order.
    std::vector<Element> translates(Element a) const;

    std::complex<double> character(Element alpha, Element x) const;

    /// Number of elements of order exactly 2.
    std::size_t count_involutions() const noexcept;

    /// Root of unity exp(2 pi i k / n) from the per-factor tables; n must be
    /// one of the cyclic orders of this group.
    const std::vector<std::complex<double>>& roots(std::size_t factor) const { return roots_[factor]; }

    /// Product group G x H with G's coordinates first, so (x, y) has index
    /// x + |G| * y.
    GroupSpec product(const GroupSpec& other) const;

    std::string literal() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept { return a.orders_ == b.orders_; }

private:
    std::vector<std::size_t> orders_;
    std::vector<std::size_t> weights_;
    std::size_t order_ = 0;
    bool elementary_2_ = false;
    std::vector<std::vector<std::complex<double>>> roots_;
};

GroupSpec make_group(std::vector<std::size_t> orders);

/// Parses the space-separated literal form, e.g. "2 2 2" or "5".
GroupSpec parse_group(std::string_view literal);

}  // namespace imbalance
