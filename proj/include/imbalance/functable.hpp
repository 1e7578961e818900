#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "imbalance/group.hpp"

namespace imbalance {

/// Dense value table of F: G1 -> G2. values()[x] is the codomain index of F(x).
class FunctionTable {
public:
    FunctionTable() = default;
    /// Validates length and range; throws Schema on mismatch, Capacity when
    /// the groups are too large to tabulate.
    FunctionTable(GroupSpec domain, GroupSpec codomain, std::vector<std::uint32_t> values);

    const GroupSpec& domain() const noexcept { return domain_; }
    const GroupSpec& codomain() const noexcept { return codomain_; }
    std::span<const std::uint32_t> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    Element operator()(Element x) const { return values_[x]; }

    bool is_bijective() const;
    /// Both groups are elementary Abelian 2-groups (the exact Walsh path).
    bool is_binary() const noexcept { return domain_.is_elementary_2() && codomain_.is_elementary_2(); }

    friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.values_ == b.values_;
    }

private:
    GroupSpec domain_;
    GroupSpec codomain_;
    std::vector<std::uint32_t> values_;
};

/// Largest domain/codomain order a table may have.
inline constexpr std::size_t kMaxTableOrder = std::size_t{1} << 28;

/// Affine map A(x) = L(x) + c with L additive, stored as the full table.
class AffineMap {
public:
    /// Validates A(x+y) - A(x) - A(y) = -A(0): exhaustively when |G1| <= 64,
    /// otherwise on 10^4 seeded random pairs plus every pair against a basis
    /// of generators. Throws InvalidTransform on failure.
    explicit AffineMap(FunctionTable table);

    static AffineMap identity(const GroupSpec& g);
    static AffineMap zero(const GroupSpec& from, const GroupSpec& to);
    static AffineMap constant(const GroupSpec& from, const GroupSpec& to, Element c);

    const FunctionTable& table() const noexcept { return table_; }
    Element constant_term() const noexcept { return table_(0); }
    Element operator()(Element x) const { return table_(x); }
    bool is_bijective() const { return table_.is_bijective(); }

    /// Inverse of a bijective affine map (again affine).
    AffineMap inverse() const;

private:
    FunctionTable table_;
};

FunctionTable derivative(const FunctionTable& f, Element a);
FunctionTable second_derivative(const FunctionTable& f, Element a, Element b);

/// A2 o F o A1 + A3. Throws InvalidTransform unless A1 and A2 are bijective
/// and all shapes match.
FunctionTable ea_transform(const FunctionTable& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a3);

/// Applies L (an affine permutation of G1 x G2, indexed as x + |G1| * y) to the
/// graph of F and reads off the function whose graph is the image. Throws
/// NotAFunction when the image is not a graph.
FunctionTable ccz_transform(const FunctionTable& f, const AffineMap& l);

/// The graph map (x, y) -> (A1^{-1}(x), A2(y) + A3(A1^{-1}(x))), whose CCZ
/// action equals ea_transform(F, A1, A2, A3).
AffineMap ea_graph_map(const AffineMap& a1, const AffineMap& a2, const AffineMap& a3);

/// (x, y) -> (y, x) on G x G.
AffineMap swap_graph_map(const GroupSpec& g);

/// Seeded generation. The stream is std::mt19937_64 seeded with `seed`;
/// bounded draws use rejection sampling on the raw 64-bit output and
/// permutations use Fisher-Yates from the last position down, so tables are
/// reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

FunctionTable random_function(const GroupSpec& g1, const GroupSpec& g2, std::uint64_t seed);
FunctionTable random_function(const GroupSpec& g1, const GroupSpec& g2, Rng& rng);
FunctionTable random_bijection(const GroupSpec& g, std::uint64_t seed);
FunctionTable random_bijection(const GroupSpec& g, Rng& rng);

/// Random linear map G1 -> G2 between elementary Abelian p-groups of the
/// same characteristic (random matrix over Z_p), or between cyclic groups
/// (x -> k x with k drawn so the map is well defined). Throws Inapplicable for
/// other shapes.
AffineMap random_affine(const GroupSpec& g1, const GroupSpec& g2, Rng& rng);
/// Random affine permutation of an elementary Abelian p-group or a cyclic group.
AffineMap random_affine_permutation(const GroupSpec& g, Rng& rng);

}  // namespace imbalance
