#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "imbalance/functable.hpp"

namespace imbalance {

/// delta_F(a, b) = |{x : F(x + a) - F(x) = b}| for every a in G1 and b in G2.
/// Row a = 0 is kept so that sums over all of G1 can be taken directly.
class DDTable {
public:
    DDTable() = default;
    /// Throws Capacity when |G1| * |G2| exceeds kMaxDdtEntries.
    explicit DDTable(const FunctionTable& f);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t operator()(Element a, Element b) const { return counts_[a * cols_ + b]; }
    std::span<const std::uint32_t> row(Element a) const { return {counts_.data() + a * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> counts_;
};

inline constexpr std::size_t kMaxDdtEntries = std::size_t{1} << 26;

/// The multiset {N_i} over rows a != 0.
struct DifferentialSpectrum {
    std::map<std::uint32_t, std::uint64_t> counts;  // i -> N_i, only nonzero N_i
    std::uint32_t delta = 0;                        // Delta_F

    std::uint64_t count(std::uint32_t i) const {
        auto it = counts.find(i);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Also checks sum N_i = (|G1| - 1)|G2| and sum i N_i = (|G1| - 1)|G1|; a
/// violation raises an Internal error.
DifferentialSpectrum spectrum(const DDTable& d);
std::uint32_t differential_uniformity(const DDTable& d);
bool is_apn(const DDTable& d);
/// Every nonzero row equals |G1| / |G2| everywhere; false when |G2| does not
/// divide |G1|.
bool is_pn(const FunctionTable& f, const DDTable& d);
/// Number of zero entries over the rows a != 0.
std::uint64_t deficiency(const DDTable& d);
/// max over a != 0 of |Im D_a F|.
std::size_t t_f(const DDTable& d);

}  // namespace imbalance
