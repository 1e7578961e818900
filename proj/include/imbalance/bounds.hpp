#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "imbalance/analysis.hpp"
#include "imbalance/functable.hpp"

namespace imbalance {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// One side of a bound: exact when both sides are rational, double when a
/// square root is involved.
class BoundValue {
public:
    BoundValue(BigRational v) : value_(std::move(v)) {}  // NOLINT
    BoundValue(double v) : value_(v) {}                  // NOLINT
    bool exact() const noexcept { return std::holds_alternative<BigRational>(value_); }
    const BigRational& rational() const { return std::get<BigRational>(value_); }
    double approx() const;
    /// "p/q", "p", or a decimal for doubles.
    std::string str() const;

private:
    std::variant<BigRational, double> value_;
};

enum class Relation { LessEqual, GreaterEqual, Equal, Greater };
const char* to_string(Relation r);

struct BoundRecord {
    std::string id;
    std::string description;
    bool applicable = false;
    std::string applicability;  // precondition summary, or why it does not apply
    Relation relation = Relation::GreaterEqual;
    std::optional<BoundValue> lhs;
    std::optional<BoundValue> rhs;
    bool holds = false;
    bool tight = false;
    /// The printed statement of this bound is known to be wrong or differs
    /// from the evaluated form; see `note`.
    bool discrepancy = false;
    /// Reported only; never counts as a failure.
    bool informational = false;
    std::string note;
    std::map<std::string, std::int64_t> context;
};

/// Relative tolerance for bounds evaluated in floating point.
inline constexpr double kBoundTolerance = 1e-9;

/// Evaluates the whole catalog in id order. Bounds whose preconditions fail are
/// still emitted with applicable = false. `affine_shifts` feeds the
/// single-shift imbalance bound in addition to the zero map.
std::vector<BoundRecord> evaluate_bounds(const Analysis& a, std::span<const AffineMap> affine_shifts = {});

/// Records that are applicable, theorem-backed, and fail.
std::vector<const BoundRecord*> unsound_records(const std::vector<BoundRecord>& ledger);

}  // namespace imbalance
