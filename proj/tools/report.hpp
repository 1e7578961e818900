#pragma once

#include <json.hpp>

#include "imbalance/analysis.hpp"
#include "imbalance/bounds.hpp"
#include "imbalance/search.hpp"

namespace imbalance::cli {

using nlohmann::json;

/// Rounds to 12 significant digits so that reports are byte-stable.
double round12(double v);

json to_json(const Rational& r);
json to_json(const BoundValue& v);
json to_json(const FunctionTable& f);
json to_json(const BoundRecord& r);
json to_json(const std::vector<BoundRecord>& ledger);
json to_json(const SearchReport& r);

json indicator_block(const Analysis& a);
json spectrum_block(const Analysis& a);
json spectral_block(const Analysis& a);
json ddt_block(const DDTable& d);

}  // namespace imbalance::cli
