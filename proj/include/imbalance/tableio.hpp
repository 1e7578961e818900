#pragma once

#include <string>
#include <string_view>

#include "imbalance/functable.hpp"

namespace imbalance {

/// Text format:
///   G1 <cyclic orders>
///   G2 <cyclic orders>
///   map <|G1| codomain indices>
/// '#' starts a comment; the map may continue over following lines.
/// Throws Parse (with a line number) on malformed input and Schema when the
/// map length or an entry does not fit the groups.
FunctionTable parse_table_text(std::string_view text);
/// JSON object {"G1": "<orders>", "G2": "<orders>", "map": [..]}; group
/// fields may also be arrays of orders.
FunctionTable parse_table_json(std::string_view text);
/// Chooses JSON when the first non-space character is '{'.
FunctionTable parse_table(std::string_view text);
FunctionTable read_table_file(const std::string& path);
/// Several tables: a JSON array of table objects, or text tables each
/// starting at a G1 line.
std::vector<FunctionTable> parse_table_list(std::string_view text);
std::vector<FunctionTable> read_table_list_file(const std::string& path);

std::string format_table_text(const FunctionTable& f);
std::string format_table_json(const FunctionTable& f);

}  // namespace imbalance
