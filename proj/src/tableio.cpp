#include "imbalance/tableio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "imbalance/errors.hpp"

namespace imbalance {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

GroupSpec group_at(std::size_t line, std::span<const std::string_view> toks) {
    if (toks.empty()) parse_error(line, "group needs at least one cyclic order");
    std::string literal;
    for (auto t : toks) {
        if (!literal.empty()) literal += ' ';
        literal += t;
    }
    try {
        return parse_group(literal);
    } catch (const Error& e) {
        parse_error(line, e.what());
    }
}

FunctionTable build(const GroupSpec& g1, const GroupSpec& g2, std::vector<std::uint64_t> raw) {
    if (raw.size() != g1.order())
        fail(ErrorKind::Schema, "map has " + std::to_string(raw.size()) + " entries, expected " + std::to_string(g1.order()));
    std::vector<std::uint32_t> values(raw.size());
    for (std::size_t x = 0; x < raw.size(); ++x) {
        if (raw[x] >= g2.order())
            fail(ErrorKind::Schema, "map entry " + std::to_string(raw[x]) + " at index " + std::to_string(x) +
                                        " outside codomain of order " + std::to_string(g2.order()));
        values[x] = static_cast<std::uint32_t>(raw[x]);
    }
    return FunctionTable(g1, g2, std::move(values));
}

}  // namespace

FunctionTable parse_table_text(std::string_view text) {
    std::optional<GroupSpec> g1, g2;
    std::vector<std::uint64_t> raw;
    bool in_map = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = tokens(line);
        if (toks.empty()) {
            if (end == text.size()) break;
            continue;
        }
        std::span<const std::string_view> rest(toks);
        std::string_view head = toks.front();
        if (head == "G1" || head == "G2") {
            auto& slot = head == "G1" ? g1 : g2;
            if (slot) parse_error(line_no, "duplicate " + std::string(head) + " line");
            slot = group_at(line_no, rest.subspan(1));
            in_map = false;
        } else if (head == "map") {
            if (in_map || !raw.empty()) parse_error(line_no, "duplicate map line");
            in_map = true;
            rest = rest.subspan(1);
        } else if (!in_map) {
            parse_error(line_no, "unexpected token '" + std::string(head) + "'");
        }
        if (in_map) {
            for (auto t : rest) {
                std::uint64_t v = 0;
                auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
                if (ec != std::errc() || ptr != t.data() + t.size())
                    parse_error(line_no, "bad map entry '" + std::string(t) + "'");
                raw.push_back(v);
            }
        }
        if (end == text.size()) break;
    }
    if (!g1) fail(ErrorKind::Parse, "missing G1 line");
    if (!g2) fail(ErrorKind::Parse, "missing G2 line");
    if (!in_map) fail(ErrorKind::Parse, "missing map line");
    return build(*g1, *g2, std::move(raw));
}

FunctionTable parse_table_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::Parse, e.what());
    }
    if (!j.is_object()) fail(ErrorKind::Schema, "table JSON must be an object");
    auto group = [&](const char* key) {
        if (!j.contains(key)) fail(ErrorKind::Schema, std::string("missing field ") + key);
        const auto& v = j[key];
        if (v.is_string()) return parse_group(v.get<std::string>());
        if (v.is_array()) {
            std::vector<std::size_t> orders;
            for (const auto& o : v) {
                if (!o.is_number_unsigned()) fail(ErrorKind::Schema, std::string(key) + " orders must be unsigned integers");
                orders.push_back(o.get<std::size_t>());
            }
            return make_group(std::move(orders));
        }
        fail(ErrorKind::Schema, std::string(key) + " must be a string or an array");
    };
    GroupSpec g1 = group("G1");
    GroupSpec g2 = group("G2");
    if (!j.contains("map") || !j["map"].is_array()) fail(ErrorKind::Schema, "missing map array");
    std::vector<std::uint64_t> raw;
    for (const auto& v : j["map"]) {
        if (!v.is_number_unsigned()) fail(ErrorKind::Schema, "map entries must be unsigned integers");
        raw.push_back(v.get<std::uint64_t>());
    }
    return build(g1, g2, std::move(raw));
}

FunctionTable parse_table(std::string_view text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string_view::npos && text[i] == '{') return parse_table_json(text);
    return parse_table_text(text);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Usage, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

FunctionTable read_table_file(const std::string& path) { return parse_table(slurp(path)); }

std::vector<FunctionTable> parse_table_list(std::string_view text) {
    std::vector<FunctionTable> out;
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string_view::npos) return out;
    if (text[i] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            fail(ErrorKind::Parse, e.what());
        }
        for (const auto& item : j) out.push_back(parse_table_json(item.dump()));
        return out;
    }
    if (text[i] == '{') {
        out.push_back(parse_table_json(text));
        return out;
    }
    // Split before every line whose first token is G1, keeping line numbers
    // meaningful by padding each chunk with the preceding newlines.
    std::vector<std::size_t> starts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto toks = tokens(text.substr(pos, end - pos));
        if (!toks.empty() && toks.front() == "G1") starts.push_back(pos);
        pos = end + 1;
    }
    if (starts.empty()) fail(ErrorKind::Parse, "no G1 line found");
    for (std::size_t k = 0; k < starts.size(); ++k) {
        std::size_t end = k + 1 < starts.size() ? starts[k + 1] : text.size();
        std::size_t lines_before = static_cast<std::size_t>(std::count(text.begin(), text.begin() + starts[k], '\n'));
        std::string chunk(lines_before, '\n');
        chunk += text.substr(starts[k], end - starts[k]);
        out.push_back(parse_table_text(chunk));
    }
    return out;
}

std::vector<FunctionTable> read_table_list_file(const std::string& path) { return parse_table_list(slurp(path)); }

std::string format_table_text(const FunctionTable& f) {
    std::string s = "G1 " + f.domain().literal() + "\nG2 " + f.codomain().literal() + "\nmap";
    for (auto v : f.values()) {
        s += ' ';
        s += std::to_string(v);
    }
    s += '\n';
    return s;
}

std::string format_table_json(const FunctionTable& f) {
    nlohmann::json j;
    j["G1"] = f.domain().literal();
    j["G2"] = f.codomain().literal();
    j["map"] = std::vector<std::uint32_t>(f.values().begin(), f.values().end());
    return j.dump();
}

}  // namespace imbalance
