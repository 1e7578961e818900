#include <doctest.h>

#include <string>

#include "imbalance/errors.hpp"
#include "imbalance/tableio.hpp"

using namespace imbalance;

namespace {

std::pair<ErrorKind, std::string> error_of(const std::string& text) {
    try {
        parse_table(text);
    } catch (const Error& e) {
        return {e.kind(), e.what()};
    }
    return {ErrorKind::Internal, ""};
}

}  // namespace

TEST_CASE("text tables with comments and continued maps") {
    auto f = parse_table("# x^3 over GF(8)\nG1 2 2 2\nG2 2 2 2  # same\n\nmap 0 1 3 4\n  5 6 7 2\n");
    CHECK(f.domain().order() == 8);
    CHECK(f(3) == 4);
    CHECK(f(7) == 2);
    CHECK(parse_table(format_table_text(f)) == f);
    CHECK(parse_table(format_table_json(f)) == f);
}

TEST_CASE("JSON tables accept string or array group fields") {
    auto f = parse_table(R"({"G1": [5], "G2": "3", "map": [0, 1, 2, 0, 1]})");
    CHECK(f.codomain().order() == 3);
    CHECK(f(4) == 1);
}

TEST_CASE("parse errors carry line numbers") {
    auto [k1, m1] = error_of("G1 2 2\nG2 2\nmap 0 1 x 1\n");
    CHECK(k1 == ErrorKind::Parse);
    CHECK(m1.find("line 3") != std::string::npos);
    auto [k2, m2] = error_of("G1 2 2\nbogus\n");
    CHECK(k2 == ErrorKind::Parse);
    CHECK(m2.find("line 2") != std::string::npos);
    CHECK(error_of("G1 2\nG1 2\n").first == ErrorKind::Parse);
    CHECK(error_of("G1 2\nG2 2\n").first == ErrorKind::Parse);
    CHECK(error_of("G1 2 y\nG2 2\nmap 0 1").first == ErrorKind::Parse);
    CHECK(error_of("{\"G1\": ").first == ErrorKind::Parse);
}

TEST_CASE("schema errors for length and range") {
    CHECK(error_of("G1 2 2\nG2 2\nmap 0 1 1\n").first == ErrorKind::Schema);
    CHECK(error_of("G1 2 2\nG2 2\nmap 0 1 1 2\n").first == ErrorKind::Schema);
    CHECK(error_of(R"({"G1": "2", "G2": "2", "map": [0, -1]})").first == ErrorKind::Schema);
    CHECK(error_of(R"({"G1": "2", "map": [0, 1]})").first == ErrorKind::Schema);
    CHECK(error_of(R"([1, 2])").first != ErrorKind::Internal);
}

TEST_CASE("table lists") {
    auto list = parse_table_list("G1 2\nG2 2\nmap 0 1\n# next\nG1 2\nG2 2\nmap 1\n0\n");
    REQUIRE(list.size() == 2);
    CHECK(list[1](0) == 1);
    auto json = parse_table_list(R"([{"G1": "2", "G2": "2", "map": [1, 1]}])");
    REQUIRE(json.size() == 1);
    CHECK(json[0](1) == 1);
    try {
        parse_table_list("G1 2\nG2 2\nmap 0 1\nG1 2\nG2 2\nmap 0 q\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 6") != std::string::npos);
    }
}
