#include "toricmorse/fan_json.hpp"

#include "toricmorse/variety.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace toricmorse;

namespace {

const char* kP2 = R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]})";

}  // namespace

TEST_CASE("a valid fan file parses and certifies") {
    Fan fan = parseFanText(kP2);
    REQUIRE(fan.rank() == 2);
    REQUIRE(fan.rayCount() == 3);
    ToricVariety x("p2-from-file", std::move(fan));
    REQUIRE(x.dim() == 2);
}

TEST_CASE("syntax errors raise FanFormatError") {
    REQUIRE_THROWS_AS(parseFanText("{not json"), FanFormatError);
    REQUIRE_THROWS_AS(parseFanText("[1,2,3]"), FanFormatError);
    REQUIRE_THROWS_AS(parseFanText(R"({"rank":2,"rays":[[1,0]]})"), FanFormatError);  // missing key
    REQUIRE_THROWS_AS(parseFanText(R"({"rank":"two","rays":[],"max_cones":[]})"), FanFormatError);
    REQUIRE_THROWS_AS(
        parseFanText(R"({"rank":2,"rays":[[1,0],[0,1,3],[-1,-1]],"max_cones":[[0,1]]})"),
        FanFormatError);  // ray of wrong length
}

TEST_CASE("structural problems raise FanValidationError") {
    // non-primitive ray
    REQUIRE_THROWS_AS(
        parseFanText(R"({"rank":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]})"),
        FanValidationError);
    // out-of-range cone index
    REQUIRE_THROWS_AS(
        parseFanText(R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,5],[2,0]]})"),
        FanValidationError);
}

TEST_CASE("incomplete fans are rejected at variety construction") {
    Fan fan = parseFanText(R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2]]})");
    REQUIRE_THROWS_AS(ToricVariety("incomplete", std::move(fan)), FanValidationError);
}

TEST_CASE("missing file raises FanFormatError") {
    REQUIRE_THROWS_AS(parseFanFile("/nonexistent/path/fan.json"), FanFormatError);
}
