#include <doctest.h>

#include <random>
#include <string>

#include "rank2/serialize.hpp"
#include "support.hpp"

using namespace rank2;

TEST_CASE("round trip is the identity on constructor outputs") {
    for (const SystemPresentation& s :
         {make_x1(), make_odd_cycle(2), make_n_sigma(0), make_n_sigma(1), make_n_sigma(4),
          make_sigma_p({1, {2, 4}, 1, {0}}), make_sigma_p({2, {4, 2, 2}, 3, {1, 0}})}) {
        CHECK(parse_presentation(serialize(s)) == s);
    }
}

TEST_CASE("round trip is the identity on random validated presentations") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        SystemPresentation s = testsupport::random_presentation(rng);
        CHECK(parse_presentation(serialize(s)) == s);
    }
}

TEST_CASE("empty object is missing mode") {
    CHECK_THROWS_WITH_AS(parse_presentation("{}"), "missing field: mode at /", ParseError);
}

TEST_CASE("unknown fields rejected with location") {
    try {
        parse_presentation(R"({"mode":"subshift","orbits":[{"id":"a","lambda":1,"kind":"limit","color":3}]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.path == "/orbits/0");
        CHECK(std::string(e.what()).find("unknown field: color") != std::string::npos);
    }
}

TEST_CASE("malformed text reports byte location") {
    try {
        parse_presentation("{\"mode\": ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.path.rfind("byte", 0) == 0);
    }
}

TEST_CASE("serializer emits normal-form anchors") {
    std::string doc = serialize(make_n_sigma(2));
    Json j = Json::parse(doc);
    for (const auto& c : j["connectors"]) CHECK(c["left"]["anchor"] == 0);
}

TEST_CASE("empty middles are omitted and read back as empty") {
    SystemPresentation s = make_sigma_p({1, {2, 2}, 1, {0}});
    Json j = Json::parse(serialize(s));
    CHECK_FALSE(j["connectors"][0].contains("middle"));  // z_0 abuts directly
    CHECK(j["connectors"][1].contains("middle"));        // z_1 carries b_0..b_{m-1}
    CHECK(parse_presentation(j.dump()) == s);
}

TEST_CASE("ptuple spec parsing") {
    PTuple p = parse_ptuple_spec("1;2,4;1;0");
    CHECK(p == PTuple{1, {2, 4}, 1, {0}});
    CHECK(parse_ptuple_spec("0;2;1;") == PTuple{0, {2}, 1, {}});
    CHECK(parse_ptuple_spec("0;2;1") == PTuple{0, {2}, 1, {}});
    CHECK_THROWS_AS(parse_ptuple_spec("1;2,3;1;0"), ParseError);
}

TEST_CASE("nu spec parsing") {
    EventuallyPeriodicSeq nu = parse_nu_spec("1,2|3");
    CHECK(nu.preperiod == std::vector<int>{1, 2});
    CHECK(nu.period == std::vector<int>{3});
    CHECK(parse_nu_spec("1,3,2").period == std::vector<int>{1, 3, 2});
    CHECK_THROWS_AS(parse_nu_spec("|"), ParseError);
    CHECK_THROWS_AS(parse_nu_spec("0|1"), ParseError);
}
