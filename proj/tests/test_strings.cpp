#include <doctest.h>

#include "lr/refine.hpp"
#include "lr/strings.hpp"

using namespace lr;

TEST_CASE("parse accepts the surface syntax") {
    LrString s = parse_lr_string("S011XX");
    CHECK(s.size() == 6);
    CHECK(s.order() == 12);
    CHECK(to_string(s) == "S011XX");

    LrString odd = parse_lr_string("S1_211XX");
    CHECK(odd.size() == 6);
    CHECK(odd.order() == 13);
    CHECK(odd.tokens[1].sub2);
    CHECK(parse_lr_string("S1211XX") == odd);   // bare-digit subscript form
    CHECK(parse_lr_string("S1_2 11XX") == odd); // whitespace ignored
}

TEST_CASE("parse rejections name the rule") {
    CHECK_THROWS_AS(parse_lr_string("XXS"), LrParseError);      // S must be first
    CHECK_THROWS_AS(parse_lr_string("S011X"), LrParseError);    // one X
    CHECK_THROWS_AS(parse_lr_string("S0XXXX"), LrParseError);   // four X
    CHECK_THROWS_AS(parse_lr_string("S0_21_2XX"), LrParseError);// two subscripts
    CHECK_THROWS_AS(parse_lr_string("SXX"), LrParseError);      // too short
    CHECK_THROWS_AS(parse_lr_string("S0Y1XX"), LrParseError);   // unknown letter
    CHECK_THROWS_AS(parse_lr_string("SS011XX"), LrParseError);  // second S
    CHECK_THROWS_AS(parse_lr_string("S_2011XX"), LrParseError); // S has no subscript
}

TEST_CASE("family expansion fixed points") {
    CHECK(to_string(expand_family("even-2", 0)) == "S00X1X0");
    CHECK(to_string(expand_family("even-5", 0)) == "S01100XX0");
    CHECK(to_string(expand_family("odd-4", 0)) == "S01XX1_2");
    CHECK(to_string(expand_family("odd-4", 1)) == "S1011XX11_2");
    CHECK(to_string(expand_family("odd-2", 0)) == "S0X1X_2");
    CHECK(to_string(expand_family("odd-3", 0)) == "S110XX_2");
    CHECK(to_string(expand_family("even-1", 3)) == "S011XX");  // one-string family
    CHECK_THROWS_AS(expand_family("even-7", 0), std::invalid_argument);
}

TEST_CASE("realize the two fixed classification strings") {
    RealizedGraph even = realize(parse_lr_string("S011XX"));
    CHECK(even.graph.order() == 12);
    CHECK(even.graph.degree_set() == std::vector<int>{2, 3});
    CHECK(run_colour_refinement(even.graph).iteration_number == 11);
    CHECK(is_long_refinement(even.graph));

    RealizedGraph odd = realize(parse_lr_string("S1_211XX"));
    CHECK(odd.graph.order() == 13);
    CHECK(odd.graph.degree_set() == std::vector<int>{2, 3});
    CHECK(run_colour_refinement(odd.graph).iteration_number == 12);
    CHECK(odd.singleton_of[1] >= 0);
}

TEST_CASE("well-formed strings outside the classification fail the engine check") {
    CHECK_THROWS_AS(realize(parse_lr_string("S000XX")), RealizeError);
    // the d in {l+3,l+4} case analysis mentions S11XX, but its realization
    // is 3-regular and correctly rejected here
    CHECK_THROWS_AS(realize(parse_lr_string("S11XX")), RealizeError);
    CHECK_THROWS_AS(realize(parse_lr_string("S1X1_2X")), RealizeError);
}

TEST_CASE("extract_string recovers the string") {
    Graph g = realize(parse_lr_string("S011XX")).graph;
    CHECK(to_string(extract_string(g)) == "S011XX");
    CHECK(to_string(extract_string(realize(expand_family("odd-4", 0)).graph)) == "S01XX1_2");
    CHECK_THROWS_AS(extract_string(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("round trip across all families") {
    for (const std::string& family : kFamilyIds) {
        for (int k = 0; k <= 4; ++k) {
            LrString s = expand_family(family, k);
            CAPTURE(family);
            CAPTURE(k);
            RealizedGraph rg = realize(s);
            CHECK(extract_string(rg.graph) == s);
            // order parity matches the even/odd family split
            bool odd_family = family[0] == 'o';
            CHECK((rg.graph.order() % 2 == 1) == odd_family);
            CHECK(rg.graph.order() == s.order());
            if (family == "even-1" || family == "odd-1") break;
        }
    }
}
