#include "tsyslab/poly_text.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tsyslab;
using testutil::random_poly;

TEST_SUITE("poly_text") {

TEST_CASE("golden forms") {
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(LaurentPoly::constant(1)) == "1");
  CHECK(parse_poly("1").is_one());
  CHECK(parse_poly("2 - 2").is_zero());

  const std::string t1 =
      "Y[1](u) + Y[1](u+1+1/2t)*Y[1](u+2)^-1 + Y[1](u+3+1/2t)^-1";
  CHECK(to_string(parse_poly(t1)) == t1);

  CHECK(to_string(parse_poly("3Q[2](u-1/2)^2*h[1]^-1 - 4")) ==
        "3Q[2](u-1/2)^2*h[1]^-1 - 4");
}

TEST_CASE("parser canonicalizes on the way in") {
  // One full period of a Q symbol becomes an h unit.
  CHECK(parse_poly("Q[1](u+1t)") == parse_poly("h[1]Q[1](u)"));
  // Y is periodic.
  CHECK(parse_poly("Y[1](u+1t)") == parse_poly("Y[1](u)"));
  // And like terms merge.
  CHECK(parse_poly("Y[1](u) + 2Y[1](u)") == parse_poly("3Y[1](u)"));
}

TEST_CASE("syntax errors carry a column") {
  try {
    parse_poly("Q[1](u");
    FAIL("expected a ParseError");
  } catch (const ParseError &e) {
    CHECK(e.column == 7);
  }
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("Y[1](u) +"), ParseError);
  CHECK_THROWS_AS(parse_poly("h[1](u)"), ParseError);
  CHECK_THROWS_AS(parse_poly("Z[1](u)"), ParseError);
  CHECK_THROWS_AS(parse_poly("Y[1](u)^0"), ParseError);
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937 rng(23);
  for (int i = 0; i < 500; ++i) {
    Family f = i % 2 ? Family::Q : Family::Y;
    LaurentPoly p = random_poly(rng, f, 5);
    std::string text = to_string(p);
    CHECK(parse_poly(text) == p);
    CHECK(to_string(parse_poly(text)) == text);
  }
}

} // TEST_SUITE
