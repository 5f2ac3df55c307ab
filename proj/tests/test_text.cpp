#include <catch2/catch_amalgamated.hpp>

#include "zarlab/text.hpp"

using namespace zarlab;

TEST_CASE("word grammar round trips") {
  CHECK(render(parse_word("a1 x3' a2 x3")) == "a1 x3' a2 x3");
  CHECK(render(parse_word("e")) == "e");
  CHECK(parse_word("a1 x3' a2 x3").size() == 4);
  // parsing reduces
  CHECK(parse_word("a1 a1'").empty());
  CHECK(render(parse_word("x12'")) == "x12'");
}

TEST_CASE("word grammar errors carry offsets") {
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("a1  x2"), ParseError);
  CHECK_THROWS_AS(parse_word("a1 "), ParseError);
  CHECK_THROWS_AS(parse_word(" a1"), ParseError);
  CHECK_THROWS_AS(parse_word("b1"), ParseError);
  CHECK_THROWS_AS(parse_word("a0"), ParseError);
  CHECK_THROWS_AS(parse_word("a"), ParseError);
  CHECK_THROWS_AS(parse_word("a1''"), ParseError);
  CHECK_THROWS_AS(parse_word("a1 e"), ParseError);
  try {
    parse_word("a1 x2! a3");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("polynomial grammar") {
  const GroupPolynomial p = parse_group_polynomial("a1 X^-1 a2 X");
  CHECK(p.exponents() == std::vector<long long>{-1, 1});
  CHECK(render(p) == "a1 X^-1 a2 X");
  CHECK(render(parse_group_polynomial("X")) == "X");
  CHECK(render(parse_group_polynomial("X^2 a1")) == "X^2 a1");
  CHECK(render(parse_group_polynomial("e")) == "e");
  // x^0 collapses, exponents merge across an empty coefficient
  CHECK(render(parse_group_polynomial("a1 X^0 a2")) == "a1 a2");
  CHECK(render(parse_group_polynomial("a1 X e X a2")) == "a1 X^2 a2");
  CHECK(render(parse_group_polynomial("a1 X a1 a1' X^-1 a2")) == "a1 a2");
}

TEST_CASE("polynomial grammar errors") {
  CHECK_THROWS_AS(parse_group_polynomial("a1 X^ a2"), ParseError);
  CHECK_THROWS_AS(parse_group_polynomial("a1 X2"), ParseError);
  CHECK_THROWS_AS(parse_group_polynomial("Xa"), ParseError);
  CHECK_THROWS_AS(parse_semigroup_polynomial("a1 X^-1 a2"), ParseError);
  try {
    parse_semigroup_polynomial("a1 X X^-2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  // X^0 is fine in semigroup mode
  CHECK(render(parse_semigroup_polynomial("a1 X^0 a2")) == "a1 a2");
}

TEST_CASE("semigroup word grammar") {
  CHECK(render(parse_sword("x1 y2")) == "x1 y2");
  CHECK(parse_sword("x1 y1").is_zero());
  CHECK(render(parse_sword("0")) == "0");
  CHECK(render(parse_sword("y1 x1")) == "y1 x1");
  CHECK_THROWS_AS(parse_sword("a1"), ParseError);
  CHECK_THROWS_AS(parse_sword("x1 0"), ParseError);
  CHECK_THROWS_AS(parse_sword(""), ParseError);
}

TEST_CASE("semigroup polynomial grammar") {
  const SPolynomial p = parse_spolynomial("x1 X y2 X^2");
  CHECK(render(p) == "x1 X y2 X^2");
  CHECK(render(parse_spolynomial("X^2")) == "X^2");
  CHECK(render(parse_spolynomial("x2 X^0 y3")) == "x2 y3");
  CHECK(render(parse_spolynomial("X x1 y1 X")) == "0");
  CHECK(parse_spolynomial("x1 0 x2").is_zero());
  CHECK_THROWS_AS(parse_spolynomial("x1 X^-1"), ParseError);
  CHECK_THROWS_AS(parse_spolynomial(""), ParseError);
}
