#include <doctest.h>

#include "gbv/rng.hpp"
#include "gbv/textio.hpp"
#include "gbv/vectorfield.hpp"

using namespace gbv;

TEST_CASE("canonical emission") {
  SuperFn f = parse_superfn("3/2*x1^2*s1*s2 - s2", 2, 2);
  CHECK(to_string(f) == "-s2 + 3/2*x1^2*s1*s2");
  CHECK(to_string(SuperFn(2, 2)) == "0");
  CHECK(to_string(SuperFn::constant(2, 2, Rational(-1, 3))) == "-1/3");
  PrintOptions xi{"xi"};
  CHECK(to_string(parse_superfn("s1", 1, 1), xi) == "xi1");
}

TEST_CASE("parser normalizes order and signs") {
  CHECK(parse_superfn("s2*s1", 0, 2) == parse_superfn("-s1*s2", 0, 2));
  CHECK(parse_superfn("s1*s1", 0, 2).is_zero());
  CHECK(parse_superfn("x2*x1", 2, 0) == parse_superfn("x1*x2", 2, 0));
  CHECK(parse_superfn("xi1*xi2", 0, 2) == parse_superfn("s1*s2", 0, 2));
  CHECK(parse_superfn("2/4*x1", 1, 0) == parse_superfn("1/2*x1", 1, 0));
  CHECK(parse_superfn(" - x1 + x1", 1, 0).is_zero());
  CHECK(parse_superfn("x1^0", 1, 0) == SuperFn::one(1, 0));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_superfn("x1 +", 1, 0), ParseError);
  CHECK_THROWS_AS(parse_superfn("y1", 1, 1), ParseError);
  CHECK_THROWS_AS(parse_superfn("x3", 2, 0), ParseError);
  CHECK_THROWS_AS(parse_superfn("s2", 1, 1), ParseError);
  CHECK_THROWS_AS(parse_superfn("1/0", 1, 0), ParseError);
  CHECK_THROWS_AS(parse_superfn("", 1, 0), ParseError);
  CHECK_THROWS_AS(parse_superfn("x0", 1, 0), ParseError);
  try {
    parse_superfn("x1 + @", 1, 0);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("round trip is the identity on random elements") {
  for (int trial = 0; trial < 50; ++trial) {
    Rng r(3, "roundtrip", std::uint64_t(trial));
    SuperFn f = r.superfn(3, 3, Parity(unsigned(r.range(0, 1))), 4);
    CHECK(parse_superfn(to_string(f), 3, 3) == f);
  }
}

TEST_CASE("vector field emission") {
  VectorField d(1, 1, Parity::Even);
  d.set_x_coeff(0, parse_superfn("x1", 1, 1));
  CHECK(to_string(d) == "(x1)d/dx1");
  VectorField z(2, 2, Parity::Odd);
  CHECK(to_string(z) == "0");
}

TEST_CASE("vector field parsing round trip") {
  VectorField d = parse_vectorfield("(x1)d/dx1 + (-s1)d/ds2", 2, 2);
  CHECK(d.parity() == Parity::Even);
  CHECK(d.x_coeff(0) == parse_superfn("x1", 2, 2));
  CHECK(d.s_coeff(1) == parse_superfn("-s1", 2, 2));
  for (int trial = 0; trial < 20; ++trial) {
    Rng r(5, "vf_roundtrip", std::uint64_t(trial));
    VectorField v = r.vectorfield(2, 2, Parity(unsigned(r.range(0, 1))), 3);
    if (v.is_zero()) continue;
    CHECK(parse_vectorfield(to_string(v), 2, 2) == v);
  }
  CHECK(parse_vectorfield("(xi1)d/dxi1", 1, 1).s_coeff(0) == parse_superfn("s1", 1, 1));
  CHECK_THROWS_AS(parse_vectorfield("(x1)d/dx9", 2, 2), ParseError);
  CHECK_THROWS_AS(parse_vectorfield("(x1 + s1)d/dx1", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_vectorfield("x1 d/dx1", 1, 1), ParseError);
}
