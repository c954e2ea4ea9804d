#include <doctest.h>

#include "gbv/rng.hpp"
#include "gbv/textio.hpp"
#include "gbv/vectorfield.hpp"

using namespace gbv;

namespace {

SuperFn sf(const std::string& text, int m, int n) { return parse_superfn(text, m, n); }

VectorField field(int m, int n, Parity p, const std::vector<std::string>& xc,
                  const std::vector<std::string>& sc) {
  VectorField d(m, n, p);
  for (int i = 0; i < int(xc.size()); ++i) d.set_x_coeff(i, sf(xc[std::size_t(i)], m, n));
  for (int j = 0; j < int(sc.size()); ++j) d.set_s_coeff(j, sf(sc[std::size_t(j)], m, n));
  return d;
}

}  // namespace

TEST_CASE("apply basics") {
  VectorField d = field(1, 1, Parity::Odd, {"s1"}, {});
  CHECK(d.apply(sf("x1", 1, 1)) == sf("s1", 1, 1));

  VectorField ds1 = field(0, 2, Parity::Odd, {}, {"1", "0"});
  CHECK(ds1.apply(sf("s1*s2", 0, 2)) == sf("s2", 0, 2));

  VectorField euler = field(1, 0, Parity::Even, {"x1"}, {});
  CHECK(euler.apply(sf("x1^3", 1, 0)) == sf("3*x1^3", 1, 0));
}

TEST_CASE("mixed-parity coefficients are rejected") {
  VectorField d(1, 1, Parity::Even);
  CHECK_THROWS_AS(d.set_x_coeff(0, sf("s1", 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(d.set_s_coeff(0, sf("x1", 1, 1)), std::invalid_argument);
  CHECK_NOTHROW(d.set_s_coeff(0, sf("s1", 1, 1)));
}

TEST_CASE("commutator examples") {
  // [d/ds1, s1 d/ds1] = d/ds1
  VectorField a = field(0, 1, Parity::Odd, {}, {"1"});
  VectorField b = field(0, 1, Parity::Even, {}, {"s1"});
  CHECK(a.commutator(b) == a);

  // flat coordinates commute
  VectorField dx1 = field(2, 0, Parity::Even, {"1", "0"}, {});
  VectorField dx2 = field(2, 0, Parity::Even, {"0", "1"}, {});
  CHECK(dx1.commutator(dx2).is_zero());

  // odd D = s1 d/dx1 squares to zero
  VectorField d = field(1, 1, Parity::Odd, {"s1"}, {});
  CHECK(d.commutator(d).is_zero());
}

TEST_CASE("module action") {
  VectorField d = field(1, 1, Parity::Odd, {}, {"1"});
  VectorField sd = d.left_mul(sf("s1", 1, 1));
  CHECK(sd.parity() == Parity::Even);
  CHECK(sd.s_coeff(0) == sf("s1", 1, 1));
  VectorField euler = field(1, 0, Parity::Even, {"x1"}, {});
  CHECK(euler.left_mul(sf("x1", 1, 0)).x_coeff(0) == sf("x1^2", 1, 0));
  CHECK(euler.left_mul(SuperFn::one(1, 0)) == euler);
  CHECK_THROWS_AS(field(1, 1, Parity::Even, {"1"}, {}).left_mul(sf("x1 + s1", 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("commutator laws on random fields") {
  const int m = 2, n = 2;
  for (int trial = 0; trial < 30; ++trial) {
    Rng r(19, "commutator", std::uint64_t(trial));
    Parity p1 = Parity(unsigned(r.range(0, 1))), p2 = Parity(unsigned(r.range(0, 1)));
    Parity p3 = Parity(unsigned(r.range(0, 1)));
    VectorField d1 = r.vectorfield(m, n, p1, 2);
    VectorField d2 = r.vectorfield(m, n, p2, 2);
    VectorField d3 = r.vectorfield(m, n, p3, 2);
    SuperFn f = r.superfn(m, n, Parity(unsigned(r.range(0, 1))), 2);
    SuperFn g = r.superfn(m, n, Parity(unsigned(r.range(0, 1))), 2);

    // bracket as an operator
    SuperFn lhs = d1.commutator(d2).apply(f);
    SuperFn rhs = d1.apply(d2.apply(f));
    SuperFn t = d2.apply(d1.apply(f));
    rhs = (sign_pow(unsigned(p1) * unsigned(p2)) < 0) ? rhs + t : rhs - t;
    CHECK(lhs == rhs);

    // derivation property of apply
    SuperFn dl = d1.apply(f * g);
    SuperFn dr = d1.apply(f) * g;
    SuperFn dt = f * d1.apply(g);
    auto pf = f.parity();
    if (pf) {
      dr = (sign_pow(unsigned(p1) * unsigned(*pf)) < 0) ? dr - dt : dr + dt;
      CHECK(dl == dr);
    }

    // graded Jacobi
    VectorField j1 = d1.commutator(d2.commutator(d3));
    VectorField j2 = d1.commutator(d2).commutator(d3);
    VectorField j3 = d2.commutator(d1.commutator(d3));
    VectorField rhs2 =
        (sign_pow(unsigned(p1) * unsigned(p2)) < 0) ? j2 - j3 : j2 + j3;
    CHECK(j1 == rhs2);

    // module action compatibility
    CHECK(d1.left_mul(f.parity_part(Parity::Even)).apply(g) ==
          f.parity_part(Parity::Even) * d1.apply(g));
  }
}
