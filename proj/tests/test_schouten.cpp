#include <doctest.h>

#include "gbv/oddpoisson.hpp"
#include "gbv/rng.hpp"
#include "gbv/schouten.hpp"
#include "gbv/textio.hpp"

using namespace gbv;

namespace {

SuperFn mv(const std::string& text, int m) { return parse_superfn(text, m, m); }

// Independent oracle for the bracket on multivectors of degree <= 1:
// [[f + X, g + Y]] = X(g) - Y(f) + [X,Y], with X = sum X^i xi_i.
SuperFn low_degree_oracle(const SuperFn& a, const SuperFn& b) {
  const int m = a.m();
  auto fn_part = [&](const SuperFn& v) { return v.coeff(0); };
  auto vec_part = [&](const SuperFn& v) {
    std::vector<Poly> x;
    for (int i = 0; i < m; ++i) x.push_back(v.coeff(OddMask(1) << i));
    return x;
  };
  auto apply = [&](const std::vector<Poly>& x, const Poly& g) {
    Poly r(m);
    for (int i = 0; i < m; ++i) r = r + x[std::size_t(i)] * g.derivative(i);
    return r;
  };
  std::vector<Poly> x = vec_part(a), y = vec_part(b);
  Poly f = fn_part(a), g = fn_part(b);
  SuperFn out = SuperFn::from_poly(m, apply(x, g) - apply(y, f));
  for (int k = 0; k < m; ++k) {
    Poly lie = apply(x, y[std::size_t(k)]) - apply(y, x[std::size_t(k)]);
    out.add_term(OddMask(1) << k, lie);
  }
  return out;
}

}  // namespace

TEST_CASE("pinned canonical pairs") {
  CHECK(schouten_bracket(mv("xi1", 1), mv("x1", 1)) == SuperFn::one(1, 1));
  CHECK(schouten_bracket(mv("x1", 1), mv("xi1", 1)) == mv("-1", 1));
  // [x d/dx, d/dx] = -d/dx
  CHECK(schouten_bracket(mv("x1*xi1", 1), mv("xi1", 1)) == mv("-xi1", 1));
  // constant coefficients
  SuperFn p = mv("xi1*xi2", 2);
  CHECK(schouten_bracket(p, p).is_zero());
}

TEST_CASE("vector field action and Lie bracket oracle") {
  for (int trial = 0; trial < 40; ++trial) {
    Rng r(37, "oracle", std::uint64_t(trial));
    const int m = 2;
    SuperFn a = SuperFn::from_poly(m, r.poly(m, 3, 2));
    SuperFn b = SuperFn::from_poly(m, r.poly(m, 3, 2));
    for (int i = 0; i < m; ++i) {
      a.add_term(OddMask(1) << i, r.poly(m, 3, 1));
      b.add_term(OddMask(1) << i, r.poly(m, 3, 1));
    }
    CHECK(schouten_bracket(a, b) == low_degree_oracle(a, b));
  }
}

TEST_CASE("hamiltonian of x1 xi1 in the cotangent model") {
  OddPoisson pi = OddPoisson::schouten(1);
  VectorField x = pi.hamiltonian(mv("x1*xi1", 1));
  CHECK(x.x_coeff(0) == mv("x1", 1));
  CHECK(x.s_coeff(0) == mv("-xi1", 1));
  CHECK(pi.hamiltonian(SuperFn::one(1, 1)).is_zero());
}

TEST_CASE("star operator") {
  CHECK(star0(mv("1", 2)) == mv("s1*s2", 2));
  SuperFn top = star0(mv("xi1*xi2", 2));
  CHECK((top == mv("1", 2) || top == mv("-1", 2)));
  for (int trial = 0; trial < 30; ++trial) {
    Rng r(41, "star", std::uint64_t(trial));
    SuperFn a = r.superfn(3, 3, Parity(unsigned(r.range(0, 1))), 3);
    CHECK(star0_inv(star0(a)) == a);
    CHECK(star0(star0_inv(a)) == a);
  }
}

TEST_CASE("del_mu on pinned examples") {
  VolumeWeight flat = VolumeWeight::flat(1);
  CHECK(del_mu(flat, mv("x1*xi1", 1)) == mv("-1", 1));
  CHECK(del_mu(flat, mv("x1^2", 1)).is_zero());

  // on a vector field, del_mu(X) = del_mu0(X) - X(w)
  for (int trial = 0; trial < 20; ++trial) {
    Rng r(43, "delmuX", std::uint64_t(trial));
    const int m = 3;
    Poly w = r.poly(m, 3, 2);
    SuperFn x(m, m);
    for (int i = 0; i < m; ++i) x.add_term(OddMask(1) << i, r.poly(m, 3, 1));
    SuperFn lhs = del_mu(VolumeWeight(w), x);
    SuperFn xw(m, m);
    for (int i = 0; i < m; ++i) xw = xw + SuperFn::monomial(m, m, 0, x.coeff(OddMask(1) << i) * w.derivative(i));
    CHECK(lhs == del_mu(VolumeWeight::flat(m), x) - xw);
  }
}

TEST_CASE("volume generator equals del_mu (random weights and multivectors)") {
  for (int m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 25; ++trial) {
      Rng r(47, "theorem_aa", std::uint64_t(trial) * 4 + std::uint64_t(m));
      Poly w = r.poly(m, 3, 2);
      Generator gen{OddPoisson::schouten(m),
                    Divergence::coordinate(m, m).deform(SuperFn::from_poly(m, w))};
      SuperFn a = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 3);
      CHECK(gen.apply(a) == del_mu(VolumeWeight(w), a));
    }
  }
}

TEST_CASE("del_mu squares to zero on probes") {
  VolumeWeight vw(parse_poly("x1^2 - x2", 2));
  for (const SuperFn& a : probe_basis(2, 2, 3)) {
    CHECK(del_mu(vw, del_mu(vw, a)).is_zero());
  }
}

TEST_CASE("modular vector field") {
  Bivector p(2);
  p.set(0, 1, parse_poly("1", 2));
  CHECK(is_poisson(p));
  // constant symplectic structure, flat volume: zero field
  CHECK(modular_vector_field(p, VolumeWeight::flat(2)).is_zero());
  // w = x1: the field matches the degree-1 part of del_mu(P) and is
  // invariant under constant shifts of w
  VolumeWeight vw(parse_poly("x1", 2));
  VectorField f1 = modular_vector_field(p, vw);
  CHECK(!f1.is_zero());
  SuperFn dmu = del_mu(vw, p.to_multivector());
  for (int i = 0; i < 2; ++i) CHECK(f1.x_coeff(i).coeff(0) == dmu.coeff(OddMask(1) << i));
  VolumeWeight vw2(parse_poly("x1 + 5", 2));
  VectorField f2 = modular_vector_field(p, vw2);
  CHECK(f1 == f2);

  Bivector bad(3);
  bad.set(0, 1, parse_poly("x3", 3));
  bad.set(1, 2, parse_poly("x2", 3));
  CHECK(!is_poisson(bad));
  CHECK_THROWS_AS(modular_vector_field(bad, VolumeWeight::flat(3)), std::invalid_argument);
}
