#include <doctest.h>

#include "gbv/derham.hpp"
#include "gbv/rng.hpp"
#include "gbv/schouten.hpp"
#include "gbv/textio.hpp"

using namespace gbv;

namespace {

SuperFn sf(const std::string& text, int m) { return parse_superfn(text, m, m); }

std::vector<Poly> pv(const std::vector<std::string>& comps, int m) {
  std::vector<Poly> x;
  for (const auto& c : comps) x.push_back(parse_poly(c, m));
  return x;
}

Bivector symplectic_r2() {
  Bivector p(2);
  p.set(0, 1, parse_poly("1", 2));
  return p;
}

Bivector so3_like() {
  // {x1,x2} ~ x3 cyclic: P^{12} = x3, P^{23} = x1, P^{13} = -x2
  Bivector p(3);
  p.set(0, 1, parse_poly("x3", 3));
  p.set(1, 2, parse_poly("x1", 3));
  p.set(0, 2, parse_poly("-x2", 3));
  return p;
}

}  // namespace

TEST_CASE("canonical derivations") {
  CHECK(de_rham_d(2).apply(sf("x1", 2)) == sf("s1", 2));
  CHECK(interior_x(pv({"1", "0"}, 2)).apply(sf("s1*s2", 2)) == sf("s2", 2));
  auto x = pv({"x2", "0"}, 2);
  // L_X = [i_X, d] is even and acts as the Lie derivative
  VectorField lx = lie_x(x);
  CHECK(lx.parity() == Parity::Even);
  CHECK(lx.apply(sf("x1", 2)) == sf("x2", 2));
  CHECK(lx.apply(sf("s1", 2)) == sf("s2", 2));
}

TEST_CASE("d squared vanishes") {
  for (int trial = 0; trial < 20; ++trial) {
    Rng r(53, "dd", std::uint64_t(trial));
    SuperFn a = r.superfn(3, 3, Parity(unsigned(r.range(0, 1))), 3);
    VectorField d = de_rham_d(3);
    CHECK(d.apply(d.apply(a)).is_zero());
  }
}

TEST_CASE("contraction map") {
  FormVector l1 = FormVector::decomposable(sf("s1", 2), pv({"1", "0"}, 2));
  CHECK(contraction_c(l1) == SuperFn::one(2, 2));
  FormVector l2 = FormVector::decomposable(sf("s2", 2), pv({"1", "0"}, 2));
  CHECK(contraction_c(l2).is_zero());
  FormVector l3 = FormVector::decomposable(sf("s1*s2", 2), pv({"0", "1"}, 2));
  CHECK(contraction_c(l3) == sf("-s1", 2));
}

TEST_CASE("canonical divergence zeros") {
  CHECK(div_can(de_rham_d(3)).is_zero());
  for (int trial = 0; trial < 20; ++trial) {
    Rng r(59, "hh", std::uint64_t(trial));
    auto x = r.base_field(3, 3);
    CHECK(div_can(interior_x(x)).is_zero());
    CHECK(div_can(lie_x(x)).is_zero());
  }
}

// The sign of div_can on algebraic derivations is forced by the divergence
// axiom: for L = s1 (x) d/dx1,
//   div(i_L) = div(s1 . i_{d/dx1}) = s1 div(i_{d/dx1}) + (-1)^{1.1} i_{d/dx1}(s1) = -1,
// while C(L) = i_{d/dx1}(s1) = +1. Hence div_can(i_L) = (-1)^{k+1} C(L) for
// L with form part of degree k+1, and div_can(L_K) = +d(C(K)).
TEST_CASE("divergence of algebraic and Lie derivations") {
  FormVector l = FormVector::decomposable(sf("s1", 2), pv({"1", "0"}, 2));
  CHECK(div_can(interior_form_vector(l)) == sf("-1", 2));
  CHECK(contraction_c(l) == SuperFn::one(2, 2));

  for (int m = 2; m <= 3; ++m) {
    for (int trial = 0; trial < 25; ++trial) {
      Rng r(61, "fn_lemma", std::uint64_t(trial) * 4 + std::uint64_t(m));
      int k1 = r.range(1, m);  // degree of the form part of L
      FormVector lv = FormVector::decomposable(r.form_of_degree(m, k1, 2), r.base_field(m, 2));
      SuperFn lhs = div_can(interior_form_vector(lv));
      SuperFn rhs = contraction_c(lv);
      if (sign_pow(unsigned(k1)) < 0) rhs = -rhs;  // (-1)^{k+1} with k = k1-1
      CHECK(lhs == rhs);

      int k = r.range(0, m);
      FormVector kv = FormVector::decomposable(r.form_of_degree(m, k, 2), r.base_field(m, 2));
      CHECK(div_can(lie_form_vector(kv)) == de_rham_d(m).apply(contraction_c(kv)));
    }
  }
}

TEST_CASE("interior product of a bivector") {
  Bivector p = symplectic_r2();
  CHECK(interior_p(p, sf("s1*s2", 2)) == SuperFn::one(2, 2));
  CHECK(interior_p(p, sf("s1", 2)).is_zero());
  CHECK(interior_p(p, sf("x1", 2)).is_zero());
}

TEST_CASE("del_p basics") {
  Bivector p = symplectic_r2();
  VectorField d = de_rham_d(2);
  for (int trial = 0; trial < 15; ++trial) {
    Rng r(67, "delp", std::uint64_t(trial));
    Poly f = r.poly(2, 3, 2);
    SuperFn fs = SuperFn::from_poly(2, f);
    CHECK(del_p(p, d.apply(fs)).is_zero());
    CHECK(del_p(p, fs).is_zero());
  }
  // alpha = f dg -> {f,g} up to the pinned sign convention; cross-checked
  // through the characterization below
  Poly f = parse_poly("x1", 2), g = parse_poly("x2", 2);
  SuperFn alpha = SuperFn::from_poly(2, f) * d.apply(SuperFn::from_poly(2, g));
  SuperFn expected = SuperFn::from_poly(2, poisson_bracket(p, f, g));
  CHECK(del_p(p, alpha) == expected);
}

TEST_CASE("koszul-schouten characterization") {
  for (const Bivector& p : {symplectic_r2(), so3_like()}) {
    const int m = p.m();
    VectorField d = de_rham_d(m);
    for (int trial = 0; trial < 25; ++trial) {
      Rng r(71, "ks", std::uint64_t(trial));
      Poly f = r.poly(m, 2, 2), g = r.poly(m, 2, 2);
      SuperFn fs = SuperFn::from_poly(m, f), gs = SuperFn::from_poly(m, g);
      SuperFn pb = SuperFn::from_poly(m, poisson_bracket(p, f, g));
      CHECK(koszul_schouten(p, fs, gs).is_zero());
      CHECK(koszul_schouten(p, fs, d.apply(gs)) == pb);
      CHECK(koszul_schouten(p, d.apply(fs), d.apply(gs)) == d.apply(pb));
    }
  }
}

TEST_CASE("koszul-schouten skew and leibniz hold for arbitrary P, jacobi needs poisson") {
  Bivector arbitrary(3);
  arbitrary.set(0, 1, parse_poly("x3", 3));
  arbitrary.set(1, 2, parse_poly("x2", 3));
  CHECK(!is_poisson(arbitrary));

  for (int trial = 0; trial < 15; ++trial) {
    Rng r(73, "ksax", std::uint64_t(trial));
    const int m = 3;
    SuperFn f = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 2);
    SuperFn g = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 2);
    unsigned pf = unsigned(*f.parity()), pg = unsigned(*g.parity());
    SuperFn t = koszul_schouten(arbitrary, g, f);
    if (sign_pow((pf + 1) * (pg + 1)) < 0) t = -t;
    CHECK((koszul_schouten(arbitrary, f, g) + t).is_zero());

    SuperFn h = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 2);
    SuperFn rhs = koszul_schouten(arbitrary, f, g) * h;
    SuperFn u = g * koszul_schouten(arbitrary, f, h);
    rhs = (sign_pow((pf + 1) * pg) < 0) ? rhs - u : rhs + u;
    CHECK(koszul_schouten(arbitrary, f, g * h) == rhs);
  }

  // a concrete jacobi violation for the non-poisson bivector
  const int m = 3;
  bool violated = false;
  for (int trial = 0; trial < 10 && !violated; ++trial) {
    Rng r(79, "ksjac", std::uint64_t(trial));
    SuperFn f = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 2);
    SuperFn g = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 2);
    SuperFn h = r.superfn(m, m, Parity(unsigned(r.range(0, 1))), 2);
    unsigned pf = unsigned(*f.parity()), pg = unsigned(*g.parity());
    SuperFn lhs = koszul_schouten(arbitrary, f, koszul_schouten(arbitrary, g, h));
    SuperFn rhs = koszul_schouten(arbitrary, koszul_schouten(arbitrary, f, g), h);
    SuperFn t = koszul_schouten(arbitrary, g, koszul_schouten(arbitrary, f, h));
    rhs = (sign_pow((pf + 1) * (pg + 1)) < 0) ? rhs - t : rhs + t;
    violated = !(lhs - rhs).is_zero();
  }
  CHECK(violated);
}

TEST_CASE("del_p squares to zero and commutes with d when P is poisson") {
  for (const Bivector& p : {symplectic_r2(), so3_like()}) {
    VectorField d = de_rham_d(p.m());
    for (const SuperFn& alpha : probe_basis(p.m(), p.m(), 2)) {
      CHECK(del_p(p, del_p(p, alpha)).is_zero());
      CHECK((d.apply(del_p(p, alpha)) + del_p(p, d.apply(alpha))).is_zero());
    }
  }
}

TEST_CASE("canonical generator equals del_p") {
  for (const Bivector& p : {symplectic_r2(), so3_like()}) {
    CHECK(is_poisson(p));
    ResidualCase rc = theorem_bb_check(p, probe_basis(p.m(), p.m(), 2));
    INFO(rc.what, " ", rc.residual);
    CHECK(rc.ok);
  }
  Bivector zero(2);
  ResidualCase rc = theorem_bb_check(zero, probe_basis(2, 2, 2));
  CHECK(rc.ok);
}
