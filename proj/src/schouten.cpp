#include "gbv/schouten.hpp"

#include "gbv/derham.hpp"

namespace gbv {

namespace {

void check_cotangent(const SuperFn& a) {
  if (a.m() != a.n()) throw std::invalid_argument("schouten: expected an (m|m) multivector");
}

SuperFn schouten_bracket_homog(const SuperFn& a, Parity pa, const SuperFn& b) {
  const int m = a.m();
  SuperFn r(m, m);
  // first-slot sign (-1)^{|A|+1}; the second term always carries -1
  const int sa = sign_pow(unsigned(pa) + 1u);
  for (int i = 0; i < m; ++i) {
    SuperFn t1 = a.partial_s(i) * b.partial_x(i);
    r = (sa < 0) ? r - t1 : r + t1;
    r = r - a.partial_x(i) * b.partial_s(i);
  }
  return r;
}

}  // namespace

SuperFn schouten_bracket(const SuperFn& a, const SuperFn& b) {
  check_cotangent(a);
  if (a.m() != b.m() || a.n() != b.n())
    throw std::invalid_argument("schouten: dimension mismatch");
  SuperFn r(a.m(), a.n());
  for (Parity p : {Parity::Even, Parity::Odd}) {
    SuperFn part = a.parity_part(p);
    if (part.is_zero()) continue;
    r = r + schouten_bracket_homog(part, p, b);
  }
  return r;
}

bool is_poisson(const Bivector& p) {
  SuperFn mv = p.to_multivector();
  return schouten_bracket(mv, mv).is_zero();
}

// ---------------------------------------------------------------------------
// Star isomorphism. star0 of the monomial xi_S is the iterated left
// contraction of the top form, lowest index applied last:
//   star0(xi_S) = d/ds^{i_1} ... d/ds^{i_k} (s^1...s^m),  i_1 < ... < i_k.
// ---------------------------------------------------------------------------

namespace {

// sign and resulting mask of the full contraction
int star_sign(int m, OddMask s) {
  OddMask top = (m >= kMaxOddDim) ? ~OddMask(0) : (OddMask(1) << m) - 1;
  OddMask cur = top;
  int sg = 1;
  // apply the highest index first so the lowest acts last
  for (int j = m - 1; j >= 0; --j) {
    OddMask bit = OddMask(1) << j;
    if (!(s & bit)) continue;
    sg *= sign_pow(unsigned(std::popcount(cur & (bit - 1))));
    cur ^= bit;
  }
  return sg;
}

}  // namespace

SuperFn star0(const SuperFn& a) {
  check_cotangent(a);
  const int m = a.m();
  const OddMask top = (m >= kMaxOddDim) ? ~OddMask(0) : (OddMask(1) << m) - 1;
  SuperFn r(m, m);
  for (const auto& [s, p] : a.terms()) {
    int sg = star_sign(m, s);
    r.add_term(top ^ s, sg < 0 ? -p : p);
  }
  return r;
}

SuperFn star0_inv(const SuperFn& alpha) {
  check_cotangent(alpha);
  const int m = alpha.m();
  const OddMask top = (m >= kMaxOddDim) ? ~OddMask(0) : (OddMask(1) << m) - 1;
  SuperFn r(m, m);
  for (const auto& [u, p] : alpha.terms()) {
    OddMask s = top ^ u;
    int sg = star_sign(m, s);  // same sign as the forward map, so the round trip is the identity
    r.add_term(s, sg < 0 ? -p : p);
  }
  return r;
}

SuperFn del_mu(const VolumeWeight& vw, const SuperFn& a) {
  check_cotangent(a);
  const int m = a.m();
  if (vw.w.m() != m) throw std::invalid_argument("del_mu: weight dimension mismatch");
  SuperFn form = star0(a);
  SuperFn der = de_rham_d(m).apply(form);
  if (!vw.w.is_zero()) {
    // (dw) ^ form with dw = sum dw/dx^i s^i
    SuperFn dw(m, m);
    for (int i = 0; i < m; ++i) dw.add_term(OddMask(1) << i, vw.w.derivative(i));
    der = der + dw * form;
  }
  return -star0_inv(der);
}

VectorField modular_vector_field(const Bivector& p, const VolumeWeight& vw) {
  if (!is_poisson(p)) throw std::invalid_argument("modular_vector_field: P is not Poisson");
  const int m = p.m();
  SuperFn mv = del_mu(vw, p.to_multivector());
  VectorField field(m, 0, Parity::Even);
  for (int i = 0; i < m; ++i) {
    Poly c = mv.coeff(OddMask(1) << i);
    field.set_x_coeff(i, SuperFn::from_poly(0, c));
  }
  return field;
}

}  // namespace gbv
