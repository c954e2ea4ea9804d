#pragma once

// The tangent model: differential forms on R^m as superfunctions in
// (x^i, s^i = dx^i), the canonical derivations d, i_X, L_X, the second-order
// contraction i_P, the canonical divergence, the Koszul-Schouten bracket of a
// bivector and its generator del_P.

#include <vector>

#include "gbv/bivector.hpp"
#include "gbv/divergence.hpp"
#include "gbv/vectorfield.hpp"

namespace gbv {

// Forms are SuperFn values with n == m and odd coordinates s^1..s^m.

// d = sum_i s^i d/dx^i, the odd derivation with d^2 = 0.
VectorField de_rham_d(int m);

// Interior product by a polynomial vector field X = sum X^i d/dx^i:
// i_X = sum X^i d/ds^i (odd derivation, left contraction).
VectorField interior_x(const std::vector<Poly>& x_components);

// Lie derivative L_X = [i_X, d].
VectorField lie_x(const std::vector<Poly>& x_components);

// Vector-valued forms / form-valued vectors, stored as one form component per
// vector index. Component degrees must agree (zero components are fine).
struct FormVector {
  int m = 0;
  int degree = 0;                // Z-degree of the components
  std::vector<SuperFn> comp;     // comp[i] is the form paired with d/dx^i

  static FormVector decomposable(const SuperFn& omega, const std::vector<Poly>& x_components);
  void validate() const;
};

// The algebraic derivation i_L = sum_i L_i ^ i_{d/dx^i} for L with components
// of degree k+1; it has degree k.
VectorField interior_form_vector(const FormVector& l);

// Lie-type derivation L_K = [i_K, d] for K with components of degree k.
VectorField lie_form_vector(const FormVector& k);

// (1,1)-contraction: on a decomposable omega (x) X it is i_X omega, extended
// bilinearly; zero on degree-0 components.
SuperFn contraction_c(const FormVector& l);

// Divergence attached to the canonical berezinian of the tangent model: in
// the (x, s) chart it is the coordinate divergence.
SuperFn div_can(const VectorField& d);

// Second-order contraction by a bivector:
//   i_P = sum_{i<j} P^{ij} (d/ds^j)(d/ds^i)   (left derivatives, lower index
// applied first), so i_P(s^i s^j) = P^{ij} for i < j. Not a derivation.
SuperFn interior_p(const Bivector& p, const SuperFn& alpha);

// del_P(alpha) = d(i_P alpha) - i_P(d alpha); lowers Z-degree by 1.
SuperFn del_p(const Bivector& p, const SuperFn& alpha);

// Koszul-Schouten bracket, defined from del_P through the generator
// inversion:
//   [[a,b]]_P = (-1)^{|a|} ( del_P(ab) - del_P(a) b - (-1)^{|a|} a del_P(b) )
// Skew-symmetry and the Leibniz rule hold for every P; the Jacobi identity
// holds exactly when P is Poisson.
SuperFn koszul_schouten(const Bivector& p, const SuperFn& a, const SuperFn& b);

// Checks on a probe set that the canonical-berezinian generator of the
// Koszul-Schouten bracket equals del_P, that its square vanishes, and that it
// commutes with d. Returns the first nonzero residual, if any.
ResidualCase theorem_bb_check(const Bivector& p, const std::vector<SuperFn>& probes);

}  // namespace gbv
