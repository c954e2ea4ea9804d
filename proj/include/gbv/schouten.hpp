#pragma once

// The cotangent model: multivectors on R^m as superfunctions in (x^i, xi_i),
// the Schouten bracket, the star isomorphism to forms, and the generator
// del_mu of the bracket attached to a volume weight.

#include "gbv/bivector.hpp"
#include "gbv/vectorfield.hpp"

namespace gbv {

// Multivectors are SuperFn values with n == m; the odd coordinate xi_i stands
// for d/dx^i. Z-degree == odd-monomial size; vector fields are degree 1.

// Canonical odd Poisson bracket of the cotangent model. For homogeneous A:
//   [[A,B]] = sum_i ( (-1)^{|A|+1} (dA/dxi_i)(dB/dx^i) - (dA/dx^i)(dB/dxi_i) )
// with left derivatives throughout. The one free sign is pinned by
// [[xi_1, x^1]] = 1; on vector fields the bracket is the Lie bracket, on a
// vector field and a function it is X(f). Non-homogeneous arguments split by
// linearity.
SuperFn schouten_bracket(const SuperFn& a, const SuperFn& b);

bool is_poisson(const Bivector& p);

// Volume weight w encodes mu = e^w mu_0 with mu_0 = dx^1 ^ ... ^ dx^m; only
// polynomial data ever appears since the exponentials cancel in del_mu.
struct VolumeWeight {
  Poly w;
  explicit VolumeWeight(Poly w_) : w(std::move(w_)) {}
  static VolumeWeight flat(int m) { return VolumeWeight(Poly(m)); }
};

// Star isomorphism multivectors -> forms defined by mu_0: full contraction of
// the degree-k part into the constant top form, i_A applied ascending-index
// innermost-last. star0_inv is its exact inverse.
SuperFn star0(const SuperFn& a);
SuperFn star0_inv(const SuperFn& alpha);

// del_mu = -star0^{-1} (d + (dw)^) star0; lowers Z-degree by 1.
SuperFn del_mu(const VolumeWeight& vw, const SuperFn& a);

// Vector field on R^m (n = 0 superfunction coefficients) given by the
// degree-1 part of del_mu applied to the bivector; requires P Poisson.
VectorField modular_vector_field(const Bivector& p, const VolumeWeight& vw);

}  // namespace gbv
