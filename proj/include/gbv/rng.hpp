#pragma once

// Deterministic randomness for the verification harness. Every random object
// is derived from (seed, suite name, trial index) through splitmix64, so
// results are reproducible across runs and independent of evaluation order.
// Draw scheme (documented so results are reproducible across
// implementations):
//   state  = mix(mix(seed ^ fnv1a64(suite)) + trial)
//   next() = splitmix64 step
//   coefficients are uniform in {-3..3} (a drawn 0 drops the term), even
//   exponent vectors have total degree uniform in {0..max_degree} spread one
//   step at a time over the variables, and each odd monomial of the required
//   parity is included with probability 1/2.

#include <cstdint>
#include <string_view>
#include <vector>

#include "gbv/algebra.hpp"
#include "gbv/vectorfield.hpp"

namespace gbv {

class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view suite, std::uint64_t trial);

  std::uint64_t next();
  // uniform in [lo, hi]
  int range(int lo, int hi);
  bool coin() { return next() & 1u; }

  Rational coeff();  // uniform in {-3..3}
  Monomial monomial(int m, unsigned max_degree);
  Poly poly(int m, unsigned max_degree, int terms);

  // Homogeneous superfunction of the given parity; each eligible odd
  // monomial enters with probability 1/2 and carries one random even term.
  SuperFn superfn(int m, int n, Parity parity, unsigned max_degree);

  // Homogeneous field of the given declared parity.
  VectorField vectorfield(int m, int n, Parity parity, unsigned max_degree);

  // Form with all terms of the exact odd degree z_degree.
  SuperFn form_of_degree(int m, int z_degree, unsigned max_degree);

  // Polynomial vector field on R^m by components.
  std::vector<Poly> base_field(int m, unsigned max_degree);

 private:
  std::uint64_t state_;
};

}  // namespace gbv
