#pragma once

// Divergence operators on graded derivations. The coordinate-berezinian
// divergence is the primitive:
//   div(D) = sum_i dg^i/dx^i + sum_r (-1)^{|h^r|} dh^r/ds^r
// A deformation by an even weight w adds D(2w); the supertrace divergence of
// a graded connection delegates to the connections module. Berezinian volumes
// themselves are never reified: every use factors through these formulas.

#include <memory>
#include <string>

#include "gbv/vectorfield.hpp"

namespace gbv {

class GradedConnection;

// Outcome of a batch of expected-zero identity checks: the first failing
// identity and its residual in normal form, when any.
struct ResidualCase {
  bool ok = true;
  std::string what;
  std::string residual;
};

class Divergence {
 public:
  static Divergence coordinate(int m, int n);
  static Divergence supertrace(std::shared_ptr<const GradedConnection> gc);

  // Deformation by an even weight; evaluates to the base plus D(2w).
  // Deformations accumulate additively.
  Divergence deform(const SuperFn& w) const;

  int m() const { return m_; }
  int n() const { return n_; }
  bool is_supertrace() const { return gc_ != nullptr; }
  const SuperFn& weight() const { return weight_; }

  SuperFn evaluate(const VectorField& d) const;

  // div[D1,D2] - D1(div D2) + (-1)^{|D1||D2|} D2(div D1)
  SuperFn curvature(const VectorField& d1, const VectorField& d2) const;

 private:
  Divergence(int m, int n, std::shared_ptr<const GradedConnection> gc)
      : m_(m), n_(n), gc_(std::move(gc)), weight_(m, n) {}

  int m_ = 0, n_ = 0;
  std::shared_ptr<const GradedConnection> gc_;  // null: coordinate base
  SuperFn weight_;                              // accumulated even weight w
};

}  // namespace gbv
