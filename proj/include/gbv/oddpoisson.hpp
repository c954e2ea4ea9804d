#pragma once

// Odd Poisson (Gerstenhaber) structures, hamiltonian derivations, generators
// built from divergence operators, their deformation and master-equation
// machinery, and the QS / weak-SP / weak-QSP predicates.

#include <optional>
#include <string>
#include <vector>

#include "gbv/bivector.hpp"
#include "gbv/divergence.hpp"
#include "gbv/vectorfield.hpp"

namespace gbv {

class OddPoisson {
 public:
  enum class Model { Schouten, KoszulSchouten };

  static OddPoisson schouten(int m);
  static OddPoisson koszul_schouten(Bivector p);

  Model model() const { return model_; }
  int m() const { return m_; }
  int n() const { return m_; }  // both models live on (m|m)
  const Bivector& bivector() const;

  // The odd bracket; |[[f,g]]| = |f|+|g|+1. Non-homogeneous inputs split by
  // linearity.
  SuperFn bracket(const SuperFn& f, const SuperFn& g) const;

  // X_f = [[f, . ]] as a coefficient field; f homogeneous, parity |f|+1.
  VectorField hamiltonian(const SuperFn& f) const;

 private:
  OddPoisson(Model model, int m, std::optional<Bivector> p)
      : model_(model), m_(m), p_(std::move(p)) {}

  Model model_;
  int m_;
  std::optional<Bivector> p_;
};

struct Generator {
  OddPoisson pi;
  Divergence dv;

  // Delta f = (-1)^{|f|} (1/2) div(X_f); non-homogeneous f split by linearity.
  SuperFn apply(const SuperFn& f) const;
};

// [[f,g]] - (-1)^{|f|} ( Delta(fg) - (Delta f) g - (-1)^{|f|} f (Delta g) );
// identically zero for every generator built from a divergence operator.
SuperFn bv_defect(const Generator& gen, const SuperFn& f, const SuperFn& g);

// Residual of the square identity:
//   Delta^2(fg) - (Delta^2 f) g - f (Delta^2 g)
//     - (-1)^{|f|} ( Delta[[f,g]] - [[Delta f, g]] - (-1)^{|f|-1}[[f, Delta g]] )
SuperFn square_defect(const Generator& gen, const SuperFn& f, const SuperFn& g);

// Residual of the curvature link:
//   Delta[[f,g]] - [[Delta f, g]] - (-1)^{|f|-1}[[f, Delta g]]
//     - (-1)^{|f|+|g|-1} (1/2) R^div(X_f, X_g)
SuperFn curvature_link_defect(const Generator& gen, const SuperFn& f, const SuperFn& g);

// Generator of the divergence deformed by the even weight w; satisfies
// Delta' f = Delta f + [[w, f]].
Generator deform_generator(const Generator& gen, const SuperFn& w);

// Delta w + (1/2)[[w,w]] for even w.
SuperFn master_defect(const Generator& gen, const SuperFn& w);

// exp of an even element with zero body (nilpotent), as a finite series.
SuperFn exp_nilpotent(const SuperFn& w);

// QS: [D,D] = 0 and div(D) = 0, for odd D.
bool is_qs(const VectorField& d, const Divergence& dv);

struct ProbeVerdict {
  bool ok = true;
  unsigned probe_degree = 0;  // certification degree of the probe basis
  std::string what;
  std::string residual;
};

// weak SP: Delta^2 = 0 on the full monomial probe basis up to the given even
// degree (conclusive for degree-bounded operators on the polynomial model).
ProbeVerdict is_weak_sp(const OddPoisson& pi, const Divergence& dv, unsigned probe_degree);

// weak QSP: weak SP, QS, and D a derivation of the bracket, checked through
// the residual [[Df,g]] + (-1)^{|f|-1}[[f,Dg]] - D[[f,g]] on probe pairs.
ProbeVerdict is_weak_qsp(const OddPoisson& pi, const VectorField& d, const Divergence& dv,
                         unsigned probe_degree);

}  // namespace gbv
