#include "gbv/divergence.hpp"

#include "gbv/connections.hpp"

namespace gbv {

Divergence Divergence::coordinate(int m, int n) { return Divergence(m, n, nullptr); }

Divergence Divergence::supertrace(std::shared_ptr<const GradedConnection> gc) {
  if (!gc) throw std::invalid_argument("Divergence: null connection");
  int m = gc->m();
  return Divergence(m, m, std::move(gc));
}

Divergence Divergence::deform(const SuperFn& w) const {
  if (w.m() != m_ || w.n() != n_) throw std::invalid_argument("Divergence: dimension mismatch");
  if (!w.has_parity(Parity::Even))
    throw std::invalid_argument("Divergence: deformation weight must be even");
  Divergence d = *this;
  d.weight_ = weight_ + w;
  return d;
}

SuperFn Divergence::evaluate(const VectorField& d) const {
  if (d.m() != m_ || d.n() != n_) throw std::invalid_argument("Divergence: dimension mismatch");
  SuperFn r(m_, n_);
  if (gc_) {
    r = gc_->str_divergence(d);
  } else {
    for (int i = 0; i < m_; ++i) r = r + d.x_coeff(i).partial_x(i);
    // the odd coefficient of a homogeneous field has parity |D|+1
    const int sg = sign_pow(unsigned(flip(d.parity())));
    for (int j = 0; j < n_; ++j) {
      SuperFn t = d.s_coeff(j).partial_s(j);
      r = (sg < 0) ? r - t : r + t;
    }
  }
  if (!weight_.is_zero()) r = r + d.apply(weight_ * Rational(2));
  return r;
}

SuperFn Divergence::curvature(const VectorField& d1, const VectorField& d2) const {
  SuperFn r = evaluate(d1.commutator(d2));
  r = r - d1.apply(evaluate(d2));
  SuperFn t = d2.apply(evaluate(d1));
  const int sg = sign_pow(unsigned(d1.parity()) * unsigned(d2.parity()));
  return (sg < 0) ? r - t : r + t;
}

}  // namespace gbv
