#pragma once

// Bivector field on R^m: antisymmetric matrix of polynomial components,
// upper triangle stored. The Poisson property is decided elsewhere via the
// Schouten self-bracket of the associated quadratic multivector.

#include <vector>

#include "gbv/algebra.hpp"

namespace gbv {

class Bivector {
 public:
  explicit Bivector(int m) : m_(m), upper_(std::size_t(m) * std::size_t(m), Poly(m)) {}

  int m() const { return m_; }

  // Component P^{ij}; antisymmetry is built in.
  Poly at(int i, int j) const {
    if (i < 0 || j < 0 || i >= m_ || j >= m_)
      throw std::invalid_argument("Bivector: index out of range");
    if (i == j) return Poly(m_);
    return i < j ? upper_[idx(i, j)] : -upper_[idx(j, i)];
  }

  void set(int i, int j, const Poly& p) {
    if (i < 0 || j < 0 || i >= m_ || j >= m_ || i == j)
      throw std::invalid_argument("Bivector: bad component");
    if (i < j)
      upper_[idx(i, j)] = p;
    else
      upper_[idx(j, i)] = -p;
  }

  bool is_zero() const {
    for (const auto& p : upper_)
      if (!p.is_zero()) return false;
    return true;
  }

  // The multivector sum_{i<j} P^{ij} xi_i xi_j in the (m|m) algebra.
  SuperFn to_multivector() const {
    SuperFn f(m_, m_);
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j)
        f.add_term((OddMask(1) << i) | (OddMask(1) << j), upper_[idx(i, j)]);
    return f;
  }

  friend bool operator==(const Bivector&, const Bivector&) = default;

 private:
  std::size_t idx(int i, int j) const { return std::size_t(i) * std::size_t(m_) + std::size_t(j); }

  int m_;
  std::vector<Poly> upper_;  // entries with i<j at idx(i,j); rest unused
};

// Poisson bracket of functions induced by P, with the sign convention tied to
// the interior product i_P used by the de Rham model:
//   {f,g} = sum_{i,j} P^{ij} (df/dx^j)(dg/dx^i)
Poly poisson_bracket(const Bivector& P, const Poly& f, const Poly& g);

}  // namespace gbv
