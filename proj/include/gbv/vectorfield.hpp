#pragma once

// Graded derivations of the structural algebra, stored by their coefficients
// in the coordinate basis: D = sum g^i d/dx^i + sum h^r d/ds^r. A field of
// declared parity p carries even coefficients of parity p and odd coefficients
// of parity p+1 (the operator d/ds^r is odd); mixed-parity coefficient sets
// are rejected at construction.

#include <vector>

#include "gbv/algebra.hpp"

namespace gbv {

class VectorField {
 public:
  // Zero derivation of the given parity.
  VectorField(int m, int n, Parity parity);

  static VectorField from_coeffs(Parity parity, std::vector<SuperFn> x_coeffs,
                                 std::vector<SuperFn> s_coeffs);

  int m() const { return m_; }
  int n() const { return n_; }
  Parity parity() const { return parity_; }
  bool is_zero() const;

  const SuperFn& x_coeff(int i) const { return xc_.at(i); }
  const SuperFn& s_coeff(int j) const { return sc_.at(j); }

  void set_x_coeff(int i, const SuperFn& f);
  void set_s_coeff(int j, const SuperFn& f);

  // D(f): sum g^i partial_x(f) + sum h^r partial_s(f).
  SuperFn apply(const SuperFn& f) const;

  // Graded commutator [D1,D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1, reassembled
  // from its values on the coordinate functions.
  VectorField commutator(const VectorField& other) const;

  // Module action f.D for homogeneous f; parity |f|+|D|.
  VectorField left_mul(const SuperFn& f) const;

  VectorField operator+(const VectorField& o) const;  // same parity required
  VectorField operator-(const VectorField& o) const;
  VectorField operator-() const;
  VectorField operator*(const Rational& c) const;

  // Equality of derivations: coefficients only. The declared parity is
  // bookkeeping; the zero field of either parity is the same derivation.
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.xc_ == b.xc_ && a.sc_ == b.sc_;
  }

 private:
  void check_same_dims(const VectorField& o) const;

  int m_ = 0, n_ = 0;
  Parity parity_ = Parity::Even;
  std::vector<SuperFn> xc_, sc_;
};

}  // namespace gbv
