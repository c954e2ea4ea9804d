#pragma once

// Exact arithmetic in the Z2-graded commutative algebra Q[x^1..x^m] (x) Lambda(s^1..s^n):
// sparse polynomials over the rationals on the even side, a Grassmann algebra on the
// odd side, graded partial derivatives and the fiber Berezin integral.

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gbv/rational.hpp"

namespace gbv {

enum class Parity : unsigned { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((unsigned(a) + unsigned(b)) & 1u);
}
inline Parity flip(Parity p) { return p + Parity::Odd; }

// (-1)^k
inline int sign_pow(unsigned k) { return (k & 1u) ? -1 : 1; }

// ---------------------------------------------------------------------------
// Odd monomials: a strictly ascending set of generator indices, stored as a
// bitmask. Bit i stands for s^{i+1}.
// ---------------------------------------------------------------------------

using OddMask = std::uint32_t;
inline constexpr int kMaxOddDim = 32;

inline int odd_degree(OddMask s) { return std::popcount(s); }

// Sign of reordering the concatenation s_A s_B into ascending order.
// Counts the pairs (i in A, j in B) with i > j, one transposition each.
// Assumes A and B are disjoint.
inline int koszul_sign(OddMask a, OddMask b) {
  unsigned inversions = 0;
  while (a) {
    OddMask low = a & (a - 1);       // a with lowest bit cleared
    OddMask bit = a ^ low;           // lowest set bit of a
    inversions += unsigned(std::popcount(b & (bit - 1)));
    a = low;
  }
  return sign_pow(inversions);
}

// ---------------------------------------------------------------------------
// Even monomials and sparse polynomials.
// ---------------------------------------------------------------------------

// Exponent vector of fixed length m, ordered graded-lexicographically so that
// term order (and hence serialization) is deterministic.
struct Monomial {
  std::vector<std::uint32_t> e;

  unsigned degree() const {
    unsigned d = 0;
    for (auto k : e) d += k;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

class Poly {
 public:
  explicit Poly(int m) : m_(m) {
    if (m < 0) throw std::invalid_argument("Poly: negative dimension");
  }
  static Poly constant(int m, const Rational& c);
  static Poly coordinate(int m, int i);  // x^{i+1}

  int m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial

  const std::map<Monomial, Rational, GradedLexLess>& terms() const { return terms_; }

  void add_term(const Monomial& mono, const Rational& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative(int i) const;  // d/dx^{i+1}

 private:
  void check_same(const Poly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Poly: dimension mismatch");
  }

  int m_ = 0;
  std::map<Monomial, Rational, GradedLexLess> terms_;  // no zero coefficients
};

// ---------------------------------------------------------------------------
// SuperFn: element of Q[x^1..x^m] (x) Lambda(s^1..s^n) in normal form.
// Odd factors are kept in ascending index order with the reordering sign
// absorbed into the polynomial coefficient; zero coefficients are dropped.
// ---------------------------------------------------------------------------

class SuperFn {
 public:
  SuperFn(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || n > kMaxOddDim)
      throw std::invalid_argument("SuperFn: bad dimensions");
  }
  static SuperFn constant(int m, int n, const Rational& c);
  static SuperFn one(int m, int n) { return constant(m, n, 1); }
  static SuperFn from_poly(int n, const Poly& p);
  static SuperFn coordinate_x(int m, int n, int i);  // x^{i+1}
  static SuperFn coordinate_s(int m, int n, int j);  // s^{j+1}
  static SuperFn monomial(int m, int n, OddMask s, const Poly& p);

  int m() const { return m_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<OddMask, Poly>& terms() const { return terms_; }
  // Polynomial coefficient of the odd monomial s (zero polynomial if absent).
  Poly coeff(OddMask s) const;

  void add_term(OddMask s, const Poly& p);

  SuperFn operator-() const;
  SuperFn operator+(const SuperFn& o) const;
  SuperFn operator-(const SuperFn& o) const;
  SuperFn operator*(const SuperFn& o) const;  // graded-commutative product
  SuperFn operator*(const Rational& c) const;

  friend bool operator==(const SuperFn&, const SuperFn&) = default;

  // Graded partial derivatives. The odd one is the LEFT derivative: the
  // generator is moved to the front, collecting (-1) per transposition,
  // then deleted.
  SuperFn partial_x(int i) const;
  SuperFn partial_s(int j) const;
  SuperFn partial(bool odd, int idx) const { return odd ? partial_s(idx) : partial_x(idx); }

  // Z2-parity: nullopt when terms of both parities are present.
  std::optional<Parity> parity() const;
  bool has_parity(Parity p) const;  // true for 0
  SuperFn parity_part(Parity p) const;

  // Z-degree in the odd generators: nullopt when mixed (0 counts as any).
  std::optional<int> z_degree() const;

  // (-1)^{n(n-1)/2} times the coefficient of the top monomial s^1 s^2 ... s^n.
  Poly berezin_fiber() const;

  // Largest total even degree over all coefficients.
  unsigned even_degree() const;

 private:
  void check_same(const SuperFn& o) const {
    if (m_ != o.m_ || n_ != o.n_)
      throw std::invalid_argument("SuperFn: dimension mismatch");
  }

  int m_ = 0, n_ = 0;
  std::map<OddMask, Poly> terms_;  // no zero polynomials
};

inline SuperFn operator*(const Rational& c, const SuperFn& f) { return f * c; }

// All monomials x^a s^S with total even degree <= max_even_degree, in a
// deterministic order. Used as the probe basis for operator identities.
std::vector<SuperFn> probe_basis(int m, int n, unsigned max_even_degree);

}  // namespace gbv
