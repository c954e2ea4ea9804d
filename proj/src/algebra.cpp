#include "gbv/algebra.hpp"

#include <algorithm>

namespace gbv {

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly Poly::constant(int m, const Rational& c) {
  Poly p(m);
  p.add_term(Monomial{std::vector<std::uint32_t>(m, 0)}, c);
  return p;
}

Poly Poly::coordinate(int m, int i) {
  if (i < 0 || i >= m) throw std::invalid_argument("Poly: coordinate out of range");
  Monomial mono{std::vector<std::uint32_t>(m, 0)};
  mono.e[i] = 1;
  Poly p(m);
  p.add_term(mono, 1);
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

void Poly::add_term(const Monomial& mono, const Rational& c) {
  if (int(mono.e.size()) != m_) throw std::invalid_argument("Poly: monomial arity mismatch");
  if (rat_is_zero(c)) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(m_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly r(m_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial mono{std::vector<std::uint32_t>(m_, 0)};
      for (int i = 0; i < m_; ++i) mono.e[i] = ma.e[i] + mb.e[i];
      Rational c = ca * cb;
      r.add_term(mono, c);
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(m_);
  if (rat_is_zero(c)) return r;
  for (const auto& [mono, k] : terms_) {
    Rational v = k * c;
    r.terms_.emplace(mono, v);
  }
  return r;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= m_) throw std::invalid_argument("Poly: derivative index out of range");
  Poly r(m_);
  for (const auto& [mono, c] : terms_) {
    if (mono.e[i] == 0) continue;
    Monomial d = mono;
    d.e[i] -= 1;
    Rational v = c * Rational(mono.e[i]);
    r.add_term(d, v);
  }
  return r;
}

// ---------------------------------------------------------------------------
// SuperFn
// ---------------------------------------------------------------------------

SuperFn SuperFn::constant(int m, int n, const Rational& c) {
  SuperFn f(m, n);
  f.add_term(0, Poly::constant(m, c));
  return f;
}

SuperFn SuperFn::from_poly(int n, const Poly& p) {
  SuperFn f(p.m(), n);
  f.add_term(0, p);
  return f;
}

SuperFn SuperFn::coordinate_x(int m, int n, int i) {
  SuperFn f(m, n);
  f.add_term(0, Poly::coordinate(m, i));
  return f;
}

SuperFn SuperFn::coordinate_s(int m, int n, int j) {
  if (j < 0 || j >= n) throw std::invalid_argument("SuperFn: odd coordinate out of range");
  SuperFn f(m, n);
  f.add_term(OddMask(1) << j, Poly::constant(m, 1));
  return f;
}

SuperFn SuperFn::monomial(int m, int n, OddMask s, const Poly& p) {
  SuperFn f(m, n);
  f.add_term(s, p);
  return f;
}

Poly SuperFn::coeff(OddMask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Poly(m_) : it->second;
}

void SuperFn::add_term(OddMask s, const Poly& p) {
  if (p.m() != m_) throw std::invalid_argument("SuperFn: coefficient arity mismatch");
  if (n_ < kMaxOddDim && (s >> n_) != 0)
    throw std::invalid_argument("SuperFn: odd monomial out of range");
  if (p.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperFn SuperFn::operator-() const {
  SuperFn r(m_, n_);
  for (const auto& [s, p] : terms_) r.terms_.emplace(s, -p);
  return r;
}

SuperFn SuperFn::operator+(const SuperFn& o) const {
  check_same(o);
  SuperFn r = *this;
  for (const auto& [s, p] : o.terms_) r.add_term(s, p);
  return r;
}

SuperFn SuperFn::operator-(const SuperFn& o) const {
  check_same(o);
  SuperFn r = *this;
  for (const auto& [s, p] : o.terms_) r.add_term(s, -p);
  return r;
}

SuperFn SuperFn::operator*(const SuperFn& o) const {
  check_same(o);
  SuperFn r(m_, n_);
  for (const auto& [sa, pa] : terms_) {
    for (const auto& [sb, pb] : o.terms_) {
      if (sa & sb) continue;  // nilpotency
      Poly p = pa * pb;
      if (koszul_sign(sa, sb) < 0) p = -p;
      r.add_term(sa | sb, p);
    }
  }
  return r;
}

SuperFn SuperFn::operator*(const Rational& c) const {
  SuperFn r(m_, n_);
  if (rat_is_zero(c)) return r;
  for (const auto& [s, p] : terms_) r.terms_.emplace(s, p * c);
  return r;
}

SuperFn SuperFn::partial_x(int i) const {
  if (i < 0 || i >= m_) throw std::invalid_argument("SuperFn: even index out of range");
  SuperFn r(m_, n_);
  for (const auto& [s, p] : terms_) r.add_term(s, p.derivative(i));
  return r;
}

SuperFn SuperFn::partial_s(int j) const {
  if (j < 0 || j >= n_) throw std::invalid_argument("SuperFn: odd index out of range");
  const OddMask bit = OddMask(1) << j;
  SuperFn r(m_, n_);
  for (const auto& [s, p] : terms_) {
    if (!(s & bit)) continue;
    // moving s^{j+1} to the front passes every present generator of lower index
    int sg = sign_pow(unsigned(std::popcount(s & (bit - 1))));
    r.add_term(s ^ bit, sg < 0 ? -p : p);
  }
  return r;
}

std::optional<Parity> SuperFn::parity() const {
  std::optional<Parity> p;
  for (const auto& [s, _] : terms_) {
    Parity q = Parity(unsigned(odd_degree(s)) & 1u);
    if (!p) {
      p = q;
    } else if (*p != q) {
      return std::nullopt;
    }
  }
  return p ? p : std::optional<Parity>(Parity::Even);
}

bool SuperFn::has_parity(Parity p) const {
  auto q = parity();
  return is_zero() || (q && *q == p);
}

SuperFn SuperFn::parity_part(Parity p) const {
  SuperFn r(m_, n_);
  for (const auto& [s, poly] : terms_)
    if (Parity(unsigned(odd_degree(s)) & 1u) == p) r.terms_.emplace(s, poly);
  return r;
}

std::optional<int> SuperFn::z_degree() const {
  std::optional<int> d;
  for (const auto& [s, _] : terms_) {
    int k = odd_degree(s);
    if (!d) {
      d = k;
    } else if (*d != k) {
      return std::nullopt;
    }
  }
  return d ? d : std::optional<int>(0);
}

Poly SuperFn::berezin_fiber() const {
  const OddMask top = (n_ == kMaxOddDim) ? ~OddMask(0) : (OddMask(1) << n_) - 1;
  Poly p = coeff(top);
  unsigned exponent = unsigned(n_) * unsigned(n_ - 1) / 2;
  return sign_pow(exponent) < 0 ? -p : p;
}

unsigned SuperFn::even_degree() const {
  unsigned d = 0;
  for (const auto& [s, p] : terms_) d = std::max(d, p.degree());
  return d;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_monomials(int m, unsigned max_degree, std::vector<Monomial>& out) {
  Monomial cur{std::vector<std::uint32_t>(m, 0)};
  // lexicographic enumeration by recursion over positions
  auto rec = [&](auto&& self, int pos, unsigned left) -> void {
    if (pos == m) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur.e[pos] = k;
      self(self, pos + 1, left - k);
    }
    cur.e[pos] = 0;
  };
  rec(rec, 0, max_degree);
}

}  // namespace

std::vector<SuperFn> probe_basis(int m, int n, unsigned max_even_degree) {
  std::vector<Monomial> monos;
  enumerate_monomials(m, max_even_degree, monos);
  std::vector<SuperFn> out;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    for (const auto& mono : monos) {
      Poly p(m);
      p.add_term(mono, 1);
      out.push_back(SuperFn::monomial(m, n, OddMask(s), p));
    }
  }
  return out;
}

}  // namespace gbv
