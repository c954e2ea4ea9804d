#include "gbv/vectorfield.hpp"

namespace gbv {

VectorField::VectorField(int m, int n, Parity parity)
    : m_(m), n_(n), parity_(parity),
      xc_(std::size_t(m), SuperFn(m, n)),
      sc_(std::size_t(n), SuperFn(m, n)) {}

VectorField VectorField::from_coeffs(Parity parity, std::vector<SuperFn> x_coeffs,
                                     std::vector<SuperFn> s_coeffs) {
  if (x_coeffs.empty() && s_coeffs.empty())
    throw std::invalid_argument("VectorField: no coefficients");
  int m = x_coeffs.empty() ? s_coeffs.front().m() : int(x_coeffs.size());
  int n = s_coeffs.empty() ? x_coeffs.front().n() : int(s_coeffs.size());
  VectorField d(m, n, parity);
  for (int i = 0; i < int(x_coeffs.size()); ++i) d.set_x_coeff(i, x_coeffs[std::size_t(i)]);
  for (int j = 0; j < int(s_coeffs.size()); ++j) d.set_s_coeff(j, s_coeffs[std::size_t(j)]);
  return d;
}

void VectorField::set_x_coeff(int i, const SuperFn& f) {
  if (f.m() != m_ || f.n() != n_) throw std::invalid_argument("VectorField: dimension mismatch");
  if (!f.has_parity(parity_))
    throw std::invalid_argument("VectorField: even coefficient breaks declared parity");
  xc_.at(std::size_t(i)) = f;
}

void VectorField::set_s_coeff(int j, const SuperFn& f) {
  if (f.m() != m_ || f.n() != n_) throw std::invalid_argument("VectorField: dimension mismatch");
  if (!f.has_parity(flip(parity_)))
    throw std::invalid_argument("VectorField: odd coefficient breaks declared parity");
  sc_.at(std::size_t(j)) = f;
}

bool VectorField::is_zero() const {
  for (const auto& f : xc_)
    if (!f.is_zero()) return false;
  for (const auto& f : sc_)
    if (!f.is_zero()) return false;
  return true;
}

SuperFn VectorField::apply(const SuperFn& f) const {
  if (f.m() != m_ || f.n() != n_) throw std::invalid_argument("VectorField: dimension mismatch");
  SuperFn r(m_, n_);
  for (int i = 0; i < m_; ++i) {
    if (xc_[std::size_t(i)].is_zero()) continue;
    r = r + xc_[std::size_t(i)] * f.partial_x(i);
  }
  for (int j = 0; j < n_; ++j) {
    if (sc_[std::size_t(j)].is_zero()) continue;
    r = r + sc_[std::size_t(j)] * f.partial_s(j);
  }
  return r;
}

void VectorField::check_same_dims(const VectorField& o) const {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("VectorField: dimension mismatch");
}

VectorField VectorField::commutator(const VectorField& other) const {
  check_same_dims(other);
  const int sg = sign_pow(unsigned(parity_) * unsigned(other.parity_));
  VectorField r(m_, n_, parity_ + other.parity_);
  auto bracket_on = [&](const SuperFn& coord) {
    SuperFn a = apply(other.apply(coord));
    SuperFn b = other.apply(apply(coord));
    return (sg < 0) ? a + b : a - b;
  };
  for (int i = 0; i < m_; ++i) r.set_x_coeff(i, bracket_on(SuperFn::coordinate_x(m_, n_, i)));
  for (int j = 0; j < n_; ++j) r.set_s_coeff(j, bracket_on(SuperFn::coordinate_s(m_, n_, j)));
  return r;
}

VectorField VectorField::left_mul(const SuperFn& f) const {
  auto p = f.parity();
  if (!p) throw std::invalid_argument("VectorField: module action needs homogeneous factor");
  VectorField r(m_, n_, *p + parity_);
  for (int i = 0; i < m_; ++i) r.set_x_coeff(i, f * xc_[std::size_t(i)]);
  for (int j = 0; j < n_; ++j) r.set_s_coeff(j, f * sc_[std::size_t(j)]);
  return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
  check_same_dims(o);
  if (parity_ != o.parity_) {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    throw std::invalid_argument("VectorField: adding fields of different parity");
  }
  VectorField r(m_, n_, parity_);
  for (int i = 0; i < m_; ++i) r.set_x_coeff(i, xc_[std::size_t(i)] + o.xc_[std::size_t(i)]);
  for (int j = 0; j < n_; ++j) r.set_s_coeff(j, sc_[std::size_t(j)] + o.sc_[std::size_t(j)]);
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

VectorField VectorField::operator-() const {
  VectorField r(m_, n_, parity_);
  for (int i = 0; i < m_; ++i) r.set_x_coeff(i, -xc_[std::size_t(i)]);
  for (int j = 0; j < n_; ++j) r.set_s_coeff(j, -sc_[std::size_t(j)]);
  return r;
}

VectorField VectorField::operator*(const Rational& c) const {
  VectorField r(m_, n_, parity_);
  for (int i = 0; i < m_; ++i) r.set_x_coeff(i, xc_[std::size_t(i)] * c);
  for (int j = 0; j < n_; ++j) r.set_s_coeff(j, sc_[std::size_t(j)] * c);
  return r;
}

}  // namespace gbv
