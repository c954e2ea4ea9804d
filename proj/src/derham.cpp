#include "gbv/derham.hpp"

#include "gbv/oddpoisson.hpp"
#include "gbv/textio.hpp"

namespace gbv {

VectorField de_rham_d(int m) {
  VectorField d(m, m, Parity::Odd);
  for (int i = 0; i < m; ++i) d.set_x_coeff(i, SuperFn::coordinate_s(m, m, i));
  return d;
}

VectorField interior_x(const std::vector<Poly>& x_components) {
  const int m = int(x_components.size());
  VectorField d(m, m, Parity::Odd);
  for (int i = 0; i < m; ++i) d.set_s_coeff(i, SuperFn::from_poly(m, x_components[std::size_t(i)]));
  return d;
}

VectorField lie_x(const std::vector<Poly>& x_components) {
  const int m = int(x_components.size());
  return interior_x(x_components).commutator(de_rham_d(m));
}

FormVector FormVector::decomposable(const SuperFn& omega, const std::vector<Poly>& x_components) {
  FormVector fv;
  fv.m = int(x_components.size());
  auto deg = omega.z_degree();
  if (!deg) throw std::invalid_argument("FormVector: form part must have a single degree");
  fv.degree = *deg;
  for (const auto& x : x_components) fv.comp.push_back(omega * SuperFn::from_poly(fv.m, x));
  fv.validate();
  return fv;
}

void FormVector::validate() const {
  if (int(comp.size()) != m) throw std::invalid_argument("FormVector: component count mismatch");
  for (const auto& f : comp) {
    if (f.m() != m || f.n() != m) throw std::invalid_argument("FormVector: dimension mismatch");
    auto deg = f.z_degree();
    if (!f.is_zero() && (!deg || *deg != degree))
      throw std::invalid_argument("FormVector: component degrees inconsistent");
  }
}

VectorField interior_form_vector(const FormVector& l) {
  l.validate();
  // i_L has degree l.degree - 1; degree-0 components make it the interior
  // product by the vector field sum comp[i] d/dx^i
  VectorField d(l.m, l.m, Parity(unsigned(l.degree + 1) & 1u));
  for (int i = 0; i < l.m; ++i) d.set_s_coeff(i, l.comp[std::size_t(i)]);
  return d;
}

VectorField lie_form_vector(const FormVector& k) {
  return interior_form_vector(k).commutator(de_rham_d(k.m));
}

SuperFn contraction_c(const FormVector& l) {
  l.validate();
  SuperFn r(l.m, l.m);
  if (l.degree == 0) return r;
  for (int i = 0; i < l.m; ++i) r = r + l.comp[std::size_t(i)].partial_s(i);
  return r;
}

SuperFn div_can(const VectorField& d) {
  if (d.m() != d.n()) throw std::invalid_argument("div_can: expected an (m|m) field");
  return Divergence::coordinate(d.m(), d.n()).evaluate(d);
}

SuperFn interior_p(const Bivector& p, const SuperFn& alpha) {
  const int m = p.m();
  if (alpha.m() != m || alpha.n() != m) throw std::invalid_argument("interior_p: dimension mismatch");
  SuperFn r(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Poly pij = p.at(i, j);
      if (pij.is_zero()) continue;
      SuperFn t = alpha.partial_s(i).partial_s(j);
      r = r + SuperFn::from_poly(m, pij) * t;
    }
  }
  return r;
}

SuperFn del_p(const Bivector& p, const SuperFn& alpha) {
  VectorField d = de_rham_d(p.m());
  return d.apply(interior_p(p, alpha)) - interior_p(p, d.apply(alpha));
}

SuperFn koszul_schouten(const Bivector& p, const SuperFn& a, const SuperFn& b) {
  if (a.m() != p.m() || a.n() != p.m() || b.m() != p.m() || b.n() != p.m())
    throw std::invalid_argument("koszul_schouten: dimension mismatch");
  SuperFn r(p.m(), p.m());
  for (Parity q : {Parity::Even, Parity::Odd}) {
    SuperFn part = a.parity_part(q);
    if (part.is_zero()) continue;
    const int sa = sign_pow(unsigned(q));
    SuperFn defect = del_p(p, part * b) - del_p(p, part) * b;
    SuperFn last = part * del_p(p, b);
    defect = (sa < 0) ? defect + last : defect - last;
    r = (sa < 0) ? r - defect : r + defect;
  }
  return r;
}

Poly poisson_bracket(const Bivector& p, const Poly& f, const Poly& g) {
  const int m = p.m();
  if (f.m() != m || g.m() != m) throw std::invalid_argument("poisson_bracket: dimension mismatch");
  Poly r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Poly pij = p.at(i, j);
      if (pij.is_zero()) continue;
      r = r + pij * f.derivative(j) * g.derivative(i);
    }
  return r;
}

ResidualCase theorem_bb_check(const Bivector& p, const std::vector<SuperFn>& probes) {
  const int m = p.m();
  Generator gen{OddPoisson::koszul_schouten(p), Divergence::coordinate(m, m)};
  VectorField d = de_rham_d(m);
  ResidualCase rep;
  for (const SuperFn& alpha : probes) {
    SuperFn gen_alpha = gen.apply(alpha);
    SuperFn r1 = gen_alpha - del_p(p, alpha);
    if (!r1.is_zero()) return {false, "generator vs del_P", to_string(r1)};
    SuperFn r2 = gen.apply(gen_alpha);
    if (!r2.is_zero()) return {false, "generator squared", to_string(r2)};
    SuperFn r3 = d.apply(del_p(p, alpha)) + del_p(p, d.apply(alpha));
    if (!r3.is_zero()) return {false, "[d, del_P]", to_string(r3)};
  }
  return rep;
}

}  // namespace gbv
