#include "gbv/oddpoisson.hpp"

#include "gbv/derham.hpp"
#include "gbv/schouten.hpp"
#include "gbv/textio.hpp"

namespace gbv {

OddPoisson OddPoisson::schouten(int m) { return OddPoisson(Model::Schouten, m, std::nullopt); }

OddPoisson OddPoisson::koszul_schouten(Bivector p) {
  int m = p.m();
  return OddPoisson(Model::KoszulSchouten, m, std::move(p));
}

const Bivector& OddPoisson::bivector() const {
  if (!p_) throw std::logic_error("OddPoisson: no bivector in this model");
  return *p_;
}

SuperFn OddPoisson::bracket(const SuperFn& f, const SuperFn& g) const {
  if (f.m() != m_ || f.n() != n() || g.m() != m_ || g.n() != n())
    throw std::invalid_argument("OddPoisson: dimension mismatch");
  switch (model_) {
    case Model::Schouten:
      return schouten_bracket(f, g);
    case Model::KoszulSchouten:
      return ::gbv::koszul_schouten(*p_, f, g);
  }
  throw std::logic_error("OddPoisson: unknown model");
}

VectorField OddPoisson::hamiltonian(const SuperFn& f) const {
  auto p = f.parity();
  if (!p) throw std::invalid_argument("OddPoisson: hamiltonian needs a homogeneous section");
  VectorField d(m_, n(), flip(*p));
  for (int i = 0; i < m_; ++i)
    d.set_x_coeff(i, bracket(f, SuperFn::coordinate_x(m_, n(), i)));
  for (int j = 0; j < n(); ++j)
    d.set_s_coeff(j, bracket(f, SuperFn::coordinate_s(m_, n(), j)));
  return d;
}

SuperFn Generator::apply(const SuperFn& f) const {
  if (f.m() != pi.m() || f.n() != pi.n())
    throw std::invalid_argument("Generator: dimension mismatch");
  SuperFn r(f.m(), f.n());
  for (Parity p : {Parity::Even, Parity::Odd}) {
    SuperFn part = f.parity_part(p);
    if (part.is_zero()) continue;
    SuperFn t = dv.evaluate(pi.hamiltonian(part)) * Rational(1, 2);
    r = (sign_pow(unsigned(p)) < 0) ? r - t : r + t;
  }
  return r;
}

namespace {

Parity parity_of(const SuperFn& f, const char* who) {
  auto p = f.parity();
  if (!p) throw std::invalid_argument(std::string(who) + ": homogeneous input required");
  return *p;
}

}  // namespace

SuperFn bv_defect(const Generator& gen, const SuperFn& f, const SuperFn& g) {
  Parity pf = parity_of(f, "bv_defect");
  const int sf = sign_pow(unsigned(pf));
  SuperFn leibniz = gen.apply(f * g) - gen.apply(f) * g;
  SuperFn last = f * gen.apply(g);
  leibniz = (sf < 0) ? leibniz + last : leibniz - last;
  SuperFn rhs = (sf < 0) ? -leibniz : leibniz;
  return gen.pi.bracket(f, g) - rhs;
}

namespace {

// Delta[[f,g]] - [[Delta f, g]] - (-1)^{|f|-1}[[f, Delta g]]
SuperFn bracket_derivation_defect(const Generator& gen, const SuperFn& f, Parity pf,
                                  const SuperFn& g) {
  SuperFn r = gen.apply(gen.pi.bracket(f, g)) - gen.pi.bracket(gen.apply(f), g);
  SuperFn last = gen.pi.bracket(f, gen.apply(g));
  const int sg = sign_pow(unsigned(pf) + 1u);
  return (sg < 0) ? r + last : r - last;
}

}  // namespace

SuperFn square_defect(const Generator& gen, const SuperFn& f, const SuperFn& g) {
  Parity pf = parity_of(f, "square_defect");
  auto delta2 = [&](const SuperFn& h) { return gen.apply(gen.apply(h)); };
  SuperFn lhs = delta2(f * g) - delta2(f) * g - f * delta2(g);
  SuperFn rhs = bracket_derivation_defect(gen, f, pf, g);
  if (sign_pow(unsigned(pf)) < 0) rhs = -rhs;
  return lhs - rhs;
}

SuperFn curvature_link_defect(const Generator& gen, const SuperFn& f, const SuperFn& g) {
  Parity pf = parity_of(f, "curvature_link_defect");
  Parity pg = parity_of(g, "curvature_link_defect");
  SuperFn lhs = bracket_derivation_defect(gen, f, pf, g);
  SuperFn rhs = gen.dv.curvature(gen.pi.hamiltonian(f), gen.pi.hamiltonian(g)) * Rational(1, 2);
  if (sign_pow(unsigned(pf) + unsigned(pg) + 1u) < 0) rhs = -rhs;
  return lhs - rhs;
}

Generator deform_generator(const Generator& gen, const SuperFn& w) {
  return Generator{gen.pi, gen.dv.deform(w)};
}

SuperFn master_defect(const Generator& gen, const SuperFn& w) {
  if (!w.has_parity(Parity::Even))
    throw std::invalid_argument("master_defect: w must be even");
  return gen.apply(w) + gen.pi.bracket(w, w) * Rational(1, 2);
}

SuperFn exp_nilpotent(const SuperFn& w) {
  if (!w.has_parity(Parity::Even))
    throw std::invalid_argument("exp_nilpotent: even input required");
  if (!w.coeff(0).is_zero())
    throw std::invalid_argument("exp_nilpotent: input must have zero body");
  SuperFn acc = SuperFn::one(w.m(), w.n());
  SuperFn power = SuperFn::one(w.m(), w.n());
  Rational factorial = 1;
  for (int k = 1; !power.is_zero(); ++k) {
    power = power * w;
    factorial *= Rational(k);
    if (power.is_zero()) break;
    Rational inv = 1 / factorial;
    acc = acc + power * inv;
  }
  return acc;
}

bool is_qs(const VectorField& d, const Divergence& dv) {
  if (d.parity() != Parity::Odd) throw std::invalid_argument("is_qs: D must be odd");
  return d.commutator(d).is_zero() && dv.evaluate(d).is_zero();
}

ProbeVerdict is_weak_sp(const OddPoisson& pi, const Divergence& dv, unsigned probe_degree) {
  Generator gen{pi, dv};
  ProbeVerdict v;
  v.probe_degree = probe_degree;
  for (const SuperFn& f : probe_basis(pi.m(), pi.n(), probe_degree)) {
    SuperFn r = gen.apply(gen.apply(f));
    if (!r.is_zero()) return {false, probe_degree, "generator squared on probe", to_string(r)};
  }
  return v;
}

ProbeVerdict is_weak_qsp(const OddPoisson& pi, const VectorField& d, const Divergence& dv,
                         unsigned probe_degree) {
  ProbeVerdict v = is_weak_sp(pi, dv, probe_degree);
  if (!v.ok) return v;
  if (!is_qs(d, dv)) return {false, probe_degree, "QS predicate", ""};
  auto probes = probe_basis(pi.m(), pi.n(), probe_degree);
  for (const SuperFn& f : probes) {
    Parity pf = *f.parity();
    const int sg = sign_pow(unsigned(pf) + 1u);
    for (const SuperFn& g : probes) {
      SuperFn r = pi.bracket(d.apply(f), g) - d.apply(pi.bracket(f, g));
      SuperFn t = pi.bracket(f, d.apply(g));
      r = (sg < 0) ? r - t : r + t;
      if (!r.is_zero())
        return {false, probe_degree, "bracket derivation residual", to_string(r)};
    }
  }
  return v;
}

}  // namespace gbv
