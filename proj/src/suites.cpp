#include "gbv/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "gbv/connections.hpp"
#include "gbv/derham.hpp"
#include "gbv/oddpoisson.hpp"
#include "gbv/rng.hpp"
#include "gbv/schouten.hpp"
#include "gbv/textio.hpp"

namespace gbv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Harness {
  SuiteResult suite;
  std::uint64_t seed = 0;

  // Expected-zero residual over `count` independent trials.
  void run(const std::string& name, const std::string& identity, long count,
           const std::function<SuperFn(Rng&)>& residual, const std::string& note = "") {
    CheckResult c;
    c.name = name;
    c.identity = identity;
    c.trials = count;
    c.note = note;
    auto t0 = Clock::now();
    for (long trial = 0; trial < count; ++trial) {
      Rng rng(seed, suite.name + "/" + name, std::uint64_t(trial));
      SuperFn r = residual(rng);
      if (!r.is_zero()) {
        if (c.failures == 0) c.residual = to_string(r);
        ++c.failures;
      }
    }
    c.elapsed_ms = ms_since(t0);
    c.pass = c.failures == 0;
    finish(c);
  }

  // Single structural check (probe bases, predicates).
  void run_case(const std::string& name, const std::string& identity,
                const std::function<ResidualCase()>& fn, const std::string& note = "") {
    CheckResult c;
    c.name = name;
    c.identity = identity;
    c.trials = 1;
    c.note = note;
    auto t0 = Clock::now();
    ResidualCase rc = fn();
    c.elapsed_ms = ms_since(t0);
    c.pass = rc.ok;
    if (!rc.ok) {
      c.failures = 1;
      c.residual = rc.residual.empty() ? rc.what : rc.what + ": " + rc.residual;
    }
    finish(c);
  }

  void finish(CheckResult& c) {
    suite.pass = suite.pass && c.pass;
    suite.checks.push_back(std::move(c));
  }
};

Parity random_parity(Rng& rng) { return Parity(unsigned(rng.range(0, 1))); }

OddPoisson model_from(const Scenario& sc) {
  if (!sc.model) throw std::invalid_argument("this suite needs a \"model\" in the scenario");
  if (*sc.model == "schouten") return OddPoisson::schouten(sc.m);
  if (!sc.p) throw std::invalid_argument("the koszul_schouten model needs \"P\"");
  return OddPoisson::koszul_schouten(*sc.p);
}

// Effective divergence: the explicit divergence spec when present, otherwise
// the coordinate divergence deformed by the scenario weight if one is given.
Divergence divergence_from(const Scenario& sc) {
  Divergence dv = Divergence::coordinate(sc.m, sc.n);
  if (sc.divergence) {
    if (sc.divergence->kind == "deformed" && sc.divergence->w) dv = dv.deform(*sc.divergence->w);
  } else if (sc.w) {
    dv = dv.deform(*sc.w);
  }
  return dv;
}

// ---------------------------------------------------------------------------
// Suite bodies
// ---------------------------------------------------------------------------

void suite_bracket_axioms(const Scenario& sc, Harness& h) {
  OddPoisson pi = model_from(sc);
  const int m = pi.m(), n = pi.n();
  const unsigned deg = sc.probe_degree;

  h.run("skew_symmetry",
        "[[f,g]] + (-1)^((|f|-1)(|g|-1)) [[g,f]] = 0", sc.trials, [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          SuperFn g = r.superfn(m, n, random_parity(r), deg);
          unsigned pf = unsigned(*f.parity()), pg = unsigned(*g.parity());
          SuperFn t = pi.bracket(g, f);
          if (sign_pow((pf + 1) * (pg + 1)) < 0) t = -t;
          return pi.bracket(f, g) + t;
        });

  h.run("bracket_parity", "|[[f,g]]| = |f| + |g| + 1", sc.trials, [&](Rng& r) {
    SuperFn f = r.superfn(m, n, random_parity(r), deg);
    SuperFn g = r.superfn(m, n, random_parity(r), deg);
    Parity want = *f.parity() + *g.parity() + Parity::Odd;
    SuperFn b = pi.bracket(f, g);
    return b.has_parity(want) ? SuperFn(m, n) : b;
  });

  h.run("jacobi",
        "[[f,[[g,h]]]] = [[[[f,g]],h]] + (-1)^((|f|-1)(|g|-1)) [[g,[[f,h]]]]", sc.trials,
        [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          SuperFn g = r.superfn(m, n, random_parity(r), deg);
          SuperFn hh = r.superfn(m, n, random_parity(r), deg);
          unsigned pf = unsigned(*f.parity()), pg = unsigned(*g.parity());
          SuperFn lhs = pi.bracket(f, pi.bracket(g, hh));
          SuperFn rhs = pi.bracket(pi.bracket(f, g), hh);
          SuperFn t = pi.bracket(g, pi.bracket(f, hh));
          rhs = (sign_pow((pf + 1) * (pg + 1)) < 0) ? rhs - t : rhs + t;
          return lhs - rhs;
        });

  h.run("leibniz",
        "[[f,gh]] = [[f,g]] h + (-1)^((|f|-1)|g|) g [[f,h]]", sc.trials, [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          SuperFn g = r.superfn(m, n, random_parity(r), deg);
          SuperFn hh = r.superfn(m, n, random_parity(r), deg);
          unsigned pf = unsigned(*f.parity()), pg = unsigned(*g.parity());
          SuperFn rhs = pi.bracket(f, g) * hh;
          SuperFn t = g * pi.bracket(f, hh);
          rhs = (sign_pow((pf + 1) * pg) < 0) ? rhs - t : rhs + t;
          return pi.bracket(f, g * hh) - rhs;
        });
}

void suite_bv_generator(const Scenario& sc, Harness& h) {
  OddPoisson pi = model_from(sc);
  const int m = pi.m(), n = pi.n();
  const unsigned deg = sc.probe_degree;

  auto bv_check = [&](const std::string& name, const Generator& gen) {
    h.run(name,
          "[[f,g]] = (-1)^|f| (Delta(fg) - (Delta f)g - (-1)^|f| f (Delta g))", sc.trials,
          [&, gen](Rng& r) {
            SuperFn f = r.superfn(m, n, random_parity(r), deg);
            SuperFn g = r.superfn(m, n, random_parity(r), deg);
            return bv_defect(gen, f, g);
          });
  };

  bv_check("bv_identity", Generator{pi, divergence_from(sc)});
  if (sc.christoffels && *sc.model == "schouten") {
    auto gc = std::make_shared<const GradedConnection>(*sc.christoffels);
    bv_check("bv_identity_supertrace", Generator{pi, Divergence::supertrace(gc)});
  }
}

void suite_curvber(const Scenario& sc, Harness& h) {
  const int m = sc.m, n = sc.n;
  const unsigned deg = sc.probe_degree;
  Divergence dv = divergence_from(sc);

  h.run("divergence_axiom",
        "div(fD) = f div(D) + (-1)^(|f||D|) D(f)", sc.trials, [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          VectorField d = r.vectorfield(m, n, random_parity(r), deg);
          SuperFn lhs = dv.evaluate(d.left_mul(f));
          SuperFn rhs = f * dv.evaluate(d);
          SuperFn t = d.apply(f);
          if (sign_pow(unsigned(*f.parity()) * unsigned(d.parity())) < 0) t = -t;
          return lhs - rhs - t;
        });

  h.run("curvature_vanishes",
        "div[D1,D2] - D1(div D2) + (-1)^(|D1||D2|) D2(div D1) = 0", sc.trials, [&](Rng& r) {
          VectorField d1 = r.vectorfield(m, n, random_parity(r), deg);
          VectorField d2 = r.vectorfield(m, n, random_parity(r), deg);
          return dv.curvature(d1, d2);
        });

  h.run("curvature_bilinear",
        "R(f D1, D2) = f R(D1, D2)", sc.trials, [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          VectorField d1 = r.vectorfield(m, n, random_parity(r), deg);
          VectorField d2 = r.vectorfield(m, n, random_parity(r), deg);
          return dv.curvature(d1.left_mul(f), d2) - f * dv.curvature(d1, d2);
        });
}

void suite_identities(const Scenario& sc, Harness& h) {
  OddPoisson pi = model_from(sc);
  Generator gen{pi, divergence_from(sc)};
  const int m = pi.m(), n = pi.n();
  const unsigned deg = sc.probe_degree;

  h.run("square_identity",
        "Delta^2(fg) - (Delta^2 f)g - f(Delta^2 g) = "
        "(-1)^|f| (Delta[[f,g]] - [[Delta f,g]] - (-1)^(|f|-1)[[f,Delta g]])",
        sc.trials, [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          SuperFn g = r.superfn(m, n, random_parity(r), deg);
          return square_defect(gen, f, g);
        });

  h.run("curvature_link",
        "Delta[[f,g]] - [[Delta f,g]] - (-1)^(|f|-1)[[f,Delta g]] = "
        "(-1)^(|f|+|g|-1) 1/2 R^div(X_f, X_g)",
        sc.trials, [&](Rng& r) {
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          SuperFn g = r.superfn(m, n, random_parity(r), deg);
          return curvature_link_defect(gen, f, g);
        });

  h.run("hamiltonian_morphism", "X_[[f,g]] = [X_f, X_g]", sc.trials, [&](Rng& r) {
    SuperFn f = r.superfn(m, n, random_parity(r), deg);
    SuperFn g = r.superfn(m, n, random_parity(r), deg);
    VectorField lhs = pi.hamiltonian(pi.bracket(f, g));
    VectorField rhs = pi.hamiltonian(f).commutator(pi.hamiltonian(g));
    SuperFn acc(m, n);
    for (int i = 0; i < m; ++i) acc = acc + (lhs.x_coeff(i) - rhs.x_coeff(i));
    for (int j = 0; j < n; ++j) acc = acc + (lhs.s_coeff(j) - rhs.s_coeff(j));
    return acc;
  });

  h.run("odd_derivation_link",
        "[D,Delta](fg) - ([D,Delta]f)g - f([D,Delta]g) = "
        "(-1)^|f| (D[[f,g]] - [[Df,g]] - (-1)^(|f|-1)[[f,Dg]])",
        sc.trials, [&](Rng& r) {
          VectorField d = r.vectorfield(m, n, Parity::Odd, deg);
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          SuperFn g = r.superfn(m, n, random_parity(r), deg);
          unsigned pf = unsigned(*f.parity());
          auto com = [&](const SuperFn& x) {
            return d.apply(gen.apply(x)) + gen.apply(d.apply(x));  // odd-odd commutator
          };
          SuperFn lhs = com(f * g) - com(f) * g - f * com(g);
          SuperFn rhs = d.apply(pi.bracket(f, g)) - pi.bracket(d.apply(f), g);
          SuperFn t = pi.bracket(f, d.apply(g));
          rhs = (sign_pow(pf + 1) < 0) ? rhs + t : rhs - t;
          if (sign_pow(pf) < 0) rhs = -rhs;
          return lhs - rhs;
        });
}

void suite_deformation(const Scenario& sc, Harness& h) {
  OddPoisson pi = model_from(sc);
  Generator gen{pi, divergence_from(sc)};
  const int m = pi.m(), n = pi.n();
  const unsigned deg = sc.probe_degree;

  h.run("deformed_generator",
        "Delta' f = Delta f + [[w,f]]  for div' = div + D(2w)", sc.trials, [&](Rng& r) {
          SuperFn w = r.superfn(m, n, Parity::Even, deg);
          SuperFn f = r.superfn(m, n, random_parity(r), deg);
          Generator gen2 = deform_generator(gen, w);
          return gen2.apply(f) - gen.apply(f) - pi.bracket(w, f);
        });

  // Square of the deformed generator against the Maurer-Cartan defect; needs
  // a square-zero base generator, certified on the probe basis first.
  ProbeVerdict sp = is_weak_sp(pi, gen.dv, sc.probe_degree);
  h.run_case("base_square_zero", "Delta^2 = 0 on the probe basis",
             [&] {
               return ResidualCase{sp.ok, sp.what, sp.residual};
             },
             "certified to even degree " + std::to_string(sc.probe_degree));

  auto probes = probe_basis(m, n, 2);
  if (probes.size() > 20) probes.erase(probes.begin() + 20, probes.end());
  h.run("deformed_square",
        "(Delta + X_w)^2 f = [[Delta w + 1/2 [[w,w]], f]]", sc.trials, [&](Rng& r) {
          SuperFn w = r.superfn(m, n, Parity::Even, deg);
          SuperFn md = master_defect(gen, w);
          auto op = [&](const SuperFn& x) { return gen.apply(x) + pi.bracket(w, x); };
          SuperFn acc(m, n);
          for (const SuperFn& f : probes) acc = acc + (op(op(f)) - pi.bracket(md, f));
          return acc;
        },
        "operator equality probed on " + std::to_string(probes.size()) + " monomials");

  if (*sc.model == "schouten") {
    // Conjugation check against the coordinate-berezinian base, where
    // constant-coefficient nilpotent even weights solve the master equation.
    Generator base{pi, Divergence::coordinate(m, n)};
    h.run("master_solution_conjugation",
          "Delta' f = e^{-w} Delta(e^{w} f)  when Delta w + 1/2 [[w,w]] = 0", sc.trials,
          [&, base](Rng& r) {
            SuperFn w(m, n);
            for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
              int k = odd_degree(OddMask(s));
              if (k < 2 || (k & 1)) continue;
              if (!r.coin()) continue;
              w.add_term(OddMask(s), Poly::constant(m, r.coeff()));
            }
            if (!master_defect(base, w).is_zero()) return SuperFn::one(m, n);  // must not happen
            SuperFn f = r.superfn(m, n, random_parity(r), deg);
            SuperFn ew = exp_nilpotent(w), emw = exp_nilpotent(-w);
            Generator gen2 = deform_generator(base, w);
            return gen2.apply(f) - emw * base.apply(ew * f);
          });
  }
}

void suite_theorem_aa(const Scenario& sc, Harness& h) {
  if (!sc.model || *sc.model != "schouten")
    throw std::invalid_argument("theorem_aa runs on the schouten model");
  const int m = sc.m;

  if (sc.w && sc.w->terms().size() > (sc.w->coeff(0).is_zero() ? 0u : 1u))
    throw std::invalid_argument("theorem_aa needs a purely polynomial weight");
  auto weight_for = [&](Rng& r) -> Poly {
    if (sc.w) return sc.w->coeff(0);
    return r.poly(m, 3, 2);
  };

  h.run("volume_generator",
        "Delta^{mu} A = del_mu A  with div = coordinate + D(2w), del_mu = -star^{-1}(d + dw^)star",
        sc.trials, [&](Rng& r) {
          Poly w = weight_for(r);
          SuperFn ws = SuperFn::from_poly(m, w);
          Generator gen{OddPoisson::schouten(m), Divergence::coordinate(m, m).deform(ws)};
          SuperFn a = r.superfn(m, m, random_parity(r), 3);
          return gen.apply(a) - del_mu(VolumeWeight(w), a);
        });

  h.run("volume_generator_square", "(Delta^{mu})^2 = 0 on the probe basis", 1, [&](Rng& r) {
    Poly w = weight_for(r);
    SuperFn ws = SuperFn::from_poly(m, w);
    Generator gen{OddPoisson::schouten(m), Divergence::coordinate(m, m).deform(ws)};
    SuperFn acc(m, m);
    for (const SuperFn& a : probe_basis(m, m, 3)) acc = acc + gen.apply(gen.apply(a));
    return acc;
  },
        "probe basis to even degree 3");

  h.run("del_mu_square", "del_mu del_mu = 0 on the probe basis", 1, [&](Rng& r) {
    Poly w = weight_for(r);
    VolumeWeight vw(w);
    SuperFn acc(m, m);
    for (const SuperFn& a : probe_basis(m, m, 3)) acc = acc + del_mu(vw, del_mu(vw, a));
    return acc;
  });

  if (sc.p) {
    h.run_case("modular_field", "modular field of (P, mu) equals the degree-1 part of del_mu P",
               [&] {
                 if (!sc.p_is_poisson) return ResidualCase{false, "P is not Poisson", ""};
                 Rng r(sc.seed, h.suite.name + "/modular_field", 0);
                 Poly w = weight_for(r);
                 VectorField mf = modular_vector_field(*sc.p, VolumeWeight(w));
                 SuperFn mv = del_mu(VolumeWeight(w), sc.p->to_multivector());
                 for (int i = 0; i < m; ++i) {
                   Poly want = mv.coeff(OddMask(1) << i);
                   if (!(mf.x_coeff(i).coeff(0) - want).is_zero())
                     return ResidualCase{false, "component mismatch", to_string(want)};
                 }
                 // adding a constant to w leaves the field unchanged
                 Poly w2 = w + Poly::constant(m, 7);
                 VectorField mf2 = modular_vector_field(*sc.p, VolumeWeight(w2));
                 for (int i = 0; i < m; ++i)
                   if (!(mf.x_coeff(i) - mf2.x_coeff(i)).is_zero())
                     return ResidualCase{false, "not invariant under w -> w + c", ""};
                 return ResidualCase{};
               });
  }
}

void suite_derham(const Scenario& sc, Harness& h) {
  const int m = sc.m;
  const unsigned deg = sc.probe_degree;
  VectorField d = de_rham_d(m);

  h.run_case("div_can_d", "div_can(d) = 0", [&] {
    SuperFn r = div_can(d);
    return ResidualCase{r.is_zero(), "div_can(d)", to_string(r)};
  });

  h.run("div_can_vector", "div_can(i_X) = 0 and div_can(L_X) = 0", sc.trials, [&](Rng& r) {
    auto x = r.base_field(m, deg);
    return div_can(interior_x(x)) + div_can(lie_x(x));
  });

  h.run("div_can_interior",
        "div_can(i_L) = (-1)^(k+1) C(L)  for L = omega (x) X, omega a (k+1)-form", sc.trials,
        [&](Rng& r) {
          int k1 = r.range(1, m);  // degree of omega
          SuperFn omega = r.form_of_degree(m, k1, deg);
          FormVector l = FormVector::decomposable(omega, r.base_field(m, deg));
          if (l.degree == 0) return SuperFn(m, m);
          SuperFn lhs = div_can(interior_form_vector(l));
          SuperFn rhs = contraction_c(l);
          if (sign_pow(unsigned(k1)) < 0) rhs = -rhs;  // (-1)^{k+1}, k = k1 - 1
          return lhs - rhs;
        });

  h.run("div_can_lie",
        "div_can(L_K) = d(C(K))  for K = omega (x) X, omega a k-form", sc.trials, [&](Rng& r) {
          int k = r.range(0, m);
          SuperFn omega = r.form_of_degree(m, k, deg);
          FormVector kv = FormVector::decomposable(omega, r.base_field(m, deg));
          SuperFn lhs = div_can(lie_form_vector(kv));
          SuperFn rhs = d.apply(contraction_c(kv));
          return lhs - rhs;
        });

  h.run("d_squared", "d d = 0", sc.trials, [&](Rng& r) {
    SuperFn alpha = r.superfn(m, m, random_parity(r), deg);
    return d.apply(d.apply(alpha));
  });

  if (sc.p) {
    const Bivector& p = *sc.p;
    h.run("ks_characterization",
          "[[f,g]]_P = 0, [[f,dg]]_P = {f,g}, [[df,dg]]_P = d{f,g}", sc.trials, [&](Rng& r) {
            Poly f = r.poly(m, deg, 2), g = r.poly(m, deg, 2);
            SuperFn fs = SuperFn::from_poly(m, f), gs = SuperFn::from_poly(m, g);
            SuperFn dg = d.apply(gs), df = d.apply(fs);
            SuperFn pb = SuperFn::from_poly(m, poisson_bracket(p, f, g));
            SuperFn acc = koszul_schouten(p, fs, gs);
            acc = acc + (koszul_schouten(p, fs, dg) - pb);
            acc = acc + (koszul_schouten(p, df, dg) - d.apply(pb));
            return acc;
          });

    h.run("del_p_exact", "del_P(df) = 0 and del_P(f) = 0", sc.trials, [&](Rng& r) {
      Poly f = r.poly(m, deg, 2);
      SuperFn fs = SuperFn::from_poly(m, f);
      return del_p(p, d.apply(fs)) + del_p(p, fs);
    });

    h.run("hamiltonian_of_df", "[[df, . ]]_P = L_{#P df}  on random forms", sc.trials, [&](Rng& r) {
      Poly f = r.poly(m, deg, 2);
      SuperFn df = de_rham_d(m).apply(SuperFn::from_poly(m, f));
      std::vector<Poly> sharp;  // #P df = {f, . }
      for (int i = 0; i < m; ++i) {
        Poly comp(m);
        for (int j = 0; j < m; ++j) comp = comp + p.at(i, j) * f.derivative(j);
        sharp.push_back(comp);
      }
      SuperFn alpha = r.superfn(m, m, random_parity(r), deg);
      return koszul_schouten(p, df, alpha) - lie_x(sharp).apply(alpha);
    });
  }
}

void suite_theorem_bb(const Scenario& sc, Harness& h) {
  if (!sc.p) throw std::invalid_argument("theorem_bb needs \"P\"");
  const Bivector& p = *sc.p;
  const int m = p.m();

  h.run_case("poisson_flag", "[[P,P]] = 0 in the cotangent model", [&] {
    return ResidualCase{sc.p_is_poisson, "P is not Poisson",
                        to_string(schouten_bracket(p.to_multivector(), p.to_multivector()))};
  });

  h.run_case("generator_is_del_p",
             "Delta^{(P)} = del_P, (Delta^{(P)})^2 = 0, [d, del_P] = 0 on the probe basis", [&] {
               return theorem_bb_check(p, probe_basis(m, m, sc.probe_degree));
             },
             "probe basis to even degree " + std::to_string(sc.probe_degree));

  Generator gen{OddPoisson::koszul_schouten(p), Divergence::coordinate(m, m)};
  h.run("generator_is_del_p_random", "Delta^{(P)} alpha = del_P alpha", sc.trials, [&](Rng& r) {
    SuperFn alpha = r.superfn(m, m, random_parity(r), sc.probe_degree);
    return gen.apply(alpha) - del_p(p, alpha) + gen.apply(gen.apply(alpha));
  });
}

void suite_qsp(const Scenario& sc, Harness& h) {
  OddPoisson pi = model_from(sc);
  const int m = pi.m();
  Divergence dv = Divergence::coordinate(m, m);

  if (*sc.model == "schouten") {
    if (!sc.p) throw std::invalid_argument("the cotangent QSP check needs \"P\"");
    SuperFn pmv = sc.p->to_multivector();
    VectorField dp = pi.hamiltonian(pmv);
    h.run_case("qs", "[d_P, d_P] = 0 and div(d_P) = 0", [&] {
      return ResidualCase{is_qs(dp, dv), "QS predicate failed", ""};
    });
    h.run_case("weak_sp", "(Delta)^2 = 0 on the probe basis", [&] {
      ProbeVerdict v = is_weak_sp(pi, dv, sc.probe_degree);
      return ResidualCase{v.ok, v.what, v.residual};
    },
               "certified to even degree " + std::to_string(sc.probe_degree));
    h.run_case("weak_qsp", "weak SP + QS + d_P a bracket derivation", [&] {
      ProbeVerdict v = is_weak_qsp(pi, dp, dv, std::min(sc.probe_degree, 3u));
      return ResidualCase{v.ok, v.what, v.residual};
    },
               "pairs probed to even degree " + std::to_string(std::min(sc.probe_degree, 3u)));
    h.run_case("nondegenerate", "the cotangent bracket is symplectic (structural)", [&] {
      return ResidualCase{};
    });
  } else {
    if (!sc.p) throw std::invalid_argument("the tangent QSP check needs \"P\"");
    VectorField d = de_rham_d(m);
    h.run_case("qs", "[d,d] = 0 and div_can(d) = 0", [&] {
      return ResidualCase{is_qs(d, dv), "QS predicate failed", ""};
    });
    h.run_case("weak_qsp", "weak SP + QS + d a derivation of [[.,.]]_P", [&] {
      ProbeVerdict v = is_weak_qsp(pi, d, dv, std::min(sc.probe_degree, 3u));
      return ResidualCase{v.ok, v.what, v.residual};
    },
               "pairs probed to even degree " + std::to_string(std::min(sc.probe_degree, 3u)));
    // d as a hamiltonian field of the inverse symplectic form, on R^2 with a
    // constant invertible P
    if (m == 2 && sc.p_is_poisson) {
      Poly p12 = sc.p->at(0, 1);
      bool constant = p12.degree() == 0 && !p12.is_zero();
      if (constant) {
        Rational c = p12.terms().begin()->second;
        SuperFn omega(m, m);
        omega.add_term(0b11, Poly::constant(m, 1 / c));
        h.run("d_is_hamiltonian", "d = [[omega, . ]]_P  for omega the inverse symplectic form",
              sc.trials, [&, omega](Rng& r) {
                SuperFn f = r.superfn(m, m, random_parity(r), sc.probe_degree);
                return d.apply(f) - koszul_schouten(*sc.p, omega, f);
              });
      }
    }
  }
}

void suite_connections(const Scenario& sc, Harness& h) {
  if (!sc.christoffels) throw std::invalid_argument("connections needs \"christoffels\"");
  const Connection& c = *sc.christoffels;
  const int m = c.m();
  auto gc = std::make_shared<const GradedConnection>(c);
  const unsigned deg = std::min(sc.probe_degree, 3u);

  h.run("torsion_base", "nabla_X Y - nabla_Y X - [X,Y] = 0", sc.trials, [&](Rng& r) {
    auto x = r.base_field(m, deg), y = r.base_field(m, deg);
    PolyVec t = nabla(c, x, y);
    PolyVec u = nabla(c, y, x);
    PolyVec lb = lie_bracket_fields(x, y);
    Poly acc(m);
    for (int k = 0; k < m; ++k)
      acc = acc + (t[std::size_t(k)] - u[std::size_t(k)] - lb[std::size_t(k)]);
    return SuperFn::from_poly(m, acc);
  });

  h.run_case("lemma_divergences", "div_gc(nabla_X) = div_nabla(X) and div_gc(i_alpha) = 0", [&] {
    for (long trial = 0; trial < sc.trials; ++trial) {
      Rng r(h.seed, h.suite.name + "/lemma_divergences", std::uint64_t(trial));
      auto x = r.base_field(m, deg);
      BasisCombo combo;
      for (int i = 0; i < m; ++i) combo.k.push_back(SuperFn::from_poly(m, x[std::size_t(i)]));
      combo.l.assign(std::size_t(m), SuperFn(m, m));
      VectorField nx = gc->realize(combo, Parity::Even);
      SuperFn r1 = gc->str_divergence(nx) - SuperFn::from_poly(m, div_nabla(c, x));
      if (!r1.is_zero()) return ResidualCase{false, "div_gc(nabla_X)", to_string(r1)};
      VectorField ia(m, m, Parity::Odd);
      for (int j = 0; j < m; ++j)
        ia.set_s_coeff(j, SuperFn::from_poly(m, r.poly(m, deg, 2)));
      SuperFn r2 = gc->str_divergence(ia);
      if (!r2.is_zero()) return ResidualCase{false, "div_gc(i_alpha)", to_string(r2)};
    }
    return ResidualCase{};
  });

  h.run_case("graded_torsion", "gc_{A}B - (-1)^{|A||B|} gc_{B}A - [A,B] = 0 on basis pairs", [&] {
    for (int a = 0; a < 2 * m; ++a)
      for (int b = 0; b < 2 * m; ++b) {
        VectorField ba = gc->basis_field(a), bb = gc->basis_field(b);
        VectorField t = gc->covariant(ba, bb);
        VectorField u = gc->covariant(bb, ba);
        unsigned pa = unsigned(GradedConnection::basis_parity(a, m));
        unsigned pb = unsigned(GradedConnection::basis_parity(b, m));
        VectorField r = (sign_pow(pa * pb) < 0) ? t + u : t - u;
        r = r - ba.commutator(bb);
        if (!r.is_zero())
          return ResidualCase{false,
                              "basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")",
                              to_string(r)};
      }
    return ResidualCase{};
  });

  h.run_case("lc_certificate",
             "2<gc_A B, C> equals the six-term metric expression on all basis triples", [&] {
               for (int a = 0; a < 2 * m; ++a)
                 for (int b = 0; b < 2 * m; ++b)
                   for (int cc = 0; cc < 2 * m; ++cc) {
                     SuperFn r = lc_certificate_residual(*gc, a, b, cc);
                     if (!r.is_zero())
                       return ResidualCase{false,
                                           "triple (" + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(cc) + ")",
                                           to_string(r)};
                   }
               return ResidualCase{};
             });

  h.run_case("curvature_rows",
             "R^gc(i_alpha, i_beta) = 0 and R^gc(nabla_X, i_alpha) i_beta = 0", [&] {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int e = 0; e < 2 * m; ++e) {
          VectorField r1 = gc->curvature_endo(gc->basis_field(m + a), gc->basis_field(m + b),
                                              gc->basis_field(e));
          if (!r1.is_zero()) return ResidualCase{false, "interior row", to_string(r1)};
          if (e >= m) {
            VectorField r2 = gc->curvature_endo(gc->basis_field(a), gc->basis_field(m + b),
                                                gc->basis_field(e));
            if (!r2.is_zero()) return ResidualCase{false, "mixed row", to_string(r2)};
          }
        }
    return ResidualCase{};
  });

  h.run("curvtr", "R^{div_gc}(D1,D2) = -sTr(R^gc(D1,D2))", std::min(sc.trials, 25L), [&](Rng& r) {
    VectorField d1 = r.vectorfield(m, m, random_parity(r), deg);
    VectorField d2 = r.vectorfield(m, m, random_parity(r), deg);
    return curvtr_residual(gc, d1, d2);
  });

  h.run_case("theorem_cc", "Delta^{str} = koszul_delta on probes (and squares to zero when flat)",
             [&] { return theorem_cc_check(c, probe_basis(m, m, 3)); },
             "probe basis to even degree 3");

  h.run("generator_difference",
        "Delta' f - Delta f = (-1)^|f| 1/2 sTr(nabla'_{X_f} - nabla_{X_f})",
        std::min(sc.trials, 25L), [&](Rng& r) {
          Connection c2(m);
          for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i)
              for (int j = i; j < m; ++j) c2.set_gamma(k, i, j, r.poly(m, 1, 1));
          auto gc2 = std::make_shared<const GradedConnection>(c2);
          OddPoisson pi = OddPoisson::schouten(m);
          Generator g1{pi, Divergence::supertrace(gc)};
          Generator g2{pi, Divergence::supertrace(gc2)};
          SuperFn f = r.superfn(m, m, random_parity(r), deg);
          unsigned pf = unsigned(*f.parity());
          VectorField xf = pi.hamiltonian(f);
          // supertrace of the difference endomorphism in the coordinate basis
          SuperFn tr(m, m);
          for (int i = 0; i < m; ++i) {
            VectorField basis(m, m, Parity::Even);
            basis.set_x_coeff(i, SuperFn::one(m, m));
            tr = tr + (gc2->covariant(xf, basis) - gc->covariant(xf, basis)).x_coeff(i);
          }
          for (int j = 0; j < m; ++j) {
            VectorField basis(m, m, Parity::Odd);
            basis.set_s_coeff(j, SuperFn::one(m, m));
            tr = tr - (gc2->covariant(xf, basis) - gc->covariant(xf, basis)).s_coeff(j);
          }
          SuperFn rhs = tr * Rational(1, 2);
          if (sign_pow(pf) < 0) rhs = -rhs;
          return g2.apply(f) - g1.apply(f) - rhs;
        });
}

using SuiteFn = void (*)(const Scenario&, Harness&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"bracket_axioms", suite_bracket_axioms},
    {"bv_generator", suite_bv_generator},
    {"curvber", suite_curvber},
    {"identities", suite_identities},
    {"deformation", suite_deformation},
    {"theorem_aa", suite_theorem_aa},
    {"derham", suite_derham},
    {"theorem_bb", suite_theorem_bb},
    {"qsp", suite_qsp},
    {"connections", suite_connections},
};

}  // namespace

std::vector<std::string> known_suites() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.push_back(s.name);
  return out;
}

std::vector<std::string> applicable_suites(const Scenario& sc) {
  std::vector<std::string> out;
  if (sc.model) {
    out.push_back("bracket_axioms");
    out.push_back("bv_generator");
    out.push_back("identities");
    out.push_back("deformation");
    if (*sc.model == "schouten") {
      out.push_back("theorem_aa");
      if (sc.p) out.push_back("qsp");
    } else {
      out.push_back("derham");
      if (sc.p) {
        out.push_back("theorem_bb");
        out.push_back("qsp");
      }
    }
  }
  out.push_back("curvber");
  if (sc.christoffels) out.push_back("connections");
  return out;
}

Report run_suites(const Scenario& sc, const std::vector<std::string>& suites) {
  std::vector<std::string> names = suites;
  if (names.empty()) names = sc.suites;
  if (names.empty()) names = applicable_suites(sc);

  Report report;
  report.seed = sc.seed;
  report.trials = sc.trials;
  for (const auto& name : names) {
    const SuiteEntry* entry = nullptr;
    for (const auto& s : kSuites)
      if (name == s.name) entry = &s;
    if (!entry) throw std::invalid_argument("unknown suite: " + name);
    Harness h;
    h.suite.name = name;
    h.seed = sc.seed;
    entry->fn(sc, h);
    report.pass = report.pass && h.suite.pass;
    report.suites.push_back(std::move(h.suite));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Expression evaluation
// ---------------------------------------------------------------------------

namespace {

bool split_call(const std::string& expr, const std::string& fn, std::vector<std::string>& args) {
  std::string t = expr;
  auto strip = [](std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  };
  strip(t);
  if (t.rfind(fn + "(", 0) != 0 || t.back() != ')') return false;
  std::string inner = t.substr(fn.size() + 1, t.size() - fn.size() - 2);
  args.clear();
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  args.push_back(cur);
  for (auto& a : args) strip(a);
  return true;
}

}  // namespace

std::string eval_expr(const Scenario& sc, const std::string& expr) {
  PrintOptions opts;
  if (sc.model && *sc.model == "schouten") opts.odd_name = "xi";
  auto parse_arg = [&](const std::string& text) { return parse_superfn(text, sc.m, sc.n); };

  std::vector<std::string> args;
  if (split_call(expr, "delta", args)) {
    if (args.size() != 1) throw std::invalid_argument("delta takes one argument");
    Generator gen{model_from(sc), divergence_from(sc)};
    return to_string(gen.apply(parse_arg(args[0])), opts);
  }
  if (split_call(expr, "bracket", args)) {
    if (args.size() != 2) throw std::invalid_argument("bracket takes two arguments");
    OddPoisson pi = model_from(sc);
    return to_string(pi.bracket(parse_arg(args[0]), parse_arg(args[1])), opts);
  }
  if (split_call(expr, "hamiltonian", args)) {
    if (args.size() != 1) throw std::invalid_argument("hamiltonian takes one argument");
    OddPoisson pi = model_from(sc);
    return to_string(pi.hamiltonian(parse_arg(args[0])), opts);
  }
  if (split_call(expr, "d", args)) {
    if (args.size() != 1) throw std::invalid_argument("d takes one argument");
    if (sc.m != sc.n) throw std::invalid_argument("d needs an (m|m) scenario");
    return to_string(de_rham_d(sc.m).apply(parse_arg(args[0])), opts);
  }
  return to_string(parse_arg(expr), opts);
}

}  // namespace gbv
