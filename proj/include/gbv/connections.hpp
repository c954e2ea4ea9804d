#pragma once

// Torsionless connections on R^m and the induced structure on the cotangent
// model: the odd metric <nabla_X, i_alpha> = alpha(X), its graded Levi-Civita
// connection given by an action table on the basis derivations
// (nabla_{d/dx^1}, ..., nabla_{d/dx^m}, i_{dx^1}, ..., i_{dx^m}), the
// supertrace divergence, and Koszul's degree -1 generator of the Schouten
// bracket attached to the connection.

#include <memory>
#include <string>
#include <vector>

#include "gbv/divergence.hpp"
#include "gbv/vectorfield.hpp"

namespace gbv {

// Christoffel data Gamma^k_{ij}, symmetric in (i,j) (torsionless by
// construction; symmetry is validated when components are set).
class Connection {
 public:
  explicit Connection(int m) : m_(m), gamma_(std::size_t(m) * m * m, Poly(m)) {}
  static Connection flat(int m) { return Connection(m); }

  int m() const { return m_; }
  const Poly& gamma(int k, int i, int j) const { return gamma_.at(idx(k, i, j)); }
  void set_gamma(int k, int i, int j, const Poly& p) {
    gamma_.at(idx(k, i, j)) = p;
    gamma_.at(idx(k, j, i)) = p;
  }

 private:
  std::size_t idx(int k, int i, int j) const {
    if (k < 0 || i < 0 || j < 0 || k >= m_ || i >= m_ || j >= m_)
      throw std::invalid_argument("Connection: index out of range");
    return (std::size_t(k) * m_ + std::size_t(i)) * m_ + std::size_t(j);
  }

  int m_;
  std::vector<Poly> gamma_;
};

// Polynomial vector fields on the base, by components.
using PolyVec = std::vector<Poly>;

PolyVec lie_bracket_fields(const PolyVec& x, const PolyVec& y);
PolyVec nabla(const Connection& c, const PolyVec& x, const PolyVec& y);
// R(X,Y)Z = [nabla_X, nabla_Y]Z - nabla_{[X,Y]}Z
PolyVec curvature_r(const Connection& c, const PolyVec& x, const PolyVec& y, const PolyVec& z);
// div_nabla(X) = Tr(nabla_X - ad_X)
Poly div_nabla(const Connection& c, const PolyVec& x);
bool is_flat(const Connection& c);

// Derivation of the multivector algebra expressed in the 2m-element basis:
// sum_i k[i] nabla_{d/dx^i} + sum_j l[j] i_{dx^j}.
struct BasisCombo {
  std::vector<SuperFn> k, l;
};

class GradedConnection {
 public:
  // The Levi-Civita connection of the odd metric of the base connection:
  //   gc_{nabla_X} nabla_Y = nabla_{nabla_X Y} + i_{R(.,Y)X}
  //   gc_{nabla_X} i_alpha = i_{nabla_X alpha}
  //   gc_{i_alpha}         = 0
  explicit GradedConnection(Connection c);

  int m() const { return m_; }
  const Connection& base() const { return c_; }
  bool flat() const;

  // Basis derivations as coefficient fields; index a < m: nabla_{d/dx^a},
  // index a >= m: i_{dx^{a-m}}.
  VectorField basis_field(int a) const;
  static Parity basis_parity(int a, int m) { return a < m ? Parity::Even : Parity::Odd; }

  // Unique decomposition of a derivation in the basis.
  BasisCombo decompose(const VectorField& e) const;
  VectorField realize(const BasisCombo& combo, Parity parity) const;

  // gc_D E for homogeneous D and E.
  VectorField covariant(const VectorField& d, const VectorField& e) const;

  // sTr(gc_D - ad_D), odd basis elements entering with negative sign.
  SuperFn str_divergence(const VectorField& d) const;

  // R^gc(D1,D2) E = [gc_{D1}, gc_{D2}] E - gc_{[D1,D2]} E
  VectorField curvature_endo(const VectorField& d1, const VectorField& d2,
                             const VectorField& e) const;
  SuperFn supertrace_curvature(const VectorField& d1, const VectorField& d2) const;

  // The odd metric on arbitrary derivations.
  SuperFn metric(const VectorField& e, const VectorField& f) const;

 private:
  Connection c_;
  int m_;
  std::vector<std::vector<BasisCombo>> nn_;  // gc_{nabla_i} nabla_j
  std::vector<std::vector<BasisCombo>> ni_;  // gc_{nabla_i} i_{dx^j}
};

// Residual of R^{div_gc}(D1,D2) + sTr(R^gc(D1,D2)); identically zero for the
// torsionless graded connection.
SuperFn curvtr_residual(const std::shared_ptr<const GradedConnection>& gc,
                        const VectorField& d1, const VectorField& d2);

// Six-term residual of the graded Levi-Civita characterization
//   2 <gc_{B_a} B_b, B_c> = B_a<B_b,B_c> + <[B_a,B_b],B_c>
//     + (-1)^{|B_a|(|B_b|+|B_c|)} ( B_b<B_c,B_a> - <[B_b,B_c],B_a> )
//     - (-1)^{|B_c|(|B_a|+|B_b|)} ( B_c<B_a,B_b> - <[B_c,B_a],B_b> )
// on basis triples.
SuperFn lc_certificate_residual(const GradedConnection& gc, int a, int b, int c);

// Koszul's degree -1 operator on multivectors: zero on functions, -div_nabla
// on vector fields, extended to decomposables by
//   sum_t (-1)^{t+1} (-div X_t) X_1^..^X_t^..^X_k
//   + sum_{t<u} (-1)^{t+u} [X_t,X_u] ^ X_1^..(omit t,u)..^X_k
SuperFn koszul_delta(const Connection& c, const SuperFn& a);

// Probe check that the supertrace-divergence generator of the Schouten
// bracket coincides with koszul_delta, and squares to zero when the base
// connection is flat.
ResidualCase theorem_cc_check(const Connection& c, const std::vector<SuperFn>& probes);

}  // namespace gbv
