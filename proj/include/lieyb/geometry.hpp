#ifndef LIEYB_GEOMETRY_HPP
#define LIEYB_GEOMETRY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lieyb/bialgebra.hpp"
#include "lieyb/orthogonal.hpp"
#include "lieyb/structure.hpp"

namespace lieyb {

/// Left-invariant connection on the dual: N[i] is the matrix of nabla_{a_i}
/// acting on covector coordinates, so nabla_{a_i} a_j = sum_k N[i](k, j) a_k.
struct ConnectionTable {
  std::vector<Matrix> n;

  std::size_t dim() const { return n.size(); }
  const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const { return n[i](k, j); }
  /// nabla_alpha for an arbitrary covector alpha.
  Matrix along(const Covector& alpha) const;
  friend bool operator==(const ConnectionTable& a, const ConnectionTable& b) { return a.n == b.n; }
};

/// nabla*_alpha beta = -ad*_{r#alpha} beta
ConnectionTable connection(const LieAlgebra& g, const Bivector& r);

/// Levi-Civita connection of the left-invariant metric by the Koszul formula
/// 2<nabla_a b, c> = <[a,b],c> - <[b,c],a> + <[c,a],b>. Throws DegenerateMetric.
ConnectionTable koszul_connection(const LieAlgebra& dual, const DualMetric& metric);

/// nabla_a b - nabla_b a = [a,b] on every basis pair.
bool is_torsion_free(const ConnectionTable& conn, const LieAlgebra& dual);
/// <nabla_a b, c> + <b, nabla_a c> = 0 on every basis triple.
bool is_metric(const ConnectionTable& conn, const DualMetric& metric);

/// c(u_r(a,b)) = [r,r](a,b,c) / 2
Vector u_r_map(const LieAlgebra& g, const Bivector& r, const Covector& a, const Covector& b);
Vector u_r_map(const Trivector& schouten, const Covector& a, const Covector& b);

/// R(a,b)c = nabla_{[a,b]} c - [nabla_a, nabla_b] c. rmat[i*d + j] is the
/// matrix of R(a_i, a_j); nabla_r[(p*d + i)*d + j] is the matrix of (nabla_{a_p} R)(a_i, a_j).
struct CurvatureTensor {
  std::size_t dim = 0;
  std::vector<Matrix> rmat;
  std::vector<Matrix> nabla_r;

  /// R(a_i,a_j)a_k = sum_l riem(i,j,k,l) a_l
  const Scalar& riem(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return rmat[i * dim + j](l, k);
  }
  const Scalar& nabla(std::size_t p, std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return nabla_r[(p * dim + i) * dim + j](l, k);
  }
  bool flat() const;
  bool locally_symmetric() const;
};

/// Both curvature formulas; throws FormulaMismatch when the commutator form
/// and ad*_{u_r(a,b)} disagree.
CurvatureTensor curvature(const LieAlgebra& g, const Bivector& r, const LieAlgebra& dual, const ConnectionTable& conn);

/// Curvature and its covariant derivative from a connection alone.
CurvatureTensor curvature_from_connection(const LieAlgebra& dual, const ConnectionTable& conn);

enum class Completeness { Complete, Incomplete, NotDetermined };
Completeness completeness_verdict(bool flat, bool unimodular);
std::string to_string(Completeness c);

struct DualGeometryReport {
  DualAlgebra dual;
  DualMetric metric;
  ConnectionTable conn;
  bool koszul_agrees = false;
  bool torsion_free = false;
  bool metric_compatible = false;
  CurvatureTensor curv;
  bool flat = false;
  bool locally_symmetric = false;
  bool unimodular = false;
  bool solvable = false;
  Completeness completeness = Completeness::NotDetermined;
  std::size_t kernel_dim = 0;
  bool kernel_abelian_ideal = false;
  bool image_subalgebra = false;
  std::size_t derived_dim = 0;
  bool derived_abelian = false;
};

/// Throws NotAYbeSolution when r fails the generalized equation.
DualGeometryReport geometry_report(const LieAlgebra& g, const OrthogonalStructure& k, const Bivector& r);

}  // namespace lieyb

#endif  // LIEYB_GEOMETRY_HPP
