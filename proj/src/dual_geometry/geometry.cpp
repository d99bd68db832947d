#include "lieyb/geometry.hpp"

namespace lieyb {

Matrix ConnectionTable::along(const Covector& alpha) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    if (!alpha[i].is_zero()) m += alpha[i] * n[i];
  return m;
}

ConnectionTable connection(const LieAlgebra& g, const Bivector& r) {
  ConnectionTable t;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix a = g.ad(r.sharp(g.dual_basis(i))).transpose();
    a *= Scalar(-1);
    t.n.push_back(std::move(a));
  }
  return t;
}

ConnectionTable koszul_connection(const LieAlgebra& dual, const DualMetric& metric) {
  const std::size_t d = dual.dim();
  const Matrix& gm = metric.matrix;
  Matrix ginv;
  try {
    ginv = inverse(gm);
  } catch (const Degenerate&) {
    throw DegenerateMetric("dual metric is degenerate");
  }
  // b[i][j][l] = <[a_i, a_j], a_l>
  std::vector<std::vector<std::vector<Scalar>>> b(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = dual.constant(i, j, k);
        if (c.is_zero()) continue;
        for (std::size_t l = 0; l < d; ++l) b[i][j][l].add_product(c, gm(k, l));
      }
  ConnectionTable t;
  t.n.assign(d, Matrix(d, d));
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Scalar> low(d);
      for (std::size_t l = 0; l < d; ++l) low[l] = half * (b[i][j][l] - b[j][l][i] + b[l][i][j]);
      for (std::size_t k = 0; k < d; ++k) {
        Scalar v;
        for (std::size_t l = 0; l < d; ++l) v.add_product(low[l], ginv(l, k));
        t.n[i](k, j) = v;
      }
    }
  return t;
}

bool is_torsion_free(const ConnectionTable& conn, const LieAlgebra& dual) {
  const std::size_t d = dual.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!(conn.n[i](k, j) - conn.n[j](k, i) == dual.constant(i, j, k))) return false;
  return true;
}

bool is_metric(const ConnectionTable& conn, const DualMetric& metric) {
  for (const auto& n : conn.n)
    if (!(n.transpose() * metric.matrix + metric.matrix * n).is_zero()) return false;
  return true;
}

Vector u_r_map(const Trivector& t, const Covector& a, const Covector& b) {
  const std::size_t d = t.dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t l = 0; l < d; ++l) out[l].add_product(ab, t(i, j, l));
    }
  }
  out *= Scalar(1, 2);
  return out;
}

Vector u_r_map(const LieAlgebra& g, const Bivector& r, const Covector& a, const Covector& b) {
  return u_r_map(schouten_self(g, r), a, b);
}

bool CurvatureTensor::flat() const {
  for (const auto& m : rmat)
    if (!m.is_zero()) return false;
  return true;
}

bool CurvatureTensor::locally_symmetric() const {
  for (const auto& m : nabla_r)
    if (!m.is_zero()) return false;
  return true;
}

CurvatureTensor curvature_from_connection(const LieAlgebra& dual, const ConnectionTable& conn) {
  const std::size_t d = dual.dim();
  if (conn.dim() != d) throw DimensionMismatch("connection dimension");
  const auto& n = conn.n;
  CurvatureTensor ct;
  ct.dim = d;
  ct.rmat.assign(d * d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix m(d, d);
      for (std::size_t k = 0; k < d; ++k)
        if (!dual.constant(i, j, k).is_zero()) m += dual.constant(i, j, k) * n[k];
      m -= commutator(n[i], n[j]);
      ct.rmat[j * d + i] = Scalar(-1) * m;
      ct.rmat[i * d + j] = std::move(m);
    }

  ct.nabla_r.assign(d * d * d, Matrix(d, d));
  for (std::size_t p = 0; p < d; ++p) {
    const Matrix& np = n[p];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        const Matrix& rij = ct.rmat[i * d + j];
        Matrix t = commutator(np, rij);
        for (std::size_t m = 0; m < d; ++m) {
          if (!np(m, i).is_zero()) t -= np(m, i) * ct.rmat[m * d + j];
          if (!np(m, j).is_zero()) t -= np(m, j) * ct.rmat[i * d + m];
        }
        ct.nabla_r[(p * d + j) * d + i] = Scalar(-1) * t;
        ct.nabla_r[(p * d + i) * d + j] = std::move(t);
      }
  }
  return ct;
}

CurvatureTensor curvature(const LieAlgebra& g, const Bivector& r, const LieAlgebra& dual, const ConnectionTable& conn) {
  CurvatureTensor ct = curvature_from_connection(dual, conn);
  const Trivector rr = schouten_self(g, r);
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector u = u_r_map(rr, g.dual_basis(i), g.dual_basis(j));
      if (!(ct.rmat[i * d + j] == g.ad(u).transpose()))
        throw FormulaMismatch("curvature R(" + std::to_string(i) + "," + std::to_string(j) +
                              ") differs from ad* of u_r");
    }
  return ct;
}

Completeness completeness_verdict(bool flat, bool unimodular) {
  if (!flat) return Completeness::NotDetermined;
  return unimodular ? Completeness::Complete : Completeness::Incomplete;
}

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::Complete: return "complete";
    case Completeness::Incomplete: return "incomplete";
    case Completeness::NotDetermined: return "not-determined";
  }
  return "not-determined";
}

DualGeometryReport geometry_report(const LieAlgebra& g, const OrthogonalStructure& k, const Bivector& r) {
  if (!gybe_check(g, r)) throw NotAYbeSolution("bivector fails the generalized Yang-Baxter equation");
  DualGeometryReport rep;
  rep.dual = r_bracket(g, r);
  const LieAlgebra& dual = rep.dual.algebra;
  rep.metric = dual_metric(k);
  rep.conn = connection(g, r);
  rep.koszul_agrees = rep.conn == koszul_connection(dual, rep.metric);
  rep.torsion_free = is_torsion_free(rep.conn, dual);
  rep.metric_compatible = is_metric(rep.conn, rep.metric);
  rep.curv = curvature(g, r, dual, rep.conn);
  rep.flat = rep.curv.flat();
  rep.locally_symmetric = rep.curv.locally_symmetric();
  rep.unimodular = trace_form_unimodular(dual);
  rep.solvable = is_solvable(dual);
  rep.completeness = completeness_verdict(rep.flat, rep.unimodular);

  const std::size_t d = g.dim();
  const Subspace ker = Subspace::span(d, kernel_basis(r.matrix().transpose()));
  rep.kernel_dim = ker.dim();
  rep.kernel_abelian_ideal = is_ideal(dual, ker) && is_abelian(dual, ker);
  std::vector<Vector> image;
  for (std::size_t i = 0; i < d; ++i) image.push_back(r.sharp(g.dual_basis(i)));
  rep.image_subalgebra = is_subalgebra(g, Subspace::span(d, image));

  const Subspace all = Subspace::whole(d);
  const Subspace derived = bracket_span(dual, all, all);
  rep.derived_dim = derived.dim();
  rep.derived_abelian = is_abelian(dual, derived);
  return rep;
}

}  // namespace lieyb
