#include "lieyb/bialgebra.hpp"

namespace lieyb {

Bivector Cocycle::operator()(const Vector& u) const {
  if (u.size() != images.size()) throw DimensionMismatch("cocycle argument length");
  Bivector out(images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    if (!u[k].is_zero()) out += u[k] * images[k];
  return out;
}

Cocycle Cocycle::zero(std::size_t dim) { return Cocycle{std::vector<Bivector>(dim, Bivector(dim))}; }

CocycleReport cocycle_check(const LieAlgebra& g, const Cocycle& xi) {
  const std::size_t d = g.dim();
  if (xi.dim() != d) throw DimensionMismatch("cocycle is defined on a different dimension");
  std::vector<Matrix> ad;
  for (std::size_t u = 0; u < d; ++u) ad.push_back(g.ad_basis(u));
  CocycleReport report;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = u + 1; v < d; ++v) {
      Bivector res = xi(g.bracket(g.basis(u), g.basis(v)));
      res -= j_dag(ad[u], xi.images[v]);
      res += j_dag(ad[v], xi.images[u]);
      if (!res.is_zero()) report.failures.push_back({u, v, std::move(res)});
    }
  return report;
}

std::vector<Cocycle> solve_cocycle_space(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  const std::size_t np = pairs.size();
  std::vector<Bivector> unit;
  for (const auto& [i, j] : pairs) unit.push_back(Bivector::basis(d, i, j));

  // lifted[u][p] = ad_u (b_i ^ b_j)
  std::vector<std::vector<Bivector>> lifted(d);
  for (std::size_t u = 0; u < d; ++u) {
    const Matrix a = g.ad_basis(u);
    for (std::size_t p = 0; p < np; ++p) lifted[u].push_back(j_dag(a, unit[p]));
  }

  // Unknown (k, p) is coefficient p of xi(b_k); equation block (u,v) holds
  // xi([u,v]) - ad_u xi(v) + ad_v xi(u).
  Matrix sys(np * np, d * np);
  std::size_t block = 0;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = u + 1; v < d; ++v, ++block) {
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& ck = g.constant(u, v, k);
        for (std::size_t p = 0; p < np; ++p) {
          Bivector val(d);
          if (!ck.is_zero()) val += ck * unit[p];
          if (v == k) val -= lifted[u][p];
          if (u == k) val += lifted[v][p];
          if (val.is_zero()) continue;
          for (std::size_t q = 0; q < np; ++q)
            sys(block * np + q, k * np + p) = val(pairs[q].first, pairs[q].second);
        }
      }
    }

  std::vector<Cocycle> basis;
  for (const auto& x : kernel_basis(sys)) {
    Cocycle xi = Cocycle::zero(d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t p = 0; p < np; ++p)
        if (!x[k * np + p].is_zero()) xi.images[k].set(pairs[p].first, pairs[p].second, x[k * np + p]);
    basis.push_back(std::move(xi));
  }
  return basis;
}

Cocycle coboundary(const LieAlgebra& g, const Bivector& r) {
  if (r.dim() != g.dim()) throw DimensionMismatch("bivector dimension");
  Cocycle xi;
  for (std::size_t u = 0; u < g.dim(); ++u) xi.images.push_back(j_dag(g.ad_basis(u), r));
  return xi;
}

std::vector<std::string> dual_labels(const LieAlgebra& g) {
  std::vector<std::string> out;
  for (const auto& l : g.labels()) out.push_back(l + "*");
  return out;
}

StructureConstants dual_constants(const Cocycle& xi) {
  const std::size_t d = xi.dim();
  StructureConstants c = zero_constants(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) c[i][j][k] = xi.images[k](i, j);
  return c;
}

StructureConstants r_bracket_constants(const LieAlgebra& g, const Bivector& r) {
  const std::size_t d = g.dim();
  if (r.dim() != d) throw DimensionMismatch("bivector dimension");
  // ad*_x b_i* has components A_x[i][.]
  std::vector<Matrix> ad_sharp;
  for (std::size_t j = 0; j < d; ++j) ad_sharp.push_back(g.ad(r.sharp(g.dual_basis(j))));
  StructureConstants c = zero_constants(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t m = 0; m < d; ++m) {
        Scalar v = ad_sharp[j](i, m) - ad_sharp[i](j, m);
        c[j][i][m] = -v;
        c[i][j][m] = std::move(v);
      }
  return c;
}

namespace {

DualAlgebra validated_dual(StructureConstants c, const LieAlgebra& g, DualSource src) {
  if (auto a = find_antisymmetry_violation(c)) throw AntisymmetryViolation(a->i, a->j);
  if (auto jr = find_jacobi_violation(c)) {
    std::vector<std::string> res;
    for (const auto& x : jr->residual.components()) res.push_back(x.str());
    throw JacobiFailure(jr->i, jr->j, jr->k, std::move(res));
  }
  return DualAlgebra{LieAlgebra::validate(std::move(c), dual_labels(g)), src};
}

}  // namespace

DualAlgebra dual_bracket_from_cocycle(const LieAlgebra& g, const Cocycle& xi) {
  if (xi.dim() != g.dim()) throw DimensionMismatch("cocycle is defined on a different dimension");
  return validated_dual(dual_constants(xi), g, DualSource::Cocycle);
}

DualAlgebra r_bracket(const LieAlgebra& g, const Bivector& r) {
  return validated_dual(r_bracket_constants(g, r), g, DualSource::RMatrix);
}

bool cybe_check(const LieAlgebra& g, const Bivector& r) { return schouten_self(g, r).is_zero(); }

GybeReport gybe_report(const LieAlgebra& g, const Bivector& r) {
  GybeReport rep;
  rep.schouten = schouten_self(g, r);
  rep.residual = Trivector(g.dim());
  if (rep.schouten.is_zero()) return rep;
  for (std::size_t u = 0; u < g.dim(); ++u) {
    Trivector t = ad_trivector(g.ad_basis(u), rep.schouten);
    if (!t.is_zero()) {
      rep.first = u;
      rep.residual = std::move(t);
      break;
    }
  }
  return rep;
}

bool gybe_check(const LieAlgebra& g, const Bivector& r) { return gybe_report(g, r).ok(); }

}  // namespace lieyb
