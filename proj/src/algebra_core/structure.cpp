#include "lieyb/structure.hpp"

namespace lieyb {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vs) {
  Matrix m(vs.size(), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vs[i][j];
  }
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = row_space_basis(m);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(Vector::unit(ambient, i));
  return span(ambient, vs);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows_.rows(); ++i) {
    Vector v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = rows_(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("membership test vector length");
  if (v.is_zero()) return true;
  auto vs = basis();
  vs.push_back(v);
  return span(ambient_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& o) const {
  auto vs = basis();
  for (auto& v : o.basis()) vs.push_back(std::move(v));
  return span(ambient_, vs).dim() == dim();
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  const auto ba = a.basis();
  const auto bb = b.basis();
  for (const auto& x : ba)
    for (const auto& y : bb) {
      Vector z = g.bracket(x, y);
      if (!z.is_zero()) vs.push_back(std::move(z));
    }
  return Subspace::span(g.dim(), vs);
}

Subspace center(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  Matrix stacked(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix a = g.ad_basis(i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(i * d + r, c) = a(r, c);
  }
  return Subspace::span(d, kernel_basis(stacked));
}

std::vector<std::size_t> derived_series_dims(const LieAlgebra& g) {
  Subspace s = Subspace::whole(g.dim());
  std::vector<std::size_t> dims{s.dim()};
  while (s.dim() > 0) {
    Subspace next = bracket_span(g, s, s);
    if (next.dim() == s.dim()) break;
    s = std::move(next);
    dims.push_back(s.dim());
  }
  return dims;
}

std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& g) {
  const Subspace all = Subspace::whole(g.dim());
  Subspace s = all;
  std::vector<std::size_t> dims{s.dim()};
  while (s.dim() > 0) {
    Subspace next = bracket_span(g, all, s);
    if (next.dim() == s.dim()) break;
    s = std::move(next);
    dims.push_back(s.dim());
  }
  return dims;
}

bool is_solvable(const LieAlgebra& g) { return derived_series_dims(g).back() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series_dims(g).back() == 0; }

bool trace_form_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!trace(g.ad_basis(i)).is_zero()) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.dim()), s));
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) { return bracket_span(g, s, s).dim() == 0; }

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s) {
  const auto b = s.basis();
  const std::size_t m = b.size();
  Matrix cols(g.dim(), m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t r = 0; r < g.dim(); ++r) cols(r, a) = b[a][r];
  StructureConstants c = zero_constants(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector z = g.bracket(b[i], b[j]);
      auto x = solve(cols, z.components());
      if (!x) throw StructureMismatch("subspace is not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k) {
        c[i][j][k] = (*x)[k];
        c[j][i][k] = -(*x)[k];
      }
    }
  return LieAlgebra::validate(std::move(c));
}

bool is_heisenberg(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  if (d < 3 || d % 2 == 0) return false;
  const Subspace all = Subspace::whole(d);
  const Subspace derived = bracket_span(g, all, all);
  const Subspace z = center(g);
  return derived.dim() == 1 && z.dim() == 1 && derived == z;
}

StructureReport analyze_structure(const LieAlgebra& g) {
  StructureReport r;
  r.dim = g.dim();
  r.derived_dims = derived_series_dims(g);
  r.lower_central_dims = lower_central_series_dims(g);
  r.center = center(g);
  r.solvable = r.derived_dims.back() == 0;
  r.nilpotent = r.lower_central_dims.back() == 0;
  r.unimodular = trace_form_unimodular(g);
  return r;
}

LieAlgebra abelian_algebra(std::size_t dim) { return LieAlgebra::validate(zero_constants(dim)); }

LieAlgebra heisenberg_algebra(std::size_t m) {
  const std::size_t d = 2 * m + 1;
  StructureConstants c = zero_constants(d);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  for (std::size_t i = 0; i < m; ++i) {
    c[i][m + i][d - 1] = 1;
    c[m + i][i][d - 1] = -1;
  }
  return LieAlgebra::validate(std::move(c), std::move(labels));
}

LieAlgebra sl2_algebra() {
  StructureConstants c = zero_constants(3);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
  };
  put(0, 1, 1, 2);
  put(0, 2, 2, -2);
  put(1, 2, 0, -1);
  return LieAlgebra::validate(std::move(c), {"e1", "e2", "e3"});
}

}  // namespace lieyb
