#include "lieyb/lie_algebra.hpp"

namespace lieyb {

StructureConstants zero_constants(std::size_t dim) {
  return StructureConstants(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim)));
}

namespace {

void check_shape(const StructureConstants& c) {
  const std::size_t d = c.size();
  for (const auto& row : c) {
    if (row.size() != d) throw DimensionMismatch("structure constants are not square");
    for (const auto& v : row)
      if (v.size() != d) throw DimensionMismatch("bracket coordinate vector has wrong length");
  }
}

// [x, b_k] using full constants
Vector bracket_with_basis(const StructureConstants& c, const Vector& x, std::size_t k) {
  const std::size_t d = c.size();
  Vector out(d);
  for (std::size_t m = 0; m < d; ++m) {
    if (x[m].is_zero()) continue;
    for (std::size_t l = 0; l < d; ++l) out[l].add_product(x[m], c[m][k][l]);
  }
  return out;
}

Vector basis_bracket(const StructureConstants& c, std::size_t i, std::size_t j) {
  return Vector(c[i][j]);
}

}  // namespace

std::optional<AntisymmetryReport> find_antisymmetry_violation(const StructureConstants& c) {
  check_shape(c);
  const std::size_t d = c.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!(c[i][j][k] == -c[j][i][k])) return AntisymmetryReport{i, j};
  return std::nullopt;
}

std::optional<JacobiReport> find_jacobi_violation(const StructureConstants& c) {
  check_shape(c);
  const std::size_t d = c.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector bij = basis_bracket(c, i, j);
      for (std::size_t k = j + 1; k < d; ++k) {
        Vector res = bracket_with_basis(c, bij, k);
        res += bracket_with_basis(c, basis_bracket(c, j, k), i);
        res += bracket_with_basis(c, basis_bracket(c, k, i), j);
        if (!res.is_zero()) return JacobiReport{i, j, k, std::move(res)};
      }
    }
  return std::nullopt;
}

LieAlgebra LieAlgebra::validate(StructureConstants c, std::vector<std::string> labels) {
  if (auto a = find_antisymmetry_violation(c)) throw AntisymmetryViolation(a->i, a->j);
  if (auto jr = find_jacobi_violation(c)) {
    std::vector<std::string> res;
    for (const auto& x : jr->residual.components()) res.push_back(x.str());
    throw JacobiViolation(jr->i, jr->j, jr->k, std::move(res));
  }
  const std::size_t d = c.size();
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  if (labels.size() != d) throw DimensionMismatch("label count does not match dimension");

  LieAlgebra g;
  g.dim_ = d;
  g.labels_ = std::move(labels);
  g.c_ = std::move(c);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!g.c_[i][j][k].is_zero()) g.terms_.push_back({i, j, k, g.c_[i][j][k]});
  return g;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket argument length");
  Vector out(dim_);
  Scalar w;
  for (const auto& t : terms_) {
    // x_i y_j - x_j y_i
    w = x[t.i] * y[t.j];
    w -= x[t.j] * y[t.i];
    if (!w.is_zero()) out[t.k].add_product(w, t.value);
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& u) const {
  if (u.size() != dim_) throw DimensionMismatch("ad argument length");
  Matrix a(dim_, dim_);
  for (const auto& t : terms_) {
    // [u, b_j] picks up u_i c[i][j][k]; c[j][i] = -c[i][j]
    a(t.k, t.j).add_product(u[t.i], t.value);
    a(t.k, t.i).add_product(-u[t.j], t.value);
  }
  return a;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(basis(i)); }

Covector LieAlgebra::coadjoint(const Vector& u, const Covector& alpha) const {
  if (alpha.size() != dim_) throw DimensionMismatch("coadjoint argument length");
  const Matrix a = ad(u);
  Covector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (alpha[k].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) out[j].add_product(alpha[k], a(k, j));
  }
  return out;
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != m_.cols()) throw DimensionMismatch("linear map argument length");
  Vector out(m_.rows());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) out[i].add_product(m_(i, j), x[j]);
  return out;
}

Covector LinearMap::dual_apply(const Covector& alpha) const {
  if (alpha.size() != m_.rows()) throw DimensionMismatch("linear map argument length");
  Covector out(m_.cols());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) out[j].add_product(alpha[i], m_(i, j));
  return out;
}

bool LinearMap::is_derivation(const LieAlgebra& g) const {
  if (m_.rows() != g.dim() || m_.cols() != g.dim()) throw DimensionMismatch("derivation size");
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector x = g.basis(i), y = g.basis(j);
      if (!(apply(g.bracket(x, y)) == g.bracket(apply(x), y) + g.bracket(x, apply(y)))) return false;
    }
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar trace(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace lieyb
