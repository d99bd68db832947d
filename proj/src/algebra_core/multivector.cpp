#include "lieyb/multivector.hpp"

namespace lieyb {

Bivector::Bivector(Matrix m) : m_(std::move(m)) {
  if (!m_.is_skew()) throw DimensionMismatch("bivector matrix must be square and skew");
}

Bivector Bivector::wedge(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("wedge of vectors of different length");
  const std::size_t d = x.size();
  Bivector r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Scalar v = x[i] * y[j] - x[j] * y[i];
      if (!v.is_zero()) r.set(i, j, v);
    }
  return r;
}

Bivector Bivector::basis(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim) throw DimensionMismatch("basis bivector index out of range");
  Bivector r(dim);
  if (i != j) r.set(i, j, 1);
  return r;
}

void Bivector::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i == j) {
    if (!v.is_zero()) throw DimensionMismatch("bivector diagonal must vanish");
    return;
  }
  m_(i, j) = v;
  m_(j, i) = -v;
}

Scalar Bivector::operator()(const Covector& alpha, const Covector& beta) const {
  if (alpha.size() != dim() || beta.size() != dim()) throw DimensionMismatch("bivector pairing length");
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (beta[j].is_zero() || m_(i, j).is_zero()) continue;
      s.add_product(alpha[i] * m_(i, j), beta[j]);
    }
  }
  return s;
}

Vector Bivector::sharp(const Covector& alpha) const {
  if (alpha.size() != dim()) throw DimensionMismatch("sharp argument length");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) out[j].add_product(alpha[i], m_(i, j));
  }
  return out;
}

Bivector& Bivector::operator+=(const Bivector& o) {
  m_ += o.m_;
  return *this;
}
Bivector& Bivector::operator-=(const Bivector& o) {
  m_ -= o.m_;
  return *this;
}
Bivector& Bivector::operator*=(const Scalar& s) {
  m_ *= s;
  return *this;
}

Trivector Trivector::wedge(const Vector& x, const Vector& y, const Vector& z) {
  if (x.size() != y.size() || y.size() != z.size()) throw DimensionMismatch("wedge of vectors of different length");
  const std::size_t d = x.size();
  Trivector t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Scalar v = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                   x[k] * (y[i] * z[j] - y[j] * z[i]);
        if (!v.is_zero()) t.set(i, j, k, v);
      }
  return t;
}

void Trivector::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i == j || j == k || i == k) {
    if (!v.is_zero()) throw DimensionMismatch("trivector entries with a repeated index must vanish");
    return;
  }
  at(i, j, k) = v;
  at(j, k, i) = v;
  at(k, i, j) = v;
  at(j, i, k) = -v;
  at(i, k, j) = -v;
  at(k, j, i) = -v;
}

Scalar Trivector::operator()(const Covector& a, const Covector& b, const Covector& c) const {
  if (a.size() != dim_ || b.size() != dim_ || c.size() != dim_) throw DimensionMismatch("trivector pairing length");
  Scalar s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& t = (*this)(i, j, k);
        if (t.is_zero() || c[k].is_zero()) continue;
        s.add_product(ab * t, c[k]);
      }
    }
  }
  return s;
}

bool Trivector::is_zero() const {
  for (const auto& x : t_)
    if (!x.is_zero()) return false;
  return true;
}

bool Trivector::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& v = (*this)(i, j, k);
        if ((i == j || j == k || i == k) && !v.is_zero()) return false;
        if (!(v == -(*this)(j, i, k)) || !(v == -(*this)(i, k, j))) return false;
      }
  return true;
}

std::vector<Trivector::Component> Trivector::components() const {
  std::vector<Component> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k)
        if (!(*this)(i, j, k).is_zero()) out.push_back({i, j, k, (*this)(i, j, k)});
  return out;
}

Trivector& Trivector::operator+=(const Trivector& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("trivector sum dimension");
  for (std::size_t i = 0; i < t_.size(); ++i) t_[i] += o.t_[i];
  return *this;
}
Trivector& Trivector::operator-=(const Trivector& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("trivector difference dimension");
  for (std::size_t i = 0; i < t_.size(); ++i) t_[i] -= o.t_[i];
  return *this;
}
Trivector& Trivector::operator*=(const Scalar& s) {
  for (auto& x : t_) x *= s;
  return *this;
}

Bivector j_dag(const Matrix& j, const Bivector& r) {
  if (j.rows() != r.dim() || !j.is_square()) throw DimensionMismatch("j_dag operand size");
  Matrix m = j * r.matrix();
  m += r.matrix() * j.transpose();
  return Bivector(std::move(m));
}

Bivector j_dag(const LinearMap& j, const Bivector& r) { return j_dag(j.matrix(), r); }

Bivector ad_dag(const LieAlgebra& g, const Vector& u, const Bivector& r) { return j_dag(g.ad(u), r); }

Trivector ad_trivector(const Matrix& a, const Trivector& t) {
  const std::size_t d = t.dim();
  if (a.rows() != d || !a.is_square()) throw DimensionMismatch("ad_trivector operand size");
  Trivector out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Scalar v;
        for (std::size_t m = 0; m < d; ++m) {
          v.add_product(a(i, m), t(m, j, k));
          v.add_product(a(j, m), t(i, m, k));
          v.add_product(a(k, m), t(i, j, m));
        }
        if (!v.is_zero()) out.set(i, j, k, v);
      }
  return out;
}

Trivector ad_trivector(const LieAlgebra& g, const Vector& u, const Trivector& t) {
  return ad_trivector(g.ad(u), t);
}

Trivector schouten_self(const LieAlgebra& g, const Bivector& r) {
  const std::size_t d = g.dim();
  if (r.dim() != d) throw DimensionMismatch("schouten operand dimension");
  // rows[j] = r#(b_j*)
  std::vector<Vector> rows;
  rows.reserve(d);
  for (std::size_t j = 0; j < d; ++j) rows.push_back(r.sharp(g.dual_basis(j)));
  // p[j][k] = [r#b_j*, r#b_k*]
  std::vector<std::vector<Vector>> p(d, std::vector<Vector>(d, Vector(d)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      p[j][k] = g.bracket(rows[j], rows[k]);
      p[k][j] = -p[j][k];
    }
  Trivector t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Scalar v = p[j][k][i] + p[k][i][j] + p[i][j][k];
        if (!v.is_zero()) t.set(i, j, k, Scalar(2) * v);
      }
  return t;
}

Trivector schouten_pair(const LieAlgebra& g, const Bivector& a, const Bivector& b) {
  Trivector t = schouten_self(g, a + b);
  t -= schouten_self(g, a - b);
  t *= Scalar(1, 4);
  return t;
}

}  // namespace lieyb
