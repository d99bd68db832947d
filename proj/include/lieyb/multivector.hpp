#ifndef LIEYB_MULTIVECTOR_HPP
#define LIEYB_MULTIVECTOR_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "lieyb/lie_algebra.hpp"

namespace lieyb {

/// r = sum_{i<j} R_ij b_i ^ b_j, stored as the full skew matrix R.
/// r(alpha, beta) = alpha^T R beta and (r#alpha)_j = sum_i alpha_i R_ij.
class Bivector {
 public:
  Bivector() = default;
  explicit Bivector(std::size_t dim) : m_(dim, dim) {}
  /// Throws DimensionMismatch unless m is square and skew.
  explicit Bivector(Matrix m);

  static Bivector wedge(const Vector& x, const Vector& y);
  /// b_i ^ b_j
  static Bivector basis(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Sets R_ij = v and R_ji = -v.
  void set(std::size_t i, std::size_t j, const Scalar& v);

  Scalar operator()(const Covector& alpha, const Covector& beta) const;
  Vector sharp(const Covector& alpha) const;
  bool is_zero() const { return m_.is_zero(); }

  Bivector& operator+=(const Bivector& o);
  Bivector& operator-=(const Bivector& o);
  Bivector& operator*=(const Scalar& s);
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend Bivector operator-(Bivector a) { return a *= Scalar(-1); }
  friend Bivector operator*(const Scalar& s, Bivector a) { return a *= s; }
  friend bool operator==(const Bivector& a, const Bivector& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

/// Fully antisymmetric dim^3 array; T(alpha,beta,gamma) = sum T_ijk alpha_i beta_j gamma_k,
/// so b_i ^ b_j ^ b_k has T_ijk = 1 for i<j<k.
class Trivector {
 public:
  Trivector() = default;
  explicit Trivector(std::size_t dim) : dim_(dim), t_(dim * dim * dim) {}

  static Trivector wedge(const Vector& x, const Vector& y, const Vector& z);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * dim_ + j) * dim_ + k];
  }
  /// Writes v at (i,j,k) and the signed value at every permutation.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);

  Scalar operator()(const Covector& a, const Covector& b, const Covector& c) const;
  bool is_zero() const;
  bool is_antisymmetric() const;

  struct Component {
    std::size_t i, j, k;
    Scalar value;
  };
  /// Nonzero coefficients T_ijk with i<j<k.
  std::vector<Component> components() const;

  Trivector& operator+=(const Trivector& o);
  Trivector& operator-=(const Trivector& o);
  Trivector& operator*=(const Scalar& s);
  friend Trivector operator+(Trivector a, const Trivector& b) { return a += b; }
  friend Trivector operator-(Trivector a, const Trivector& b) { return a -= b; }
  friend Trivector operator*(const Scalar& s, Trivector a) { return a *= s; }
  friend bool operator==(const Trivector& a, const Trivector& b) { return a.dim_ == b.dim_ && a.t_ == b.t_; }

 private:
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return t_[(i * dim_ + j) * dim_ + k]; }
  std::size_t dim_ = 0;
  std::vector<Scalar> t_;
};

/// (J^dag r)(alpha,beta) = r(J*alpha, beta) + r(alpha, J*beta); matrix J R + R J^T.
Bivector j_dag(const Matrix& j, const Bivector& r);
Bivector j_dag(const LinearMap& j, const Bivector& r);

/// ad_u extended to bivectors as a derivation.
Bivector ad_dag(const LieAlgebra& g, const Vector& u, const Bivector& r);

/// ad_u extended to trivectors as a derivation.
Trivector ad_trivector(const LieAlgebra& g, const Vector& u, const Trivector& t);
Trivector ad_trivector(const Matrix& ad_u, const Trivector& t);

/// [r,r](a,b,c) = 2a([r#b, r#c]) + 2b([r#c, r#a]) + 2c([r#a, r#b]).
Trivector schouten_self(const LieAlgebra& g, const Bivector& r);

/// Symmetric bilinear Schouten pairing recovered by polarization:
/// S(a,b) = ([a+b,a+b] - [a-b,a-b]) / 4, so S(r,r) = [r,r].
Trivector schouten_pair(const LieAlgebra& g, const Bivector& a, const Bivector& b);

}  // namespace lieyb

#endif  // LIEYB_MULTIVECTOR_HPP
