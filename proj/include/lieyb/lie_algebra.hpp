#ifndef LIEYB_LIE_ALGEBRA_HPP
#define LIEYB_LIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieyb/linalg.hpp"

namespace lieyb {

/// c[i][j][k] is coordinate k of [b_i, b_j].
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

StructureConstants zero_constants(std::size_t dim);

struct AntisymmetryReport {
  std::size_t i, j;
};

struct JacobiReport {
  std::size_t i, j, k;
  Vector residual;  ///< [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
};

/// First failing antisymmetry pair, scanning i <= j lexicographically.
std::optional<AntisymmetryReport> find_antisymmetry_violation(const StructureConstants& c);

/// First failing Jacobi triple i < j < k in lexicographic order. Assumes
/// antisymmetry already holds.
std::optional<JacobiReport> find_jacobi_violation(const StructureConstants& c);

/// Finite-dimensional Lie algebra over Q, validated at construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws DimensionMismatch, AntisymmetryViolation or JacobiViolation.
  /// Empty labels become b0, b1, ...
  static LieAlgebra validate(StructureConstants c, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& constants() const { return c_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  Vector basis(std::size_t i) const { return Vector::unit(dim_, i); }
  Covector dual_basis(std::size_t i) const { return Covector::unit(dim_, i); }

  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad_u: column j holds [u, b_j].
  Matrix ad(const Vector& u) const;
  Matrix ad_basis(std::size_t i) const;

  /// (ad*_u alpha)(v) = alpha([u, v]).
  Covector coadjoint(const Vector& u, const Covector& alpha) const;

 private:
  struct Term {
    std::size_t i, j, k;
    Scalar value;
  };

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  StructureConstants c_;
  std::vector<Term> terms_;  // nonzero c[i][j][k] with i < j
};

/// Endomorphism of the algebra; its transpose acts on covectors.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : m_(std::move(m)) {}

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

  Vector apply(const Vector& x) const;
  /// (J* alpha)(v) = alpha(J v)
  Covector dual_apply(const Covector& alpha) const;

  /// True iff J[x,y] = [Jx,y] + [x,Jy] on all basis pairs.
  bool is_derivation(const LieAlgebra& g) const;

 private:
  Matrix m_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& m);

}  // namespace lieyb

#endif  // LIEYB_LIE_ALGEBRA_HPP
