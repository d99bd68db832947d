#ifndef LIEYB_STRUCTURE_HPP
#define LIEYB_STRUCTURE_HPP

#include <cstddef>
#include <vector>

#include "lieyb/lie_algebra.hpp"

namespace lieyb {

/// Linear subspace of Q^d, kept as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vs);
  static Subspace whole(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return span(ambient, {}); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.rows(); }
  std::vector<Vector> basis() const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.rows_ == b.rows_; }

 private:
  std::size_t ambient_ = 0;
  Matrix rows_;
};

/// span{[a,b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace center(const LieAlgebra& g);

std::vector<std::size_t> derived_series_dims(const LieAlgebra& g);
std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// tr(ad_x) = 0 for every basis vector x.
bool trace_form_unimodular(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_abelian(const LieAlgebra& g, const Subspace& s);

/// The subalgebra s as a Lie algebra in the basis s.basis(). Throws
/// StructureMismatch when s is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s);

/// Odd dimension 2m+1 >= 3 with one-dimensional center equal to the derived algebra.
bool is_heisenberg(const LieAlgebra& g);

struct StructureReport {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  Subspace center;
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
};
StructureReport analyze_structure(const LieAlgebra& g);

LieAlgebra abelian_algebra(std::size_t dim);
/// Basis x_1..x_m, y_1..y_m, z with [x_i, y_i] = z.
LieAlgebra heisenberg_algebra(std::size_t m);
/// Basis e1, e2, e3 with [e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = -e1.
LieAlgebra sl2_algebra();

}  // namespace lieyb

#endif  // LIEYB_STRUCTURE_HPP
