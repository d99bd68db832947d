#ifndef LIEYB_BIALGEBRA_HPP
#define LIEYB_BIALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lieyb/lie_algebra.hpp"
#include "lieyb/multivector.hpp"
#include "lieyb/oscillator.hpp"

namespace lieyb {

/// Linear map xi: G -> ^2 G given by its values on the basis.
struct Cocycle {
  std::vector<Bivector> images;

  std::size_t dim() const { return images.size(); }
  Bivector operator()(const Vector& u) const;
  static Cocycle zero(std::size_t dim);
  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.images == b.images; }
};

struct CocycleFailure {
  std::size_t u, v;
  Bivector residual;  ///< xi([u,v]) - ad_u xi(v) + ad_v xi(u)
};
struct CocycleReport {
  std::vector<CocycleFailure> failures;  ///< every failing basis pair u < v, lexicographic
  bool ok() const { return failures.empty(); }
};
CocycleReport cocycle_check(const LieAlgebra& g, const Cocycle& xi);

/// Basis of the space of 1-cocycles with values in ^2 G.
std::vector<Cocycle> solve_cocycle_space(const LieAlgebra& g);

/// u -> ad_u r
Cocycle coboundary(const LieAlgebra& g, const Bivector& r);

enum class DualSource { Cocycle, RMatrix, Explicit };

struct DualAlgebra {
  LieAlgebra algebra;  ///< on the dual basis b_i*
  DualSource source = DualSource::Cocycle;
};

/// [b_i*, b_j*](b_k) = xi(b_k)(b_i*, b_j*), not validated.
StructureConstants dual_constants(const Cocycle& xi);
/// [a,b]_r = ad*_{r#b} a - ad*_{r#a} b, not validated.
StructureConstants r_bracket_constants(const LieAlgebra& g, const Bivector& r);

/// Throws JacobiFailure with the first violating triple.
DualAlgebra dual_bracket_from_cocycle(const LieAlgebra& g, const Cocycle& xi);
DualAlgebra r_bracket(const LieAlgebra& g, const Bivector& r);

/// Labels b* for the dual basis.
std::vector<std::string> dual_labels(const LieAlgebra& g);

bool cybe_check(const LieAlgebra& g, const Bivector& r);

struct GybeReport {
  Trivector schouten;                ///< [r,r]
  std::optional<std::size_t> first;  ///< first basis u with ad_u [r,r] != 0
  Trivector residual;                ///< ad_u [r,r] for that u
  bool ok() const { return !first.has_value(); }
};
GybeReport gybe_report(const LieAlgebra& g, const Bivector& r);
bool gybe_check(const LieAlgebra& g, const Bivector& r);

/// Bialgebra data on a generic oscillator algebra: r in ^2 S, u0 in S, J = J_a.
struct BialgebraParams {
  Bivector r;
  Vector u0;
  std::vector<Scalar> a;
  friend bool operator==(const BialgebraParams& x, const BialgebraParams& y) {
    return x.r == y.r && x.u0 == y.u0 && x.a == y.a;
  }
};

/// w_{r, ad_{e-1} r} - (J_a o ad_{e-1}) r. Throws RNotInWedge2S.
Bivector condition_boucetta(const OscillatorAlgebra& g, const Bivector& r, const std::vector<Scalar>& a);
/// w_{r0, ad r0} + alpha (ad o ad) r0, ad = ad_{e-1}. Throws RNotInWedge2S.
Bivector condition_gyb1(const OscillatorAlgebra& g, const Bivector& r0, const Scalar& alpha);
/// w_{r0, r0} + alpha ad_{e-1} r0. Throws RNotInWedge2S.
Bivector condition_cyb1(const OscillatorAlgebra& g, const Bivector& r0, const Scalar& alpha);

/// Coefficient in front of e0 ^ (J + ad_u0)(u), fixed by calibrate_thm11_normalization.
inline const Scalar kThm11Factor{2};

/// xi(u) = ad_u r + factor * e0 ^ ((J_a + ad_u0) u)
Cocycle thm11_cocycle_scaled(const OscillatorAlgebra& g, const BialgebraParams& p, const Scalar& factor);
Cocycle thm11_cocycle(const OscillatorAlgebra& g, const BialgebraParams& p);

/// Explicit dual bracket:
///   [e0*, a] = 2 J* a - 2 (ad*_{e-1} a)(u0) e-1* + i_{r# a} w
///   [a, b]   = (ad_{e-1} r)(a, b) e-1*
/// with e-1* central. Throws ConditionViolated if the defining condition fails.
DualAlgebra bracketmain_dual(const OscillatorAlgebra& g, const BialgebraParams& p);
/// Same constants without validating the condition or Jacobi.
StructureConstants bracketmain_constants(const OscillatorAlgebra& g, const BialgebraParams& p);

/// Tries the factors 1 and 2 against bracketmain on probe parameters and
/// returns the one for which the cocycle and explicit brackets agree.
Scalar calibrate_thm11_normalization(const OscillatorAlgebra& g);

/// Recovers (r, u0, a) from a bialgebra cocycle. Throws NotGeneric or NotABialgebra.
BialgebraParams thm11_extract(const OscillatorAlgebra& g, const Cocycle& xi);

/// Parameters whose thm11 cocycle is the coboundary of a GYBE solution
/// r = coef e0^e-1 + e0^u0 + r0: (r0, -u0/2, -(coef/2) lambda).
BialgebraParams params_from_coboundary(const OscillatorAlgebra& g, const Bivector& r);

enum class YbeCase { Gybe, Cybe };

struct NormalForm {
  YbeCase kind = YbeCase::Gybe;
  Scalar coef;   ///< raw e0^e-1 coefficient
  Scalar alpha;  ///< coef / 2 for GYBE, coef for CYBE
  Vector u0;
  Bivector r0;
};
/// Throws NotAYbeSolution, NotInNormalForm, or ConditionViolated.
NormalForm thm13_normal_form(const OscillatorAlgebra& g, const Bivector& r);

struct Corollary12Report {
  std::size_t p = 0;
  std::size_t heisenberg_dim = 0;
  bool unimodular = false;
  bool center_contains_em1star = false;
  bool brackets_into_line = false;
  std::size_t form_rank = 0;
};
/// Throws StructureMismatch if any cross-check fails.
Corollary12Report corollary12_analyze(const OscillatorAlgebra& g, const BialgebraParams& p);

}  // namespace lieyb

#endif  // LIEYB_BIALGEBRA_HPP
