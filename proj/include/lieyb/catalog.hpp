#ifndef LIEYB_CATALOG_HPP
#define LIEYB_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieyb/bialgebra.hpp"
#include "lieyb/geometry.hpp"
#include "lieyb/orthogonal.hpp"

namespace lieyb {

/// Bivectors attached to a pair 1 <= i < j <= n:
/// r = e_i^e_j, rc = ec_i^ec_j, s = e_i^ec_j, sc = ec_i^e_j, t_k = e_k^ec_k,
/// E = s + sc, Ec = -r + rc, F = -s + sc, Fc = r + rc.
struct EFBasis {
  Bivector E, Ec, F, Fc, ti, tj, r, rc, s, sc;
};
/// Throws BadIndices.
EFBasis ef_basis(const OscillatorAlgebra& g, std::size_t i, std::size_t j);
Bivector t_bivector(const OscillatorAlgebra& g, std::size_t i);

enum class FamilyKind { Bialgebra, Gybe, Cybe };
std::string to_string(FamilyKind k);

struct FamilyRealization {
  FamilyKind kind = FamilyKind::Cybe;
  std::optional<Cocycle> xi;
  std::optional<Bivector> r;
};

/// Runs the predicate the kind claims: dual Jacobi for a bialgebra cocycle,
/// gybe_check or cybe_check for a bivector.
bool family_predicate(const OscillatorAlgebra& g, const FamilyRealization& f);

/// n = 1 families:
///   Bialgebra: xi(u) = alpha ad_u t1 + e0 ^ (J_a + ad_u)(u), u in S
///   Gybe:      r = e0 ^ u + alpha t1
///   Cybe:      r = e0 ^ u
struct Dim4Params {
  Scalar alpha;
  Scalar a;
  Vector u;
};
FamilyRealization dim4_family(const OscillatorAlgebra& g, FamilyKind kind, const Dim4Params& p);

/// n = 2 families. p = e E + ec Ec + f F + fc Fc.
///   BialgebraA: r = c1 t1 + c2 t2, any a
///   BialgebraB: r = e E + ec Ec + c (t1 - t2), a = (s, -s)
///   BialgebraC: r = f F + fc Fc + c (t1 - t2), a = (s, s)
///   BialgebraD: r = p + c (t1 - t2), a = 0
///   (bialgebra cocycles are xi(u) = ad_u r + e0 ^ (J_a + ad_u)(u), u in S)
///   GybeT: e0 ^ u + c1 t1 + c2 t2
///   GybeP: e0 ^ u + p + c (t1 - t2), u in S
///   CybeU: e0 ^ u
///   CybeP: e0 ^ u + p + c (t1 - t2), u in S, c^2 = e^2 + ec^2 - f^2 - fc^2
/// Each case reads only the fields it names. Throws ConstraintViolated.
enum class Dim6Case { BialgebraA, BialgebraB, BialgebraC, BialgebraD, GybeT, GybeP, CybeU, CybeP };
std::string to_string(Dim6Case c);
std::optional<Dim6Case> dim6_case_from_string(const std::string& s);
FamilyKind kind_of(Dim6Case c);
const std::vector<Dim6Case>& all_dim6_cases();

struct Dim6Params {
  Scalar e, ec, f, fc;
  Scalar c, c1, c2;
  std::vector<Scalar> a{Scalar(0), Scalar(0)};
  Vector u;
};
FamilyRealization dim6_family(const OscillatorAlgebra& g, Dim6Case which, const Dim6Params& p);

/// p + c_i t_i + c_j t_j on the pair (i, j).
Bivector case_analysis_bivector(const OscillatorAlgebra& g, std::size_t i, std::size_t j, const Scalar& e,
                                const Scalar& ec, const Scalar& f, const Scalar& fc, const Scalar& ci,
                                const Scalar& cj);

/// Closed forms of the pair case analysis (lambda_i < lambda_j).
bool predicted_cyb1_zero_alpha(const Scalar& e, const Scalar& ec, const Scalar& f, const Scalar& fc,
                               const Scalar& ci, const Scalar& cj);
bool predicted_gyb1(const Scalar& e, const Scalar& ec, const Scalar& f, const Scalar& fc, const Scalar& ci,
                    const Scalar& cj, const Scalar& alpha);
bool predicted_boucetta(const Scalar& e, const Scalar& ec, const Scalar& f, const Scalar& fc, const Scalar& ci,
                        const Scalar& cj, const Scalar& ai, const Scalar& aj);

/// r1 + r2 for blocks on disjoint index pairs. Throws OverlappingIndices,
/// or ConstraintViolated when a summand leaves its block.
Bivector block_sum(const OscillatorAlgebra& g, const Bivector& r1, std::pair<std::size_t, std::size_t> p1,
                   const Bivector& r2, std::pair<std::size_t, std::size_t> p2);

/// r0 = sum_{a<b} mu_ab f_a ^ f_b for an w-isotropic F = span(f_a) in S.
/// Throws NotIsotropic or DegenerateMu.
Bivector isotropic_solution(const OscillatorAlgebra& g, const std::vector<Vector>& f, const Matrix& mu);

struct ExpectedVerdicts {
  bool flat = false;
  bool unimodular = false;
  Completeness completeness = Completeness::NotDetermined;
};

struct ExampleBundle {
  LieAlgebra algebra;
  std::optional<OscillatorAlgebra> oscillator;
  Bivector r;
  OrthogonalStructure k;
  StructureConstants expected;  ///< dual brackets as displayed in the source tables
  ExpectedVerdicts verdicts;
};

/// Six-dimensional flat complete example on G_(l1, l2).
ExampleBundle example_41(const Scalar& l1, const Scalar& l2);
/// The 5-dimensional ideal span{e-1*, e1*, e2*, ec1*, ec2*} of the example_41 dual.
Subspace example_41_ideal(const OscillatorAlgebra& g);

/// sl(2) with r given by (a, b, c); expected brackets follow the displayed
/// table, which presumes 4ab + c^2 = 0.
ExampleBundle example_42(const Scalar& a, const Scalar& b, const Scalar& c);
Bivector sl2_bivector(const Scalar& a, const Scalar& b, const Scalar& c);
Matrix sl2_trace_form();

struct NamedCheck {
  std::string name;
  bool ok = false;
};
struct Section3Report {
  std::vector<NamedCheck> checks;
  std::size_t failures() const;
};
/// The w-pairing table, E/F orthogonality, the J^dag / ad^dag eigen-relations
/// and the three case-analysis expansions, for every pair i < j.
Section3Report verify_section3_table(const OscillatorAlgebra& g);

}  // namespace lieyb

#endif  // LIEYB_CATALOG_HPP
