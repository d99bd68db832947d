#include <doctest.h>

#include "lieyb/catalog.hpp"
#include "lieyb/errors.hpp"
#include "lieyb/structure.hpp"

using namespace lieyb;
using O = OscillatorAlgebra;

TEST_CASE("E/F basis") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const EFBasis b = ef_basis(g, 1, 2);
  CHECK(b.E == b.s + b.sc);
  CHECK(b.Fc == b.r + b.rc);
  CHECK(b.ti == t_bivector(g, 1));
  CHECK_THROWS_AS(ef_basis(g, 2, 1), BadIndices);
  CHECK_THROWS_AS(ef_basis(g, 1, 3), BadIndices);
}

TEST_CASE("omega table and E/F identities") {
  for (const std::vector<Scalar>& lam : std::vector<std::vector<Scalar>>{{1, 2}, {1, 3}, {1, 2, 4}})
    CHECK(verify_section3_table(build_oscillator(lam)).failures() == 0);
}

TEST_CASE("dim 4 families") {
  const OscillatorAlgebra g = build_oscillator({1});
  Vector u(4);
  u[O::e(1)] = 2;
  u[O::ec(1)] = -1;
  CHECK(family_predicate(g, dim4_family(g, FamilyKind::Cybe, {0, 0, u})));
  CHECK(family_predicate(g, dim4_family(g, FamilyKind::Gybe, {Scalar(3, 2), 0, u})));
  CHECK(family_predicate(g, dim4_family(g, FamilyKind::Bialgebra, {1, 5, u})));
  CHECK_THROWS(dim4_family(build_oscillator({1, 2}), FamilyKind::Cybe, {0, 0, Vector(6)}));
}

TEST_CASE("dim 6 families and their constraints") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  Dim6Params p;
  p.e = 3;
  p.ec = 0;
  p.f = 0;
  p.fc = 0;
  p.c = 3;
  p.u = Vector(6);
  p.u[O::e(2)] = 1;
  for (Dim6Case c : all_dim6_cases()) {
    Dim6Params q = p;
    if (c == Dim6Case::BialgebraB) q.a = {1, -1};
    if (c == Dim6Case::BialgebraC) q.a = {1, 1};
    CHECK_MESSAGE(family_predicate(g, dim6_family(g, c, q)), to_string(c));
    CHECK(dim6_case_from_string(to_string(c)) == c);
  }
  p.c = 2;
  CHECK_THROWS_AS(dim6_family(g, Dim6Case::CybeP, p), ConstraintViolated);
  p.a = {1, 2};
  CHECK_THROWS_AS(dim6_family(g, Dim6Case::BialgebraB, p), ConstraintViolated);
  p.u[O::em1] = 1;
  CHECK_THROWS_AS(dim6_family(g, Dim6Case::GybeP, p), ConstraintViolated);
  CHECK(!dim6_case_from_string("nope").has_value());
}

TEST_CASE("case analysis closed form matches cyb1") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const std::vector<Scalar> v{-1, 0, 1};
  for (const auto& e : v)
    for (const auto& f : v)
      for (const auto& ci : v)
        for (const auto& cj : v) {
          const Bivector r = case_analysis_bivector(g, 1, 2, e, 1, f, 0, ci, cj);
          CHECK(condition_cyb1(g, r, 0).is_zero() == predicted_cyb1_zero_alpha(e, 1, f, 0, ci, cj));
        }
}

TEST_CASE("block sums") {
  const OscillatorAlgebra g = build_oscillator({1, 2, 4, 8});
  const Bivector r1 = t_bivector(g, 1) - t_bivector(g, 2);
  const Bivector r2 = t_bivector(g, 3) - t_bivector(g, 4);
  const Bivector r = block_sum(g, r1, {1, 2}, r2, {3, 4});
  CHECK(r == r1 + r2);
  CHECK_THROWS_AS(block_sum(g, r1, {1, 2}, r2, {2, 3}), OverlappingIndices);
  CHECK_THROWS_AS(block_sum(g, r2, {1, 2}, r1, {3, 4}), ConstraintViolated);
}

TEST_CASE("isotropic construction") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const Vector f1 = Vector::unit(6, O::e(1)), f2 = Vector::unit(6, O::e(2));
  const Matrix mu{{0, 1}, {-1, 0}};
  const Bivector r = isotropic_solution(g, {f1, f2}, mu);
  CHECK(r(O::e(1), O::e(2)) == Scalar(1));
  CHECK(condition_cyb1(g, r, 0).is_zero());
  CHECK_THROWS_AS(isotropic_solution(g, {f1, Vector::unit(6, O::ec(1))}, mu), NotIsotropic);
  CHECK_THROWS_AS(isotropic_solution(g, {f1, f1}, mu), DegenerateMu);
  CHECK_THROWS_AS(isotropic_solution(g, {f1, f2}, Matrix{{0, 1}, {1, 0}}), DegenerateMu);
  CHECK_THROWS_AS(isotropic_solution(g, {f1, Vector::unit(6, O::e0)}, mu), ConstraintViolated);
}

TEST_CASE("worked examples") {
  const ExampleBundle b = example_41(1, 2);
  CHECK(cybe_check(b.algebra, b.r));
  CHECK(r_bracket(b.algebra, b.r).algebra.constants() == b.expected);
  const ExampleBundle s = example_42(1, -1, 2);
  CHECK(cybe_check(s.algebra, s.r));
  CHECK(r_bracket(s.algebra, s.r).algebra.constants() == s.expected);
  CHECK(!cybe_check(sl2_algebra(), sl2_bivector(1, 1, 1)));
}
