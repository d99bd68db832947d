#include <doctest.h>

#include "lieyb/catalog.hpp"
#include "lieyb/errors.hpp"
#include "lieyb/geometry.hpp"
#include "lieyb/structure.hpp"

using namespace lieyb;
using O = OscillatorAlgebra;

TEST_CASE("completeness verdicts") {
  CHECK(completeness_verdict(true, true) == Completeness::Complete);
  CHECK(completeness_verdict(true, false) == Completeness::Incomplete);
  CHECK(completeness_verdict(false, true) == Completeness::NotDetermined);
  CHECK(to_string(Completeness::Complete) == "complete");
}

TEST_CASE("zero bivector gives a flat complete abelian dual") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const DualGeometryReport r = geometry_report(g.algebra, k_lambda(g), Bivector(6));
  CHECK(r.flat);
  CHECK(r.unimodular);
  CHECK(r.completeness == Completeness::Complete);
  CHECK(is_abelian(r.dual.algebra, Subspace::whole(6)));
}

TEST_CASE("t1 on G_(1) is locally symmetric but not flat") {
  const OscillatorAlgebra g = build_oscillator({1});
  const DualGeometryReport r = geometry_report(g.algebra, k_lambda(g), t_bivector(g, 1));
  CHECK(!r.flat);
  CHECK(r.locally_symmetric);
  CHECK(r.koszul_agrees);
  CHECK(r.torsion_free);
  CHECK(r.metric_compatible);
}

TEST_CASE("sl2 solution (1,0,0)") {
  const LieAlgebra g = sl2_algebra();
  const DualGeometryReport r = geometry_report(g, validate_orthogonal(g, sl2_trace_form()), sl2_bivector(1, 0, 0));
  CHECK(r.flat);
  CHECK(!r.unimodular);
  CHECK(r.completeness == Completeness::Incomplete);
  CHECK(r.derived_dim == 2);
  CHECK(r.derived_abelian);
}

TEST_CASE("non-solutions are refused") {
  const OscillatorAlgebra g = build_oscillator({1});
  CHECK_THROWS_AS(geometry_report(g.algebra, k_lambda(g), Bivector::basis(4, O::em1, O::e(1))), NotAYbeSolution);
}

TEST_CASE("connection matches the Koszul formula on a CYBE solution") {
  const ExampleBundle b = example_41(1, 2);
  const ConnectionTable c = connection(b.algebra, b.r);
  const LieAlgebra dual = r_bracket(b.algebra, b.r).algebra;
  CHECK(c == koszul_connection(dual, dual_metric(b.k)));
  CHECK(is_torsion_free(c, dual));
  const CurvatureTensor curv = curvature(b.algebra, b.r, dual, c);
  CHECK(curv.flat());
  CHECK(curv.rmat == curvature_from_connection(dual, c).rmat);
}
