#include <doctest.h>

#include "lieyb/errors.hpp"
#include "lieyb/orthogonal.hpp"
#include "lieyb/oscillator.hpp"
#include "lieyb/structure.hpp"

using namespace lieyb;
using O = OscillatorAlgebra;

TEST_CASE("oscillator brackets") {
  const OscillatorAlgebra g = build_oscillator({1, 3});
  CHECK(g.dim() == 6);
  CHECK(g.algebra.labels() == std::vector<std::string>{"e-1", "e0", "e1", "ec1", "e2", "ec2"});
  CHECK(g.algebra.bracket(g.algebra.basis(O::em1), g.algebra.basis(O::e(2))) == Scalar(3) * g.algebra.basis(O::ec(2)));
  CHECK(g.algebra.bracket(g.algebra.basis(O::em1), g.algebra.basis(O::ec(1))) == -g.algebra.basis(O::e(1)));
  CHECK(g.algebra.bracket(g.algebra.basis(O::e(1)), g.algebra.basis(O::ec(1))) == g.algebra.basis(O::e0));
  CHECK(g.algebra.bracket(g.algebra.basis(O::e(1)), g.algebra.basis(O::ec(2))).is_zero());
  CHECK(is_solvable(g.algebra));
  CHECK(trace_form_unimodular(g.algebra));
  CHECK(center(g.algebra).dim() == 1);
}

TEST_CASE("bracket on S is omega times e0") {
  const OscillatorAlgebra g = build_oscillator({1, 2, 4});
  for (std::size_t i : g.s_indices)
    for (std::size_t j : g.s_indices) {
      const Vector x = g.algebra.basis(i), y = g.algebra.basis(j);
      CHECK(g.algebra.bracket(x, y) == omega(g, x, y) * g.algebra.basis(O::e0));
    }
}

TEST_CASE("lambda validation") {
  CHECK_THROWS_AS(build_oscillator({0}), NonPositiveLambda);
  CHECK_THROWS_AS(build_oscillator({Scalar(-1, 2)}), NonPositiveLambda);
  CHECK_THROWS_AS(build_oscillator({2, 1}), UnsortedLambda);
  CHECK_NOTHROW(build_oscillator({1, 1}));
  CHECK(!is_generic({1, 1}));
  CHECK(!is_generic({1, 2, 3}));
  CHECK(is_generic({1, 2, 4}));
  CHECK(is_generic({1}));
}

TEST_CASE("k_lambda is an invariant Lorentzian form") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const OrthogonalStructure k = k_lambda(g);
  CHECK(k.matrix(O::em1, O::e0) == Scalar(1));
  CHECK(k.matrix(O::e(2), O::e(2)) == Scalar(1, 2));
  CHECK(!find_invariance_violation(g.algebra, k.matrix).has_value());
  const Signature s = signature(k.matrix);
  CHECK(s.negative == 1);
  CHECK(s.positive == 5);
  Matrix bad = k.matrix;
  bad(O::e(1), O::e(1)) = 2;
  CHECK_THROWS_AS(validate_orthogonal(g.algebra, bad), NotAdInvariant);
  bad = k.matrix;
  bad(O::e(1), O::ec(1)) = 1;
  CHECK_THROWS_AS(validate_orthogonal(g.algebra, bad), NotSymmetric);
}

TEST_CASE("J_a is a skew derivation") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const SkewDerivation j = j_a(g, {3, Scalar(-1, 2)});
  CHECK(j.map.is_derivation(g.algebra));
  CHECK(j.map.apply(g.algebra.basis(O::e(1))) == Scalar(3) * g.algebra.basis(O::ec(1)));
  CHECK_THROWS_AS(j_a(g, {1}), DimensionMismatch);
}

TEST_CASE("normal form decomposition") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  Bivector r(6);
  r.set(O::e0, O::em1, 3);
  r.set(O::e0, O::e(2), 1);
  r.set(O::e(1), O::ec(2), 5);
  const Decomposition d = decompose(g, r);
  CHECK(d.coef == Scalar(3));
  CHECK(d.u0[O::e(2)] == Scalar(1));
  CHECK(d.r0(O::e(1), O::ec(2)) == Scalar(5));
  CHECK(in_wedge2_s(g, d.r0));
  r.set(O::em1, O::ec(1), 1);
  CHECK_THROWS_AS(decompose(g, r), NotInNormalForm);
  CHECK(normal_form_residual(g, r)[1] == Scalar(1));
  CHECK_THROWS_AS(require_wedge2_s(g, r), RNotInWedge2S);
}
