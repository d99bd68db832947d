#include <doctest.h>

#include <random>

#include "lieyb/errors.hpp"
#include "lieyb/lie_algebra.hpp"
#include "lieyb/multivector.hpp"
#include "lieyb/oracles.hpp"
#include "lieyb/scalar.hpp"
#include "lieyb/structure.hpp"

using namespace lieyb;

TEST_CASE("scalar text form") {
  CHECK(Scalar::parse("-6/4").str() == "-3/2");
  CHECK(Scalar::parse("5").str() == "5");
  CHECK(Scalar::parse("4/2") == Scalar(2));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK((Scalar(1, 3) + Scalar(1, 6)) == Scalar(1, 2));
}

TEST_CASE("linear algebra") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(determinant(m) == Scalar(-2));
  CHECK(inverse(m) * m == Matrix::identity(2));
  CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  const auto k = kernel_basis(Matrix{{1, 1, 0}, {0, 0, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  const Signature s = signature(Matrix{{0, 1}, {1, 0}});
  CHECK(s.positive == 1);
  CHECK(s.negative == 1);
}

TEST_CASE("validate rejects bad constants") {
  StructureConstants c = zero_constants(3);
  c[0][1][2] = 1;
  CHECK_THROWS_AS(LieAlgebra::validate(c), AntisymmetryViolation);
  c[1][0][2] = -1;
  CHECK_NOTHROW(LieAlgebra::validate(c));
  c[0][2][0] = 1;
  c[2][0][0] = -1;
  try {
    LieAlgebra::validate(c);
    FAIL("Jacobi violation not reported");
  } catch (const JacobiViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }
  CHECK_THROWS_AS(LieAlgebra::validate(zero_constants(2), {"a"}), DimensionMismatch);
}

TEST_CASE("structure of standard algebras") {
  const LieAlgebra sl2 = sl2_algebra();
  CHECK(!is_solvable(sl2));
  CHECK(trace_form_unimodular(sl2));
  CHECK(center(sl2).dim() == 0);
  const LieAlgebra h = heisenberg_algebra(2);
  CHECK(h.dim() == 5);
  CHECK(is_heisenberg(h));
  CHECK(is_nilpotent(h));
  CHECK(!is_heisenberg(abelian_algebra(3)));
  CHECK(!is_heisenberg(direct_sum(heisenberg_algebra(1), abelian_algebra(2))));
}

TEST_CASE("bivector conventions") {
  const Bivector r = Bivector::basis(3, 0, 1);
  CHECK(r(0, 1) == Scalar(1));
  CHECK(r(1, 0) == Scalar(-1));
  // r#(b_0*) = b_1
  CHECK(r.sharp(Covector::unit(3, 0)) == Vector::unit(3, 1));
  CHECK_THROWS_AS(Bivector(Matrix{{0, 1}, {1, 0}}), DimensionMismatch);
}

TEST_CASE("schouten bracket agrees with the decomposable expansion") {
  std::mt19937_64 eng(11);
  std::uniform_int_distribution<long> d(-2, 2);
  for (const LieAlgebra& g : {sl2_algebra(), heisenberg_algebra(2), direct_sum(sl2_algebra(), heisenberg_algebra(1))}) {
    for (int n = 0; n < 10; ++n) {
      Bivector r(g.dim());
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) r.set(i, j, d(eng));
      const Trivector s = schouten_self(g, r);
      CHECK(s.is_antisymmetric());
      CHECK(s == schouten_oracle(g, r));
      // polarization recovers the self bracket
      CHECK(schouten_pair(g, r, r) == s);
    }
  }
}

TEST_CASE("schouten of a decomposable on sl2") {
  // [e1^e2, e1^e2] = 2 [e1,e2]^e1^e2 = 0 since [e1,e2] = 2 e2
  const LieAlgebra g = sl2_algebra();
  CHECK(schouten_self(g, Bivector::basis(3, 0, 1)).is_zero());
  CHECK(!schouten_self(g, Bivector::basis(3, 1, 2)).is_zero());
}
