#include "lieyb/catalog.hpp"

namespace lieyb {

namespace {

using O = OscillatorAlgebra;

void put(StructureConstants& c, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  c[i][j][k] = v;
  c[j][i][k] = -v;
}

}  // namespace

ExampleBundle example_41(const Scalar& l1, const Scalar& l2) {
  OscillatorAlgebra g = build_oscillator({l1, l2});
  const std::size_t d = g.dim();
  Bivector r(d);
  r.set(O::e0, O::e(1), 1);
  r.set(O::e(1), O::ec(2), 1);
  r.set(O::ec(1), O::e(2), 1);
  r.set(O::e(1), O::ec(1), 1);
  r.set(O::e(2), O::ec(2), -1);

  StructureConstants c = zero_constants(d);
  const std::size_t m1 = O::em1, z = O::e0, e1 = O::e(1), c1 = O::ec(1), e2 = O::e(2), c2 = O::ec(2);
  put(c, z, e1, e1, -1);
  put(c, z, e1, e2, -1);
  put(c, z, e2, e1, 1);
  put(c, z, e2, e2, 1);
  put(c, z, c1, m1, l1);
  put(c, z, c1, c1, -1);
  put(c, z, c1, c2, 1);
  put(c, z, c2, c1, -1);
  put(c, z, c2, c2, 1);
  put(c, e1, e2, m1, -(l1 + l2));
  put(c, c1, c2, m1, l1 + l2);

  OrthogonalStructure k = k_lambda(g);
  LieAlgebra alg = g.algebra;
  return ExampleBundle{std::move(alg), std::move(g), std::move(r), std::move(k), std::move(c),
                       ExpectedVerdicts{true, true, Completeness::Complete}};
}

Subspace example_41_ideal(const OscillatorAlgebra& g) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (k != O::e0) vs.push_back(g.algebra.basis(k));
  return Subspace::span(g.dim(), vs);
}

Bivector sl2_bivector(const Scalar& a, const Scalar& b, const Scalar& c) {
  // r(e_j*) is column j of the displayed matrix [[0,a,b],[-a,0,c],[-b,-c,0]]
  Bivector r(3);
  r.set(0, 1, -a);
  r.set(0, 2, -b);
  r.set(1, 2, -c);
  return r;
}

Matrix sl2_trace_form() {
  Matrix k(3, 3);
  k(0, 0) = 2;
  k(1, 2) = -1;
  k(2, 1) = -1;
  return k;
}

ExampleBundle example_42(const Scalar& a, const Scalar& b, const Scalar& c) {
  LieAlgebra g = sl2_algebra();
  Bivector r = sl2_bivector(a, b, c);
  StructureConstants e = zero_constants(3);
  put(e, 0, 1, 0, Scalar(-2) * a);
  put(e, 0, 1, 1, -c);
  put(e, 0, 2, 0, Scalar(2) * b);
  put(e, 0, 2, 2, -c);
  put(e, 1, 2, 1, Scalar(2) * b);
  put(e, 1, 2, 2, Scalar(2) * a);
  OrthogonalStructure k = validate_orthogonal(g, sl2_trace_form());
  ExpectedVerdicts v;
  v.flat = (Scalar(4) * a * b + c * c).is_zero();
  v.unimodular = a.is_zero() && b.is_zero() && c.is_zero();
  v.completeness = completeness_verdict(v.flat, v.unimodular);
  return ExampleBundle{std::move(g), std::nullopt, std::move(r), std::move(k), std::move(e), v};
}

}  // namespace lieyb
