#include "lieyb/oscillator.hpp"

namespace lieyb {

std::vector<std::string> oscillator_labels(std::size_t n) {
  std::vector<std::string> labels{"e-1", "e0"};
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back("e" + std::to_string(i));
    labels.push_back("ec" + std::to_string(i));
  }
  return labels;
}

OscillatorAlgebra build_oscillator(std::vector<Scalar> lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].sign() <= 0) throw NonPositiveLambda("lambda_" + std::to_string(i + 1) + " = " + lambda[i].str() + " is not positive");
    if (i > 0 && lambda[i] < lambda[i - 1]) throw UnsortedLambda("lambda must be non-decreasing");
  }
  using O = OscillatorAlgebra;
  const std::size_t n = lambda.size();
  const std::size_t d = 2 * n + 2;
  StructureConstants c = zero_constants(d);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
  };
  for (std::size_t j = 1; j <= n; ++j) {
    put(O::em1, O::e(j), O::ec(j), lambda[j - 1]);
    put(O::em1, O::ec(j), O::e(j), -lambda[j - 1]);
    put(O::e(j), O::ec(j), O::e0, 1);
  }
  OscillatorAlgebra g;
  g.algebra = LieAlgebra::validate(std::move(c), oscillator_labels(n));
  g.lambda = std::move(lambda);
  g.omega = Matrix(d, d);
  for (std::size_t j = 1; j <= n; ++j) {
    g.omega(O::e(j), O::ec(j)) = 1;
    g.omega(O::ec(j), O::e(j)) = -1;
  }
  for (std::size_t k = 2; k < d; ++k) g.s_indices.push_back(k);
  return g;
}

bool is_generic(const std::vector<Scalar>& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].sign() <= 0) return false;
    if (i > 0 && !(lambda[i - 1] < lambda[i])) return false;
  }
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (lambda[k] == lambda[i] + lambda[j]) return false;
  return true;
}

Scalar omega(const OscillatorAlgebra& g, const Vector& x, const Vector& y) {
  Scalar s;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!g.omega(i, j).is_zero()) s.add_product(x[i] * g.omega(i, j), y[j]);
  }
  return s;
}

Bivector omega_pair(const OscillatorAlgebra& g, const Bivector& r1, const Bivector& r2) {
  if (r1.dim() != g.dim() || r2.dim() != g.dim()) throw DimensionMismatch("omega_pair operand dimension");
  // w(R1^T a, R2^T b) = -a^T R1 W R2 b
  Matrix m = r1.matrix() * g.omega * r2.matrix();
  m += r2.matrix() * g.omega * r1.matrix();
  m *= Scalar(-1, 2);
  return Bivector(std::move(m));
}

SkewDerivation j_a(const OscillatorAlgebra& g, const std::vector<Scalar>& a) {
  if (a.size() != g.n()) throw DimensionMismatch("J_a needs one parameter per pair");
  Matrix m(g.dim(), g.dim());
  for (std::size_t i = 1; i <= g.n(); ++i) {
    m(OscillatorAlgebra::ec(i), OscillatorAlgebra::e(i)) = a[i - 1];
    m(OscillatorAlgebra::e(i), OscillatorAlgebra::ec(i)) = -a[i - 1];
  }
  return SkewDerivation{a, LinearMap(std::move(m))};
}

Bivector project_s(const OscillatorAlgebra& g, const Bivector& r) {
  Bivector out(g.dim());
  for (std::size_t i = 2; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!r(i, j).is_zero()) out.set(i, j, r(i, j));
  return out;
}

bool in_wedge2_s(const OscillatorAlgebra& g, const Bivector& r) {
  if (r.dim() != g.dim()) throw DimensionMismatch("bivector dimension");
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (!r(OscillatorAlgebra::em1, k).is_zero() || !r(OscillatorAlgebra::e0, k).is_zero()) return false;
  return true;
}

void require_wedge2_s(const OscillatorAlgebra& g, const Bivector& r) {
  if (!in_wedge2_s(g, r)) throw RNotInWedge2S("bivector has components outside ^2 S");
}

Vector normal_form_residual(const OscillatorAlgebra& g, const Bivector& r) {
  Vector res(2 * g.n());
  for (std::size_t s = 2; s < g.dim(); ++s) res[s - 2] = r(OscillatorAlgebra::em1, s);
  return res;
}

Decomposition decompose(const OscillatorAlgebra& g, const Bivector& r) {
  if (r.dim() != g.dim()) throw DimensionMismatch("bivector dimension");
  const Vector res = normal_form_residual(g, r);
  if (!res.is_zero()) {
    std::vector<std::string> text;
    for (const auto& x : res.components()) text.push_back(x.str());
    throw NotInNormalForm("bivector has e-1 ^ S components", std::move(text));
  }
  Decomposition out{r(OscillatorAlgebra::e0, OscillatorAlgebra::em1), Vector(g.dim()), project_s(g, r)};
  for (std::size_t s = 2; s < g.dim(); ++s) out.u0[s] = r(OscillatorAlgebra::e0, s);
  return out;
}

}  // namespace lieyb
