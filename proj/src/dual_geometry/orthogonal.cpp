#include "lieyb/orthogonal.hpp"

namespace lieyb {

std::optional<InvarianceReport> find_invariance_violation(const LieAlgebra& g, const Matrix& form) {
  const std::size_t d = g.dim();
  if (form.rows() != d || form.cols() != d) throw DimensionMismatch("form size does not match algebra");
  for (std::size_t u = 0; u < d; ++u) {
    const Matrix a = g.ad_basis(u);
    // <[u,v],w> + <v,[u,w]> = (A^T K + K A)_{vw}
    const Matrix m = a.transpose() * form + form * a;
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t w = 0; w < d; ++w)
        if (!m(v, w).is_zero()) return InvarianceReport{u, v, w};
  }
  return std::nullopt;
}

OrthogonalStructure validate_orthogonal(const LieAlgebra& g, const Matrix& form) {
  if (!form.is_symmetric()) throw NotSymmetric("bilinear form is not symmetric");
  if (form.rows() != g.dim()) throw DimensionMismatch("form size does not match algebra");
  if (determinant(form).is_zero()) throw Degenerate("bilinear form is degenerate");
  if (auto bad = find_invariance_violation(g, form)) throw NotAdInvariant(bad->u, bad->v, bad->w);
  return OrthogonalStructure{form};
}

OrthogonalStructure k_lambda(const OscillatorAlgebra& g) {
  Matrix k(g.dim(), g.dim());
  k(OscillatorAlgebra::em1, OscillatorAlgebra::e0) = 1;
  k(OscillatorAlgebra::e0, OscillatorAlgebra::em1) = 1;
  for (std::size_t i = 1; i <= g.n(); ++i) {
    const Scalar inv = Scalar(1) / g.lambda[i - 1];
    k(OscillatorAlgebra::e(i), OscillatorAlgebra::e(i)) = inv;
    k(OscillatorAlgebra::ec(i), OscillatorAlgebra::ec(i)) = inv;
  }
  OrthogonalStructure out = validate_orthogonal(g.algebra, k);
  const Signature sig = signature(k);
  if (sig.negative != 1 || sig.zero != 0) throw StructureMismatch("k_lambda is not Lorentzian");
  return out;
}

DualMetric dual_metric(const OrthogonalStructure& k) { return DualMetric{inverse(k.matrix)}; }

}  // namespace lieyb
