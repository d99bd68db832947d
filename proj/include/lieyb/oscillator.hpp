#ifndef LIEYB_OSCILLATOR_HPP
#define LIEYB_OSCILLATOR_HPP

#include <cstddef>
#include <vector>

#include "lieyb/lie_algebra.hpp"
#include "lieyb/multivector.hpp"

namespace lieyb {

/// Oscillator algebra G_lambda with basis (e-1, e0, e1, ec1, ..., en, ecn):
/// [e-1, e_j] = l_j ec_j, [e-1, ec_j] = -l_j e_j, [e_j, ec_j] = e0.
struct OscillatorAlgebra {
  std::vector<Scalar> lambda;
  LieAlgebra algebra;
  Matrix omega;  ///< omega(x, y) = x^T W y; omega(e_i, ec_j) = delta_ij, zero on e-1, e0
  std::vector<std::size_t> s_indices;

  static constexpr std::size_t em1 = 0;
  static constexpr std::size_t e0 = 1;
  std::size_t n() const { return lambda.size(); }
  std::size_t dim() const { return algebra.dim(); }
  /// i runs from 1 to n.
  static std::size_t e(std::size_t i) { return 2 * i; }
  static std::size_t ec(std::size_t i) { return 2 * i + 1; }
  bool in_s(std::size_t idx) const { return idx >= 2 && idx < dim(); }
};

/// Throws NonPositiveLambda or UnsortedLambda (ties are allowed).
OscillatorAlgebra build_oscillator(std::vector<Scalar> lambda);

/// Strictly increasing, positive, and no l_k = l_i + l_j for i < j < k.
bool is_generic(const std::vector<Scalar>& lambda);

Scalar omega(const OscillatorAlgebra& g, const Vector& x, const Vector& y);

/// w_{r1,r2}(a,b) = (w(r1#a, r2#b) + w(r2#a, r1#b)) / 2
Bivector omega_pair(const OscillatorAlgebra& g, const Bivector& r1, const Bivector& r2);

/// J(e_i) = a_i ec_i, J(ec_i) = -a_i e_i, zero on e-1 and e0.
struct SkewDerivation {
  std::vector<Scalar> a;
  LinearMap map;
};
SkewDerivation j_a(const OscillatorAlgebra& g, const std::vector<Scalar>& a);

/// r restricted to the S x S block.
Bivector project_s(const OscillatorAlgebra& g, const Bivector& r);
bool in_wedge2_s(const OscillatorAlgebra& g, const Bivector& r);
/// Throws RNotInWedge2S.
void require_wedge2_s(const OscillatorAlgebra& g, const Bivector& r);

/// r = coef e0^e-1 + e0^u0 + r0 with u0 in S and r0 in ^2 S.
struct Decomposition {
  Scalar coef;
  Vector u0;
  Bivector r0;
};
/// Throws NotInNormalForm when r(e-1*, s*) != 0 for some s in S.
Decomposition decompose(const OscillatorAlgebra& g, const Bivector& r);
/// Components r(e-1*, s*) over the S basis.
Vector normal_form_residual(const OscillatorAlgebra& g, const Bivector& r);

/// Oscillator basis labels: e-1, e0, e1, ec1, ...
std::vector<std::string> oscillator_labels(std::size_t n);

}  // namespace lieyb

#endif  // LIEYB_OSCILLATOR_HPP
