#ifndef LIEYB_ORTHOGONAL_HPP
#define LIEYB_ORTHOGONAL_HPP

#include <optional>

#include "lieyb/lie_algebra.hpp"
#include "lieyb/oscillator.hpp"

namespace lieyb {

/// Symmetric, nondegenerate, ad-invariant bilinear form <,> on the algebra.
struct OrthogonalStructure {
  Matrix matrix;
};

struct InvarianceReport {
  std::size_t u, v, w;
};
/// First basis triple with <[u,v],w> + <v,[u,w]> != 0.
std::optional<InvarianceReport> find_invariance_violation(const LieAlgebra& g, const Matrix& form);

/// Throws NotSymmetric, Degenerate or NotAdInvariant.
OrthogonalStructure validate_orthogonal(const LieAlgebra& g, const Matrix& form);

/// k(x,x) = 2 x_{-1} x_0 + sum (x_i^2 + xc_i^2) / l_i, validated and checked Lorentzian.
OrthogonalStructure k_lambda(const OscillatorAlgebra& g);

/// <,>* on the dual: the inverse matrix.
struct DualMetric {
  Matrix matrix;
};
DualMetric dual_metric(const OrthogonalStructure& k);

}  // namespace lieyb

#endif  // LIEYB_ORTHOGONAL_HPP
