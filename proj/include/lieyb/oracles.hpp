#ifndef LIEYB_ORACLES_HPP
#define LIEYB_ORACLES_HPP

#include "lieyb/lie_algebra.hpp"
#include "lieyb/multivector.hpp"

namespace lieyb {

/// Schouten bracket [r,r] computed by expanding r into decomposables and
/// applying [x^y, z^w] = [x,z]^y^w - [x,w]^y^z - [y,z]^x^w + [y,w]^x^z.
Trivector schouten_oracle(const LieAlgebra& g, const Bivector& r);

/// g1 + g2 with the bases concatenated and [g1, g2] = 0.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

}  // namespace lieyb

#endif  // LIEYB_ORACLES_HPP
