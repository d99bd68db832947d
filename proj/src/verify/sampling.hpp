#ifndef LIEYB_SRC_VERIFY_SAMPLING_HPP
#define LIEYB_SRC_VERIFY_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "lieyb/catalog.hpp"

namespace lieyb::detail {

/// Seeded draws of small rationals p/q with |p| <= 3, q in {1,2,3}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  Scalar scalar();
  Scalar nonzero();
  /// p/q with |p| <= 2, q in {1,2}
  Scalar small();
  bool coin(double p = 0.5);
  std::size_t index(std::size_t n);

  /// Each entry drawn with probability density, else zero.
  Bivector bivector(std::size_t dim, double density = 0.6);
  Bivector wedge2_s(const OscillatorAlgebra& g, double density = 0.5);
  Vector in_s(const OscillatorAlgebra& g, double density = 0.6);
  Vector vector(std::size_t dim, double density = 0.6);
  std::vector<Scalar> scalars(std::size_t n);

  /// p + c_i t_i + c_j t_j on a random pair with random structure.
  Bivector pair_bivector(const OscillatorAlgebra& g, std::size_t i, std::size_t j);
  /// A rational point on c^2 + f^2 + fc^2 = e^2 + ec^2.
  Dim6Params cyb_point();

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lieyb::detail

#endif
