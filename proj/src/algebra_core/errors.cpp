#include "lieyb/errors.hpp"

namespace lieyb {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + ")";
}

}  // namespace

AntisymmetryViolation::AntisymmetryViolation(std::size_t i_, std::size_t j_)
    : Error("antisymmetry violated at (" + std::to_string(i_) + ", " + std::to_string(j_) + ")"),
      i(i_),
      j(j_) {}

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_,
                                 std::vector<std::string> residual_)
    : Error("Jacobi identity violated at (" + std::to_string(i_) + ", " + std::to_string(j_) + ", " +
            std::to_string(k_) + "), residual " + join(residual_)),
      i(i_),
      j(j_),
      k(k_),
      residual(std::move(residual_)) {}

NotInNormalForm::NotInNormalForm(std::string what, std::vector<std::string> residual_)
    : Error(std::move(what) + " " + join(residual_)), residual(std::move(residual_)) {}

NotAdInvariant::NotAdInvariant(std::size_t u_, std::size_t v_, std::size_t w_)
    : Error("form is not ad-invariant at basis triple (" + std::to_string(u_) + ", " + std::to_string(v_) +
            ", " + std::to_string(w_) + ")"),
      u(u_),
      v(v_),
      w(w_) {}

}  // namespace lieyb
