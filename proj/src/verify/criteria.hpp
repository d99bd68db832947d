#ifndef LIEYB_SRC_VERIFY_CRITERIA_HPP
#define LIEYB_SRC_VERIFY_CRITERIA_HPP

#include <functional>
#include <string>

#include "lieyb/verify.hpp"
#include "sampling.hpp"

namespace lieyb::detail {

/// Counts checks and keeps the first few failure descriptions.
class Tally {
 public:
  explicit Tally(CriterionResult& res) : res_(res) {}
  bool check(bool ok, const std::function<std::string()>& what);
  void note(std::string s) { res_.notes.push_back(std::move(s)); }

 private:
  CriterionResult& res_;
};

std::uint64_t sub_seed(std::uint64_t seed, int id);

/// Values p/q with |p| <= n and q in {1, 2}, sorted and deduplicated.
std::vector<Scalar> half_grid(long n);

void criterion_oscillator(const VerifyOptions&, Tally&);
void criterion_schouten(const VerifyOptions&, Tally&);
void criterion_section3(const VerifyOptions&, Tally&);
void criterion_dim4_grid(const VerifyOptions&, Tally&);
void criterion_dim6_families(const VerifyOptions&, Tally&);
void criterion_thm11(const VerifyOptions&, Tally&);
void criterion_thm13(const VerifyOptions&, Tally&);
void criterion_cor12(const VerifyOptions&, Tally&);
void criterion_thm15(const VerifyOptions&, Tally&);
void criterion_example41(const VerifyOptions&, Tally&);
void criterion_example42(const VerifyOptions&, Tally&);
void criterion_cross_formula(const VerifyOptions&, Tally&);

/// Shared draws for the bialgebra criteria: (r, u0, a) on g, roughly half
/// built from the pair families and half unstructured.
BialgebraParams draw_bialgebra_params(Sampler& s, const OscillatorAlgebra& g);
/// A normal-form bivector coef e0^e-1 + e0^u0 + r0, structured or not.
Bivector draw_normal_form(Sampler& s, const OscillatorAlgebra& g);
/// A CYBE solution on a generic oscillator algebra with n >= 2 (or n = 1).
Bivector draw_cybe_solution(Sampler& s, const OscillatorAlgebra& g);

}  // namespace lieyb::detail

#endif
