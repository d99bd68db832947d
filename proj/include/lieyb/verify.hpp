#ifndef LIEYB_VERIFY_HPP
#define LIEYB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lieyb/io.hpp"

namespace lieyb {

inline constexpr std::uint64_t kDefaultSeed = 20100917;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::string golden_dir;  ///< empty selects the bundled data/golden
};

std::string default_golden_dir();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::vector<std::string> notes;     ///< counts and coverage facts
  std::vector<std::string> failures;  ///< first few failing instances
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::string golden_dir;
  std::vector<CriterionResult> criteria;
  std::size_t failed() const;
};

/// Criterion names indexed 1..12.
const std::vector<std::string>& criterion_names();
/// Throws DimensionMismatch for an id outside 1..12.
CriterionResult run_criterion(int id, const VerifyOptions& opt);
/// Runs the listed criteria (all when empty).
VerifyReport verify_paper(const VerifyOptions& opt, const std::vector<int>& only = {});

json report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

/// Golden file for a dual bracket: {input, dual, verdicts}.
struct GoldenCase {
  std::string file;
  SpecDocument input;
  StructureConstants expected;  ///< as transcribed from the displayed table
  std::vector<std::string> dual_labels;
  bool flat = false;
  bool unimodular = false;
  std::string completeness;
};
/// The five bundled golden cases (two for G_(l1,l2), three for sl(2)).
std::vector<GoldenCase> golden_cases();
json golden_to_json(const GoldenCase& c);

}  // namespace lieyb

#endif  // LIEYB_VERIFY_HPP
