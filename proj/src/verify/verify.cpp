#include "lieyb/verify.hpp"

#include <sstream>

#include "criteria.hpp"
#include "lieyb/catalog.hpp"

#ifndef LIEYB_DATA_DIR
#define LIEYB_DATA_DIR "data"
#endif

namespace lieyb {

std::string default_golden_dir() { return std::string(LIEYB_DATA_DIR) + "/golden"; }

std::size_t VerifyReport::failed() const {
  std::size_t n = 0;
  for (const auto& c : criteria)
    if (!c.passed) ++n;
  return n;
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{
      "",
      "oscillator validity",
      "Schouten oracle",
      "omega table and E/F relations",
      "dim 4 grid completeness",
      "dim 6 families and case analysis",
      "bialgebra characterization",
      "Yang-Baxter normal forms",
      "dual structure of bialgebras",
      "dual geometry curvature",
      "G_(l1,l2) flat complete example",
      "sl(2) example",
      "cross-formula consistency",
  };
  return names;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  using Fn = void (*)(const VerifyOptions&, detail::Tally&);
  static const Fn table[] = {
      nullptr,
      detail::criterion_oscillator,
      detail::criterion_schouten,
      detail::criterion_section3,
      detail::criterion_dim4_grid,
      detail::criterion_dim6_families,
      detail::criterion_thm11,
      detail::criterion_thm13,
      detail::criterion_cor12,
      detail::criterion_thm15,
      detail::criterion_example41,
      detail::criterion_example42,
      detail::criterion_cross_formula,
  };
  if (id < 1 || id > 12) throw DimensionMismatch("criterion id must be in 1..12");
  CriterionResult res;
  res.id = id;
  res.name = criterion_names()[static_cast<std::size_t>(id)];
  res.passed = true;
  detail::Tally t(res);
  try {
    table[id](opt, t);
  } catch (const std::exception& e) {
    res.passed = false;
    res.failures.push_back(std::string("aborted: ") + e.what());
  }
  if (res.checks == 0) res.passed = false;
  return res;
}

VerifyReport verify_paper(const VerifyOptions& opt, const std::vector<int>& only) {
  VerifyReport rep;
  rep.seed = opt.seed;
  rep.golden_dir = opt.golden_dir.empty() ? default_golden_dir() : opt.golden_dir;
  VerifyOptions o = opt;
  o.golden_dir = rep.golden_dir;
  if (only.empty()) {
    for (int id = 1; id <= 12; ++id) rep.criteria.push_back(run_criterion(id, o));
  } else {
    for (int id : only) rep.criteria.push_back(run_criterion(id, o));
  }
  return rep;
}

json report_to_json(const VerifyReport& r) {
  json crit = json::array();
  for (const auto& c : r.criteria)
    crit.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.passed}, {"checks", c.checks},
                        {"notes", c.notes}, {"failures", c.failures}});
  return json{{"seed", r.seed},
              {"golden_dir", r.golden_dir},
              {"cocycle_e0_factor", kThm11Factor.str()},
              {"criteria", crit},
              {"passed", r.criteria.size() - r.failed()},
              {"failed", r.failed()}};
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "seed " << r.seed << ", golden dir " << r.golden_dir << "\n";
  for (const auto& c : r.criteria) {
    os << (c.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " (" << c.checks << " checks)\n";
    for (const auto& n : c.notes) os << "        " << n << "\n";
    for (const auto& f : c.failures) os << "      ! " << f << "\n";
  }
  os << (r.criteria.size() - r.failed()) << " passed, " << r.failed() << " failed\n";
  return os.str();
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  for (const auto& [l1, l2] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}}) {
    const ExampleBundle b = example_41(l1, l2);
    GoldenCase c;
    c.file = "example41_lambda_" + std::to_string(l1) + "_" + std::to_string(l2) + ".json";
    c.input.algebra = AlgebraInput{b.algebra, b.oscillator};
    c.input.bivector = b.r;
    c.input.form = FormInput{true, {}};
    c.expected = b.expected;
    c.dual_labels = dual_labels(b.algebra);
    c.flat = b.verdicts.flat;
    c.unimodular = b.verdicts.unimodular;
    c.completeness = to_string(b.verdicts.completeness);
    out.push_back(std::move(c));
  }
  for (const auto& [x, y, z, name] : std::vector<std::tuple<long, long, long, const char*>>{
           {1, 0, 0, "sl2_1_0_0.json"}, {0, 1, 0, "sl2_0_1_0.json"}, {1, -1, 2, "sl2_1_m1_2.json"}}) {
    const ExampleBundle b = example_42(x, y, z);
    GoldenCase c;
    c.file = name;
    c.input.algebra = AlgebraInput{b.algebra, std::nullopt};
    c.input.bivector = b.r;
    c.input.form = FormInput{false, b.k.matrix};
    c.expected = b.expected;
    c.dual_labels = dual_labels(b.algebra);
    c.flat = b.verdicts.flat;
    c.unimodular = b.verdicts.unimodular;
    c.completeness = to_string(b.verdicts.completeness);
    out.push_back(std::move(c));
  }
  return out;
}

json golden_to_json(const GoldenCase& c) {
  return json{{"input", document_to_json(c.input)},
              {"dual", constants_to_json(c.expected, c.dual_labels)},
              {"verdicts", {{"flat", c.flat}, {"unimodular", c.unimodular}, {"completeness", c.completeness}}}};
}

}  // namespace lieyb
