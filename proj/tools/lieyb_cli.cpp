#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "lieyb/catalog.hpp"
#include "lieyb/io.hpp"
#include "lieyb/structure.hpp"
#include "lieyb/verify.hpp"

using namespace lieyb;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Output {
  bool as_json = false;
  std::string out;

  void emit(const json& j, const std::string& text) const {
    const std::string body = as_json ? canonical_dump(j) : text;
    if (out.empty())
      std::cout << body;
    else
      write_text_file(out, body);
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_str(const Vector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += v[i].str() + " " + labels[i];
  }
  return s.empty() ? "0" : s;
}

json trivector_to_json(const Trivector& t) {
  json entries = json::array();
  for (const auto& c : t.components())
    entries.push_back(json{{"i", c.i}, {"j", c.j}, {"k", c.k}, {"value", scalar_to_json(c.value)}});
  return json{{"entries", entries}};
}

std::string trivector_str(const Trivector& t, const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& c : t.components()) {
    if (!s.empty()) s += " + ";
    s += c.value.str() + " " + labels[c.i] + "^" + labels[c.j] + "^" + labels[c.k];
  }
  return s.empty() ? "0" : s;
}

std::string bivector_str(const Bivector& r, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = i + 1; j < r.dim(); ++j) {
      if (r(i, j).is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += r(i, j).str() + " " + labels[i] + "^" + labels[j];
    }
  return s.empty() ? "0" : s;
}

std::string constants_str(const LieAlgebra& a) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector v(a.dim());
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.constant(i, j, k);
      if (v.is_zero()) continue;
      any = true;
      os << "  [" << a.labels()[i] << ", " << a.labels()[j] << "] = " << vector_str(v, a.labels()) << "\n";
    }
  if (!any) os << "  abelian\n";
  return os.str();
}

SpecDocument load(const std::string& path) { return document_from_json(read_json_file(path)); }

const OscillatorAlgebra& require_oscillator(const SpecDocument& d, const char* what) {
  if (!d.algebra.oscillator) throw ParseError(std::string(what) + " needs the oscillator shorthand algebra");
  return *d.algebra.oscillator;
}

int cmd_algebra(const std::string& path, const Output& o) {
  const SpecDocument d = load(path);
  const LieAlgebra& g = d.algebra.algebra;
  const StructureReport s = analyze_structure(g);
  json centre = json::array();
  std::string ctext;
  for (const Vector& v : s.center.basis()) {
    centre.push_back(vector_to_json(v));
    ctext += "  " + vector_str(v, g.labels()) + "\n";
  }
  const json j{{"valid", true},
               {"dim", g.dim()},
               {"solvable", s.solvable},
               {"nilpotent", s.nilpotent},
               {"unimodular", s.unimodular},
               {"derived_dims", s.derived_dims},
               {"center", centre}};
  std::string text = "valid, dim " + std::to_string(g.dim()) + ", " + (s.solvable ? "solvable" : "not solvable") +
                     ", " + (s.unimodular ? "unimodular" : "not unimodular") + "\n";
  text += "center (dim " + std::to_string(s.center.dim()) + "):\n" + ctext;
  o.emit(j, text);
  return kOk;
}

int cmd_check(const std::string& path, bool cybe, bool gybe, bool cocycle, const Output& o) {
  const SpecDocument d = load(path);
  const LieAlgebra& g = d.algebra.algebra;
  const auto& labels = g.labels();
  if (!cybe && !gybe && !cocycle) {
    cybe = gybe = d.bivector.has_value();
    cocycle = d.cocycle.has_value() || d.params.has_value();
  }
  json j = json::object();
  std::string text;
  bool ok = true;
  if (cybe || gybe) {
    if (!d.bivector) throw ParseError("check --cybe/--gybe needs a bivector");
    const Bivector& r = *d.bivector;
    if (r.dim() != g.dim()) throw DimensionMismatch("bivector dimension differs from the algebra");
    if (cybe) {
      const Trivector s = schouten_self(g, r);
      const bool pass = s.is_zero();
      ok = ok && pass;
      j["cybe"] = json{{"holds", pass}};
      text += "CYBE: " + yes_no(pass) + "\n";
      if (!pass) {
        j["cybe"]["residual"] = trivector_to_json(s);
        text += "  [r,r] = " + trivector_str(s, labels) + "\n";
      }
    }
    if (gybe) {
      const GybeReport rep = gybe_report(g, r);
      ok = ok && rep.ok();
      j["gybe"] = json{{"holds", rep.ok()}};
      text += "GYBE: " + yes_no(rep.ok()) + "\n";
      if (!rep.ok()) {
        j["gybe"]["basis"] = *rep.first;
        j["gybe"]["residual"] = trivector_to_json(rep.residual);
        text += "  ad_" + labels[*rep.first] + " [r,r] = " + trivector_str(rep.residual, labels) + "\n";
      }
    }
  }
  if (cocycle) {
    Cocycle xi;
    if (d.cocycle)
      xi = *d.cocycle;
    else if (d.params)
      xi = thm11_cocycle(require_oscillator(d, "a params document"), *d.params);
    else
      throw ParseError("check --cocycle needs a cocycle or params");
    if (xi.dim() != g.dim()) throw DimensionMismatch("cocycle dimension differs from the algebra");
    const CocycleReport rep = cocycle_check(g, xi);
    ok = ok && rep.ok();
    j["cocycle"] = json{{"holds", rep.ok()}};
    text += "cocycle: " + yes_no(rep.ok()) + "\n";
    if (!rep.ok()) {
      json fails = json::array();
      for (const auto& f : rep.failures) {
        fails.push_back(json{{"u", f.u}, {"v", f.v}, {"residual", bivector_to_json(f.residual)}});
        text += "  (" + labels[f.u] + ", " + labels[f.v] + "): " + bivector_str(f.residual, labels) + "\n";
      }
      j["cocycle"]["failures"] = fails;
    }
  }
  o.emit(j, text);
  return ok ? kOk : kCheckFailed;
}

json cor12_to_json(const Corollary12Report& c) {
  return json{{"p", c.p},
              {"heisenberg_dim", c.heisenberg_dim},
              {"unimodular", c.unimodular},
              {"center_contains_em1star", c.center_contains_em1star},
              {"brackets_into_line", c.brackets_into_line},
              {"form_rank", c.form_rank}};
}

int cmd_dualize(const std::string& path, const Output& o) {
  const SpecDocument d = load(path);
  const LieAlgebra& g = d.algebra.algebra;
  DualAlgebra dual;
  std::optional<BialgebraParams> params;
  if (d.params) {
    params = *d.params;
    dual = bracketmain_dual(require_oscillator(d, "a params document"), *params);
  } else if (d.cocycle) {
    dual = dual_bracket_from_cocycle(g, *d.cocycle);
    if (d.algebra.oscillator) params = thm11_extract(*d.algebra.oscillator, *d.cocycle);
  } else if (d.bivector) {
    if (d.bivector->dim() != g.dim()) throw DimensionMismatch("bivector dimension differs from the algebra");
    dual = r_bracket(g, *d.bivector);
    if (d.algebra.oscillator && gybe_check(g, *d.bivector))
      params = params_from_coboundary(*d.algebra.oscillator, *d.bivector);
  } else {
    throw ParseError("dualize needs a bivector, a cocycle or params");
  }
  json j{{"dual", constants_to_json(dual.algebra.constants(), dual.algebra.labels())}};
  std::string text = "dual bracket:\n" + constants_str(dual.algebra);
  if (params) {
    const Corollary12Report c = corollary12_analyze(*d.algebra.oscillator, *params);
    j["structure"] = cor12_to_json(c);
    text += "p = " + std::to_string(c.p) + ", Heisenberg part dim " + std::to_string(c.heisenberg_dim) +
            ", form rank " + std::to_string(c.form_rank) + ", " + (c.unimodular ? "unimodular" : "not unimodular") +
            "\n";
  }
  o.emit(j, text);
  return kOk;
}

int cmd_geometry(const std::string& path, const Output& o) {
  const SpecDocument d = load(path);
  const LieAlgebra& g = d.algebra.algebra;
  if (!d.bivector || !d.form) throw ParseError("geometry needs a bivector and a form");
  const Matrix form = d.form->k_lambda ? k_lambda(require_oscillator(d, "form k_lambda")).matrix : d.form->matrix;
  const DualGeometryReport r = geometry_report(g, validate_orthogonal(g, form), *d.bivector);
  const json j{{"dual", constants_to_json(r.dual.algebra.constants(), r.dual.algebra.labels())},
               {"koszul_agrees", r.koszul_agrees},
               {"torsion_free", r.torsion_free},
               {"metric_compatible", r.metric_compatible},
               {"flat", r.flat},
               {"locally_symmetric", r.locally_symmetric},
               {"unimodular", r.unimodular},
               {"solvable", r.solvable},
               {"completeness", to_string(r.completeness)},
               {"kernel_dim", r.kernel_dim},
               {"kernel_abelian_ideal", r.kernel_abelian_ideal},
               {"image_subalgebra", r.image_subalgebra},
               {"derived_dim", r.derived_dim},
               {"derived_abelian", r.derived_abelian}};
  std::string text = "dual bracket:\n" + constants_str(r.dual.algebra);
  text += std::string(r.flat ? "flat" : "not flat") + ", " + (r.locally_symmetric ? "locally symmetric" : "not locally symmetric") +
          ", " + (r.unimodular ? "unimodular" : "not unimodular") + ", " + to_string(r.completeness) + "\n";
  text += "connection matches Koszul: " + yes_no(r.koszul_agrees) + ", torsion free: " + yes_no(r.torsion_free) +
          ", metric: " + yes_no(r.metric_compatible) + "\n";
  o.emit(j, text);
  return r.koszul_agrees && r.torsion_free && r.metric_compatible ? kOk : kCheckFailed;
}

std::vector<Scalar> grid_values(long n) {
  std::set<Scalar> vals;
  for (long p = -n; p <= n; ++p)
    for (long q = 1; q <= 2; ++q) vals.insert(Scalar(p, q));
  return {vals.begin(), vals.end()};
}

// Calls f on every point of vals^k.
template <class F>
void for_each_point(const std::vector<Scalar>& vals, std::size_t k, F&& f) {
  if (vals.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Scalar> pt(k);
  for (;;) {
    for (std::size_t m = 0; m < k; ++m) pt[m] = vals[idx[m]];
    f(pt);
    std::size_t m = 0;
    while (m < k && ++idx[m] == vals.size()) idx[m++] = 0;
    if (m == k) return;
  }
}

json scalars_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

int cmd_enumerate(bool dim4, bool sl2, const std::string& dim6, long grid, const std::string& alpha_s,
                  const std::vector<std::string>& a_s, const Output& o) {
  if (dim4 + sl2 + !dim6.empty() != 1) throw ParseError("choose exactly one of --dim4, --sl2, --dim6-case");
  const std::vector<Scalar> vals = grid_values(grid);
  json sols = json::array();
  std::size_t points = 0;
  std::string mode;
  std::ostringstream text;

  if (dim4) {
    mode = "dim4";
    const OscillatorAlgebra g = build_oscillator({1});
    using O = OscillatorAlgebra;
    const std::vector<std::pair<std::size_t, std::size_t>> slots{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for_each_point(vals, slots.size(), [&](const std::vector<Scalar>& pt) {
      ++points;
      Bivector r(4);
      for (std::size_t k = 0; k < slots.size(); ++k) r.set(slots[k].first, slots[k].second, pt[k]);
      const bool gy = gybe_check(g.algebra, r);
      if (!gy) return;
      const bool cy = cybe_check(g.algebra, r);
      Vector u(4);
      for (std::size_t k = 0; k < 4; ++k)
        if (k != O::e0) u[k] = r(O::e0, k);
      std::string form = "other";
      if (dim4_family(g, FamilyKind::Cybe, {0, 0, u}).r == r)
        form = "e0^u";
      else if (dim4_family(g, FamilyKind::Gybe, {r(O::e(1), O::ec(1)), 0, u}).r == r)
        form = "e0^u + alpha t1";
      sols.push_back(json{{"bivector", bivector_to_json(r)}, {"cybe", cy}, {"gybe", gy}, {"form", form}});
      text << (cy ? "CYBE " : "GYBE ") << bivector_str(r, g.algebra.labels()) << "  [" << form << "]\n";
    });
  } else if (sl2) {
    mode = "sl2";
    const LieAlgebra a = sl2_algebra();
    for_each_point(vals, 3, [&](const std::vector<Scalar>& pt) {
      ++points;
      if (!cybe_check(a, sl2_bivector(pt[0], pt[1], pt[2]))) return;
      sols.push_back(json{{"a", scalar_to_json(pt[0])}, {"b", scalar_to_json(pt[1])}, {"c", scalar_to_json(pt[2])}});
      text << "(" << pt[0].str() << ", " << pt[1].str() << ", " << pt[2].str() << ")\n";
    });
  } else {
    mode = "dim6-" + dim6;
    const OscillatorAlgebra g = build_oscillator({1, 2});
    const Scalar alpha = alpha_s.empty() ? Scalar(0) : Scalar::parse(alpha_s);
    std::vector<Scalar> a{0, 0};
    if (!a_s.empty()) {
      if (a_s.size() != 2) throw ParseError("--a takes two scalars");
      a = {Scalar::parse(a_s[0]), Scalar::parse(a_s[1])};
    }
    if (dim6 != "cyb1" && dim6 != "gyb1" && dim6 != "bialgebra") throw ParseError("unknown --dim6-case " + dim6);
    for_each_point(vals, 6, [&](const std::vector<Scalar>& pt) {
      ++points;
      const Bivector r = case_analysis_bivector(g, 1, 2, pt[0], pt[1], pt[2], pt[3], pt[4], pt[5]);
      Bivector res;
      if (dim6 == "cyb1")
        res = condition_cyb1(g, r, alpha);
      else if (dim6 == "gyb1")
        res = condition_gyb1(g, r, alpha);
      else
        res = condition_boucetta(g, r, a);
      if (!res.is_zero()) return;
      sols.push_back(json{{"e", scalar_to_json(pt[0])}, {"ec", scalar_to_json(pt[1])}, {"f", scalar_to_json(pt[2])},
                          {"fc", scalar_to_json(pt[3])}, {"c1", scalar_to_json(pt[4])}, {"c2", scalar_to_json(pt[5])}});
      text << "e=" << pt[0].str() << " ec=" << pt[1].str() << " f=" << pt[2].str() << " fc=" << pt[3].str()
           << " c1=" << pt[4].str() << " c2=" << pt[5].str() << "\n";
    });
  }
  const json j{{"mode", mode}, {"grid", grid}, {"values", scalars_to_json(vals)}, {"points", points}, {"solutions", sols}};
  o.emit(j, mode + ": " + std::to_string(points) + " grid points, " + std::to_string(sols.size()) + " solutions\n" +
                text.str());
  return kOk;
}

int cmd_verify(std::uint64_t seed, const std::vector<int>& only, const std::string& golden_dir, const Output& o) {
  for (int id : only)
    if (id < 1 || id > 12) throw ParseError("--only takes criterion ids 1..12");
  VerifyOptions opt;
  opt.seed = seed;
  opt.golden_dir = golden_dir;
  const VerifyReport rep = verify_paper(opt, only);
  o.emit(report_to_json(rep), report_to_text(rep));
  return rep.failed() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie bialgebra and Yang-Baxter toolkit for oscillator algebras"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "emit JSON instead of text");
  app.add_option("--out", out.out, "write the result to a file");

  std::string spec;
  auto* algebra = app.add_subcommand("algebra", "validate an algebra and summarize its structure");
  algebra->add_option("spec", spec, "input document")->required();

  bool cybe = false, gybe = false, cocycle = false;
  auto* check = app.add_subcommand("check", "run the Yang-Baxter and cocycle predicates");
  check->add_option("spec", spec, "input document")->required();
  check->add_flag("--cybe", cybe);
  check->add_flag("--gybe", gybe);
  check->add_flag("--cocycle", cocycle);

  auto* dualize = app.add_subcommand("dualize", "dual bracket of a bialgebra or GYBE solution");
  dualize->add_option("spec", spec, "input document")->required();

  auto* geometry = app.add_subcommand("geometry", "left-invariant geometry of the dual group");
  geometry->add_option("spec", spec, "input document")->required();

  bool dim4 = false, sl2 = false;
  std::string dim6, alpha;
  std::vector<std::string> a;
  long grid = 1;
  auto* enumerate = app.add_subcommand("enumerate", "grid search for solutions");
  enumerate->add_flag("--dim4", dim4, "bivectors on G_(1)");
  enumerate->add_flag("--sl2", sl2, "(a, b, c) bivectors on sl(2)");
  enumerate->add_option("--dim6-case", dim6, "cyb1 | gyb1 | bialgebra on G_(1,2)");
  enumerate->add_option("--grid", grid, "values k/2 with |k/2| <= grid; negative means empty");
  enumerate->add_option("--alpha", alpha, "alpha for cyb1 and gyb1");
  enumerate->add_option("--a", a, "J_a parameters for the bialgebra condition")->expected(2);

  std::uint64_t seed = kDefaultSeed;
  std::vector<int> only;
  std::string golden_dir;
  auto* verify = app.add_subcommand("verify-paper", "run every acceptance check");
  verify->add_option("--seed", seed);
  verify->add_option("--only", only, "criterion ids")->delimiter(',');
  verify->add_option("--golden-dir", golden_dir);

  for (auto* sub : {algebra, check, dualize, geometry, enumerate, verify}) {
    sub->add_flag("--json", out.as_json, "emit JSON instead of text");
    sub->add_option("--out", out.out, "write the result to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*algebra) return cmd_algebra(spec, out);
    if (*check) return cmd_check(spec, cybe, gybe, cocycle, out);
    if (*dualize) return cmd_dualize(spec, out);
    if (*geometry) return cmd_geometry(spec, out);
    if (*enumerate) return cmd_enumerate(dim4, sl2, dim6, grid, alpha, a, out);
    if (*verify) return cmd_verify(seed, only, golden_dir, out);
  } catch (const JacobiFailure& e) {
    std::cerr << "JacobiFailure: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const JacobiViolation& e) {
    std::cerr << "AlgebraInvalid: " << e.what() << "\n";
    return kInputError;
  } catch (const AntisymmetryViolation& e) {
    std::cerr << "AlgebraInvalid: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "DimensionMismatch: " << e.what() << "\n";
    return kInputError;
  } catch (const NonPositiveLambda& e) {
    std::cerr << "NonPositiveLambda: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsortedLambda& e) {
    std::cerr << "UnsortedLambda: " << e.what() << "\n";
    return kInputError;
  } catch (const NotSymmetric& e) {
    std::cerr << "NotSymmetric: " << e.what() << "\n";
    return kInputError;
  } catch (const Degenerate& e) {
    std::cerr << "Degenerate: " << e.what() << "\n";
    return kInputError;
  } catch (const NotAdInvariant& e) {
    std::cerr << "NotAdInvariant: " << e.what() << "\n";
    return kInputError;
  } catch (const RNotInWedge2S& e) {
    std::cerr << "RNotInWedge2S: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}
