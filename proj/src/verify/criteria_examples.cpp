#include <filesystem>

#include "criteria.hpp"

namespace lieyb::detail {

namespace {

using O = OscillatorAlgebra;

struct LoadedGolden {
  json file;
  SpecDocument input;
  bool ok = false;
  std::string error;
};

LoadedGolden load_golden(const std::string& dir, const GoldenCase& c) {
  LoadedGolden out;
  try {
    out.file = read_json_file((std::filesystem::path(dir) / c.file).string());
    out.input = document_from_json(out.file.at("input"));
    out.ok = out.file.contains("dual") && out.file.contains("verdicts") && out.input.bivector.has_value() &&
             out.input.form.has_value();
    if (!out.ok) out.error = "golden file lacks input, dual or verdicts";
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

Matrix form_of(const SpecDocument& d) {
  if (d.form->k_lambda) return k_lambda(*d.algebra.oscillator).matrix;
  return d.form->matrix;
}

// Runs one golden case: the file agrees with the transcribed table, and the
// computed dual bracket and verdicts agree with the file.
void check_golden(Tally& t, const std::string& dir, const GoldenCase& c, DualGeometryReport* out) {
  const LoadedGolden g = load_golden(dir, c);
  if (!t.check(g.ok, [&] { return c.file + ": " + g.error; })) return;
  t.check(g.file == golden_to_json(c), [&] { return c.file + " differs from the displayed table"; });

  const LieAlgebra& a = g.input.algebra.algebra;
  const Bivector& r = *g.input.bivector;
  t.check(cybe_check(a, r), [&] { return c.file + ": r fails CYBE"; });
  DualGeometryReport rep;
  try {
    rep = geometry_report(a, validate_orthogonal(a, form_of(g.input)), r);
  } catch (const Error& e) {
    const std::string msg = e.what();
    t.check(false, [&] { return c.file + ": " + msg; });
    return;
  }
  const json computed = constants_to_json(rep.dual.algebra.constants(), rep.dual.algebra.labels());
  t.check(computed == g.file["dual"], [&] { return c.file + ": computed dual bracket differs from the golden table"; });
  const json& v = g.file["verdicts"];
  t.check(v.value("flat", !rep.flat) == rep.flat, [&] { return c.file + ": flatness verdict differs"; });
  t.check(v.value("unimodular", !rep.unimodular) == rep.unimodular, [&] { return c.file + ": unimodularity verdict differs"; });
  t.check(v.value("completeness", std::string()) == to_string(rep.completeness), [&] { return c.file + ": completeness verdict differs"; });
  if (out) *out = std::move(rep);
}

}  // namespace

void criterion_example41(const VerifyOptions& opt, Tally& t) {
  const std::string dir = opt.golden_dir.empty() ? default_golden_dir() : opt.golden_dir;
  for (const GoldenCase& c : golden_cases()) {
    if (c.file.rfind("example41", 0) != 0) continue;
    DualGeometryReport rep;
    check_golden(t, dir, c, &rep);
    if (rep.dual.algebra.dim() == 0) continue;
    t.check(rep.flat && rep.unimodular && rep.completeness == Completeness::Complete && rep.solvable,
            [&] { return c.file + ": expected flat, unimodular, complete, solvable"; });
    const OscillatorAlgebra g = build_oscillator(c.input.algebra.oscillator->lambda);
    const Subspace ideal = example_41_ideal(g);
    const LieAlgebra& dual = rep.dual.algebra;
    t.check(ideal.dim() == 5 && is_ideal(dual, ideal), [&] { return c.file + ": span of e-1*, e_i*, ec_i* is not an ideal"; });
    const LieAlgebra h = restrict_to(dual, ideal);
    t.check(is_heisenberg(h), [&] { return c.file + ": ideal is not 5-dim Heisenberg"; });
    const Subspace z = center(h);
    const Subspace all = Subspace::whole(h.dim());
    t.check(z.dim() == 1 && bracket_span(h, all, all) == z, [&] { return c.file + ": ideal center and derived algebra differ"; });
    t.note(c.file + ": dual matches, flat, unimodular, complete, Heisenberg ideal");
  }
}

void criterion_example42(const VerifyOptions& opt, Tally& t) {
  const std::vector<Scalar> grid = half_grid(2);
  const LieAlgebra a = sl2_algebra();
  std::size_t points = 0, sols = 0;
  for (const auto& x : grid)
    for (const auto& y : grid)
      for (const auto& z : grid) {
        ++points;
        const Bivector r = sl2_bivector(x, y, z);
        const bool cy = cybe_check(a, r);
        const bool eq = (Scalar(4) * x * y + z * z).is_zero();
        const auto where = [&] { return "(" + x.str() + "," + y.str() + "," + z.str() + ")"; };
        t.check(cy == eq, [&] { return "CYBE and 4ab + c^2 = 0 disagree at " + where(); });
        if (!cy || r.is_zero()) continue;
        ++sols;
        const ExampleBundle b = example_42(x, y, z);
        const LieAlgebra dual = r_bracket(a, r).algebra;
        t.check(dual.constants() == b.expected, [&] { return "dual bracket differs from the display at " + where(); });
        const Subspace all = Subspace::whole(3);
        const Subspace der = bracket_span(dual, all, all);
        t.check(der.dim() == 2 && is_abelian(dual, der), [&] { return "derived ideal not 2-dim abelian at " + where(); });
        t.check(!trace_form_unimodular(dual), [&] { return "dual unimodular at " + where(); });
      }
  t.note(std::to_string(points) + " grid points, " + std::to_string(sols) + " nonzero CYBE solutions");

  const std::string dir = opt.golden_dir.empty() ? default_golden_dir() : opt.golden_dir;
  for (const GoldenCase& c : golden_cases()) {
    if (c.file.rfind("sl2", 0) != 0) continue;
    DualGeometryReport rep;
    check_golden(t, dir, c, &rep);
    if (rep.dual.algebra.dim() == 0) continue;
    t.check(rep.flat && !rep.unimodular && rep.completeness == Completeness::Incomplete,
            [&] { return c.file + ": expected flat, not unimodular, incomplete"; });
    t.check(rep.derived_dim == 2 && rep.derived_abelian, [&] { return c.file + ": derived ideal not 2-dim abelian"; });
    t.note(c.file + ": dual matches, flat, not unimodular, incomplete");
  }
}

void criterion_cross_formula(const VerifyOptions& opt, Tally& t) {
  Sampler s(sub_seed(opt.seed, 12));
  for (const std::vector<Scalar>& lam : std::vector<std::vector<Scalar>>{{1}, {1, 2}, {1, 2, 4}}) {
    const OscillatorAlgebra g = build_oscillator(lam);
    const std::string dim = " on dim " + std::to_string(g.dim());
    std::size_t bialg = 0;
    for (int n = 0; n < 100; ++n) {
      const BialgebraParams p = g.n() == 1 ? BialgebraParams{s.scalar() * t_bivector(g, 1), s.in_s(g), s.scalars(1)}
                                           : draw_bialgebra_params(s, g);
      const auto where = [&] { return "draw " + std::to_string(n) + dim; };
      const Cocycle xi = thm11_cocycle(g, p);
      t.check(bracketmain_constants(g, p) == dual_constants(xi), [&] { return "explicit bracket and cocycle dual differ, " + where(); });
      if (!condition_boucetta(g, p.r, p.a).is_zero()) continue;
      ++bialg;
      try {
        t.check(bracketmain_dual(g, p).algebra.constants() == dual_bracket_from_cocycle(g.algebra, xi).algebra.constants(),
                [&] { return "bialgebra duals differ, " + where(); });
      } catch (const Error& e) {
        const std::string msg = e.what();
        t.check(false, [&] { return msg + ", " + where(); });
      }
    }
    std::size_t gybe = 0;
    for (int n = 0; n < 100; ++n) {
      const Bivector r = n % 2 ? s.bivector(g.dim(), 0.4) : draw_normal_form(s, g);
      const auto where = [&] { return "bivector " + std::to_string(n) + dim; };
      const Cocycle cob = coboundary(g.algebra, r);
      t.check(dual_constants(cob) == r_bracket_constants(g.algebra, r), [&] { return "coboundary dual and r-bracket differ, " + where(); });
      if (!gybe_check(g.algebra, r)) continue;
      ++gybe;
      t.check(r_bracket(g.algebra, r).algebra.constants() == dual_bracket_from_cocycle(g.algebra, cob).algebra.constants(),
              [&] { return "validated duals differ, " + where(); });
      t.check(thm11_cocycle(g, params_from_coboundary(g, r)) == cob, [&] { return "coboundary is not of the bialgebra form, " + where(); });
    }
    t.note(std::to_string(bialg) + " bialgebras and " + std::to_string(gybe) + " GYBE coboundaries" + dim);
  }
  const LieAlgebra sl2 = sl2_algebra();
  for (int n = 0; n < 50; ++n) {
    const Bivector r = sl2_bivector(s.scalar(), s.scalar(), s.scalar());
    t.check(dual_constants(coboundary(sl2, r)) == r_bracket_constants(sl2, r), [&] { return "sl2 bivector " + std::to_string(n) + ": duals differ"; });
  }
}

}  // namespace lieyb::detail
