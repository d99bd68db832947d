#include "lieyb/catalog.hpp"

namespace lieyb {

namespace {

using O = OscillatorAlgebra;

struct Checker {
  Section3Report& rep;
  std::string tag;
  void operator()(const std::string& name, bool ok) { rep.checks.push_back({name + " " + tag, ok}); }
};

struct Sample {
  Scalar e, ec, f, fc, ci, cj, alpha;
};

const std::vector<Sample>& samples() {
  static const std::vector<Sample> s{
      {1, 0, 0, 0, 0, 0, 0},
      {1, 2, -1, 3, 2, -5, 1},
      {Scalar(1, 2), -1, 2, 0, 1, -1, -2},
      {0, 0, 3, Scalar(-1, 3), Scalar(3, 2), 4, Scalar(1, 2)},
  };
  return s;
}

}  // namespace

std::size_t Section3Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.ok) ++n;
  return n;
}

Section3Report verify_section3_table(const OscillatorAlgebra& g) {
  Section3Report rep;
  const std::size_t n = g.n();
  if (n < 2) return rep;
  const Scalar half(1, 2);
  std::vector<Scalar> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = Scalar(static_cast<long>(2 * k * k + 1), static_cast<long>(k + 2));
  const LinearMap ja = j_a(g, a).map;
  const LinearMap jl(g.algebra.ad_basis(O::em1));

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      Checker check{rep, "(" + std::to_string(i) + "," + std::to_string(j) + ")"};
      const EFBasis b = ef_basis(g, i, j);
      auto w = [&](const Bivector& x, const Bivector& y) { return omega_pair(g, x, y); };
      const Bivector tsum = b.ti + b.tj;

      check("w(r,r) = 0", w(b.r, b.r).is_zero());
      check("w(rc,rc) = 0", w(b.rc, b.rc).is_zero());
      check("w(s,s) = 0", w(b.s, b.s).is_zero());
      check("w(sc,sc) = 0", w(b.sc, b.sc).is_zero());
      check("w(r,s) = 0", w(b.r, b.s).is_zero());
      check("w(r,sc) = 0", w(b.r, b.sc).is_zero());
      check("w(rc,s) = 0", w(b.rc, b.s).is_zero());
      check("w(rc,sc) = 0", w(b.rc, b.sc).is_zero());
      check("w(r,rc) = (ti+tj)/2", w(b.r, b.rc) == half * tsum);
      check("w(s,sc) = -(ti+tj)/2", w(b.s, b.sc) == -(half * tsum));
      for (const auto& [tn, t] : {std::pair<const char*, const Bivector*>{"ti", &b.ti}, {"tj", &b.tj}}) {
        const std::string p = std::string("w(") + tn + ",";
        check(p + "r) = r/2", w(*t, b.r) == half * b.r);
        check(p + "rc) = rc/2", w(*t, b.rc) == half * b.rc);
        check(p + "s) = s/2", w(*t, b.s) == half * b.s);
        check(p + "sc) = sc/2", w(*t, b.sc) == half * b.sc);
      }
      check("w(ti,ti) = ti", w(b.ti, b.ti) == b.ti);
      check("w(tj,tj) = tj", w(b.tj, b.tj) == b.tj);
      check("w(ti,tj) = 0", w(b.ti, b.tj).is_zero());

      const std::vector<std::pair<const char*, const Bivector*>> ef{
          {"E", &b.E}, {"Ec", &b.Ec}, {"F", &b.F}, {"Fc", &b.Fc}};
      for (std::size_t x = 0; x < ef.size(); ++x)
        for (std::size_t y = x + 1; y < ef.size(); ++y)
          check(std::string("w(") + ef[x].first + "," + ef[y].first + ") = 0", w(*ef[x].second, *ef[y].second).is_zero());
      check("w(E,E) = -(ti+tj)", w(b.E, b.E) == -tsum);
      check("w(Ec,Ec) = -(ti+tj)", w(b.Ec, b.Ec) == -tsum);
      check("w(F,F) = ti+tj", w(b.F, b.F) == tsum);
      check("w(Fc,Fc) = ti+tj", w(b.Fc, b.Fc) == tsum);

      auto eigen = [&](const char* name, const LinearMap& jm, const Scalar& xi, const Scalar& xj) {
        const std::string p(name);
        check(p + "(E) = (xi+xj) Ec", j_dag(jm, b.E) == (xi + xj) * b.Ec);
        check(p + "(Ec) = -(xi+xj) E", j_dag(jm, b.Ec) == -((xi + xj) * b.E));
        check(p + "(F) = (xj-xi) Fc", j_dag(jm, b.F) == (xj - xi) * b.Fc);
        check(p + "(Fc) = (xi-xj) F", j_dag(jm, b.Fc) == (xi - xj) * b.F);
        check(p + "(ti) = 0", j_dag(jm, b.ti).is_zero());
      };
      eigen("Ja+", ja, a[i - 1], a[j - 1]);
      eigen("ad+e-1", jl, g.lambda[i - 1], g.lambda[j - 1]);

      const Scalar li = g.lambda[i - 1], lj = g.lambda[j - 1];
      const Scalar ai = a[i - 1], aj = a[j - 1];
      const Scalar lp = li + lj, lm = lj - li;
      std::size_t idx = 0;
      for (const auto& s : samples()) {
        const std::string sfx = " #" + std::to_string(idx++);
        const Bivector r = case_analysis_bivector(g, i, j, s.e, s.ec, s.f, s.fc, s.ci, s.cj);
        const Bivector adr = j_dag(jl, r);
        const Bivector rot_e = -s.ec * b.E + s.e * b.Ec;
        const Bivector rot_f = -s.fc * b.F + s.f * b.Fc;
        const Bivector par_e = s.e * b.E + s.ec * b.Ec;
        const Bivector par_f = s.f * b.F + s.fc * b.Fc;
        const Bivector p = par_e + par_f;
        const Scalar csum = s.ci + s.cj;

        const Bivector cyb_lhs = w(r, r) + s.alpha * adr;
        const Bivector cyb_rhs = s.ci * s.ci * b.ti + s.cj * s.cj * b.tj + csum * p +
                                 (s.f * s.f + s.fc * s.fc - s.e * s.e - s.ec * s.ec) * tsum +
                                 s.alpha * lp * rot_e + s.alpha * lm * rot_f;
        check("cyb1 expansion" + sfx, cyb_lhs == cyb_rhs);

        const Bivector common = half * csum * lp * rot_e + half * csum * lm * rot_f;
        const Bivector bou_lhs = w(r, adr) - j_dag(ja, adr);
        const Bivector bou_rhs = common + lp * (ai + aj) * par_e + lm * (aj - ai) * par_f;
        check("bialgebra condition expansion" + sfx, bou_lhs == bou_rhs);

        const Bivector gyb_lhs = w(r, adr) + s.alpha * j_dag(jl, adr);
        const Bivector gyb_rhs = common - s.alpha * lp * lp * par_e - s.alpha * lm * lm * par_f;
        check("gyb1 expansion" + sfx, gyb_lhs == gyb_rhs);
      }
    }
  return rep;
}

}  // namespace lieyb
