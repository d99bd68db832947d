#include <algorithm>
#include <set>

#include "criteria.hpp"
#include "lieyb/oracles.hpp"

namespace lieyb::detail {

namespace {

using O = OscillatorAlgebra;

std::string lam_str(const std::vector<Scalar>& lam) {
  std::string s = "(";
  for (std::size_t k = 0; k < lam.size(); ++k) s += (k ? "," : "") + lam[k].str();
  return s + ")";
}

}  // namespace

bool Tally::check(bool ok, const std::function<std::string()>& what) {
  ++res_.checks;
  if (!ok && res_.failures.size() < 8) res_.failures.push_back(what());
  if (!ok) res_.passed = false;
  return ok;
}

std::uint64_t sub_seed(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<Scalar> half_grid(long n) {
  std::set<Scalar> vals;
  for (long p = -n; p <= n; ++p)
    for (long q = 1; q <= 2; ++q) vals.insert(Scalar(p, q));
  return {vals.begin(), vals.end()};
}

void criterion_oscillator(const VerifyOptions&, Tally& t) {
  for (const std::vector<Scalar>& lam : std::vector<std::vector<Scalar>>{{1}, {1, 2}, {1, 2, 4}}) {
    const OscillatorAlgebra g = build_oscillator(lam);
    const LieAlgebra& a = g.algebra;
    const std::size_t d = g.dim();
    const std::string tag = " on G" + lam_str(lam);

    StructureConstants want = zero_constants(d);
    for (std::size_t j = 1; j <= g.n(); ++j) {
      const Scalar& l = lam[j - 1];
      want[O::em1][O::e(j)][O::ec(j)] = l;
      want[O::e(j)][O::em1][O::ec(j)] = -l;
      want[O::em1][O::ec(j)][O::e(j)] = -l;
      want[O::ec(j)][O::em1][O::e(j)] = l;
      want[O::e(j)][O::ec(j)][O::e0] = 1;
      want[O::ec(j)][O::e(j)][O::e0] = -1;
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          t.check(a.constant(i, j, k) == want[i][j][k],
                  [&] { return "bracket table entry (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")" + tag; });

    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          const Vector bi = a.basis(i), bj = a.basis(j), bk = a.basis(k);
          Vector res = a.bracket(a.bracket(bi, bj), bk);
          res += a.bracket(a.bracket(bj, bk), bi);
          res += a.bracket(a.bracket(bk, bi), bj);
          for (std::size_t m = 0; m < d; ++m)
            t.check(res[m].is_zero(), [&] { return "Jacobi at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")" + tag; });
        }

    const Vector e0 = a.basis(O::e0);
    const Vector em1 = a.basis(O::em1);
    for (std::size_t u = 2; u < d; ++u)
      for (std::size_t v = 2; v < d; ++v) {
        const Vector bu = a.basis(u), bv = a.basis(v);
        t.check(a.bracket(bu, bv) == omega(g, bu, bv) * e0, [&] { return "[u,v] = w(u,v) e0 fails" + tag; });
        t.check((omega(g, a.bracket(em1, bu), bv) + omega(g, bu, a.bracket(em1, bv))).is_zero(), [&] { return "ad e-1 is not w-skew" + tag; });
      }

    const Matrix k = k_lambda(g).matrix;
    t.check(k.is_symmetric(), [&] { return "k_lambda not symmetric" + tag; });
    const Signature sig = signature(k);
    t.check(sig.negative == 1 && sig.zero == 0, [&] { return "k_lambda not Lorentzian" + tag; });
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v)
        for (std::size_t w = 0; w < d; ++w) {
          const Vector bu = a.basis(u);
          const Vector uv = a.bracket(bu, a.basis(v)), uw = a.bracket(bu, a.basis(w));
          Scalar s;
          for (std::size_t m = 0; m < d; ++m) {
            s.add_product(uv[m], k(m, w));
            s.add_product(k(v, m), uw[m]);
          }
          t.check(s.is_zero(), [&] { return "k_lambda not ad-invariant at (" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")" + tag; });
        }
  }
}

void criterion_schouten(const VerifyOptions& opt, Tally& t) {
  Sampler s(sub_seed(opt.seed, 2));
  const LieAlgebra sl2 = sl2_algebra();
  std::vector<LieAlgebra> pool{
      sl2,
      build_oscillator({1}).algebra,
      heisenberg_algebra(2),
      build_oscillator({1, 2}).algebra,
      direct_sum(sl2, build_oscillator({1}).algebra),
      build_oscillator({1, 2, 4}).algebra,
      direct_sum(sl2, build_oscillator({1, 2}).algebra),
      build_oscillator({1, 2, 4, 8}).algebra,
  };
  std::size_t nonzero = 0;
  for (int n = 0; n < 200; ++n) {
    const LieAlgebra& g = pool[static_cast<std::size_t>(n) % pool.size()];
    Bivector r(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j) r.set(i, j, s.small());
    const Trivector a = schouten_self(g, r);
    if (!a.is_zero()) ++nonzero;
    t.check(a == schouten_oracle(g, r), [&] { return "draw " + std::to_string(n) + " (dim " + std::to_string(g.dim()) + ") differs from the oracle"; });
  }
  t.note("200 bivectors over dims 3..10, " + std::to_string(nonzero) + " with [r,r] != 0");
}

void criterion_section3(const VerifyOptions&, Tally& t) {
  for (const std::vector<Scalar>& lam : std::vector<std::vector<Scalar>>{{1, 2}, {1, 2, 4}, {1, 2, 4, 8}}) {
    const Section3Report rep = verify_section3_table(build_oscillator(lam));
    t.check(!rep.checks.empty(), [&] { return "no identities checked on G" + lam_str(lam); });
    for (const auto& c : rep.checks) t.check(c.ok, [&] { return c.name + " on G" + lam_str(lam); });
    t.note("G" + lam_str(lam) + ": " + std::to_string(rep.checks.size()) + " identities");
  }
}

void criterion_dim4_grid(const VerifyOptions&, Tally& t) {
  const OscillatorAlgebra g = build_oscillator({1});
  const std::vector<Scalar> vals{-1, Scalar(-1, 2), 0, Scalar(1, 2), 1};
  const std::vector<std::pair<std::size_t, std::size_t>> slots{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::size_t n_cybe = 0, n_gybe = 0, n_form_c = 0, n_form_g = 0;
  std::vector<std::size_t> idx(slots.size(), 0);
  for (;;) {
    Bivector r(4);
    for (std::size_t k = 0; k < slots.size(); ++k) r.set(slots[k].first, slots[k].second, vals[idx[k]]);
    Vector u(4);
    for (std::size_t k = 0; k < 4; ++k)
      if (k != O::e0) u[k] = r(O::e0, k);
    const bool form_c = dim4_family(g, FamilyKind::Cybe, {0, 0, u}).r == r;
    const bool form_g = dim4_family(g, FamilyKind::Gybe, {r(O::e(1), O::ec(1)), 0, u}).r == r;
    const bool cy = cybe_check(g.algebra, r), gy = gybe_check(g.algebra, r);
    n_cybe += cy;
    n_gybe += gy;
    n_form_c += form_c;
    n_form_g += form_g;
    auto where = [&] {
      std::string s;
      for (std::size_t k = 0; k < slots.size(); ++k) s += vals[idx[k]].str() + " ";
      return s;
    };
    t.check(!form_c || cy, [&] { return "e0^u fails CYBE at " + where(); });
    t.check(!cy || form_c, [&] { return "CYBE solution outside {e0^u} at " + where(); });
    t.check(!form_g || gy, [&] { return "e0^u + a t1 fails GYBE at " + where(); });
    t.check(!gy || form_g, [&] { return "GYBE solution outside {e0^u + a t1} at " + where(); });

    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == vals.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  t.check(n_cybe > 0 && n_gybe > n_cybe, [] { return "grid did not exercise both equations"; });
  t.note("15625 grid points: " + std::to_string(n_cybe) + " CYBE (" + std::to_string(n_form_c) + " of form e0^u), " +
         std::to_string(n_gybe) + " GYBE (" + std::to_string(n_form_g) + " of form e0^u + a t1)");
}

void criterion_dim6_families(const VerifyOptions& opt, Tally& t) {
  Sampler s(sub_seed(opt.seed, 5));
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const Scalar zero;

  auto draw = [&](Dim6Case c) {
    Dim6Params p;
    p.e = s.scalar(); p.ec = s.scalar(); p.f = s.scalar(); p.fc = s.scalar();
    p.c = s.scalar(); p.c1 = s.scalar(); p.c2 = s.scalar();
    p.a = {s.scalar(), s.scalar()};
    p.u = s.in_s(g);
    switch (c) {
      case Dim6Case::BialgebraB: p.a[1] = -p.a[0]; break;
      case Dim6Case::BialgebraC: p.a[1] = p.a[0]; break;
      case Dim6Case::BialgebraD: p.a = {zero, zero}; break;
      case Dim6Case::GybeT:
      case Dim6Case::CybeU: p.u = s.vector(g.dim()); break;
      case Dim6Case::CybeP: {
        Dim6Params q = s.cyb_point();
        q.u = p.u;
        p = q;
        break;
      }
      default: break;
    }
    return p;
  };

  for (Dim6Case c : all_dim6_cases()) {
    std::size_t nontrivial = 0;
    for (int n = 0; n < 100; ++n) {
      const Dim6Params p = draw(c);
      const FamilyRealization f = dim6_family(g, c, p);
      if ((f.r && !f.r->is_zero()) || (f.xi && !(*f.xi == Cocycle::zero(g.dim())))) ++nontrivial;
      t.check(family_predicate(g, f), [&] { return to_string(c) + " draw " + std::to_string(n) + " fails its predicate"; });
    }
    t.note(to_string(c) + ": 100 draws, " + std::to_string(nontrivial) + " nonzero");
  }

  // Draws that break a family's constraint: the constructor refuses them and
  // the unconstrained object fails the predicate.
  auto literal_xi = [&](const Bivector& r, const Vector& u, const std::vector<Scalar>& a) {
    FamilyRealization f;
    f.kind = FamilyKind::Bialgebra;
    f.xi = thm11_cocycle_scaled(g, BialgebraParams{r, u, a}, Scalar(1));
    return f;
  };
  auto refused = [&](Dim6Case c, const Dim6Params& p) {
    try {
      dim6_family(g, c, p);
    } catch (const ConstraintViolated&) {
      return true;
    }
    return false;
  };
  std::size_t violating = 0;
  for (int n = 0; n < 100; ++n) {
    Dim6Params p = draw(Dim6Case::BialgebraD);
    p.e = s.nonzero();
    p.f = s.nonzero();
    const Scalar a1 = s.nonzero();

    p.a = {a1, a1 + s.nonzero()};
    if ((p.a[0] + p.a[1]).is_zero()) p.a[1] += 1;
    t.check(refused(Dim6Case::BialgebraB, p), [] { return "case (b) accepted a != (s,-s)"; });
    t.check(!family_predicate(g, literal_xi(case_analysis_bivector(g, 1, 2, p.e, p.ec, zero, zero, p.c, -p.c), p.u, p.a)),
            [] { return "case (b) with a1 + a2 != 0 passed Jacobi"; });

    p.a = {a1, -a1};
    t.check(refused(Dim6Case::BialgebraC, p), [] { return "case (c) accepted a != (s,s)"; });
    t.check(!family_predicate(g, literal_xi(case_analysis_bivector(g, 1, 2, zero, zero, p.f, p.fc, p.c, -p.c), p.u, p.a)),
            [] { return "case (c) with a1 != a2 passed Jacobi"; });

    t.check(refused(Dim6Case::BialgebraD, p), [] { return "case (d) accepted a != 0"; });
    t.check(!family_predicate(g, literal_xi(case_analysis_bivector(g, 1, 2, p.e, p.ec, p.f, p.fc, p.c, -p.c), p.u, p.a)),
            [] { return "case (d) with a != 0 passed Jacobi"; });

    Dim6Params q = p;
    q.u[O::em1] = s.nonzero();
    t.check(refused(Dim6Case::GybeP, q), [] { return "GYBE family accepted u outside S"; });
    const Bivector rg = Bivector::wedge(g.algebra.basis(O::e0), q.u) +
                        case_analysis_bivector(g, 1, 2, q.e, q.ec, q.f, q.fc, q.c, -q.c);
    t.check(!gybe_check(g.algebra, rg), [] { return "GYBE family with u outside S solved GYBE"; });

    Dim6Params w = s.cyb_point();
    w.u = s.in_s(g);
    w.c += s.nonzero();
    while (w.c * w.c == w.e * w.e + w.ec * w.ec - w.f * w.f - w.fc * w.fc) w.c += 1;
    t.check(refused(Dim6Case::CybeP, w), [] { return "CYBE family accepted c^2 != a^2 + ac^2 - b^2 - bc^2"; });
    const Bivector rc = Bivector::wedge(g.algebra.basis(O::e0), w.u) +
                        case_analysis_bivector(g, 1, 2, w.e, w.ec, w.f, w.fc, w.c, -w.c);
    t.check(!cybe_check(g.algebra, rc), [] { return "CYBE family off the quadric solved CYBE"; });
    ++violating;
  }
  t.note(std::to_string(violating) + " constraint-violating draws for each constrained case");

  // Case analysis over a grid of pair bivectors p + c1 t1 + c2 t2.
  const std::vector<Scalar> v3{-1, 0, 1};
  const std::vector<std::vector<Scalar>> as{{1, -1}, {1, 1}, {0, 0}, {1, 2}};
  std::size_t points = 0, cyb_sol = 0;
  for (const auto& e : v3)
    for (const auto& ec : v3)
      for (const auto& f : v3)
        for (const auto& fc : v3)
          for (const auto& c1 : v3)
            for (const auto& c2 : v3) {
              ++points;
              const Bivector r = case_analysis_bivector(g, 1, 2, e, ec, f, fc, c1, c2);
              auto at = [&] {
                return "(" + e.str() + "," + ec.str() + "," + f.str() + "," + fc.str() + "," + c1.str() + "," + c2.str() + ")";
              };
              const bool cy0 = condition_cyb1(g, r, 0).is_zero();
              cyb_sol += cy0;
              t.check(cy0 == predicted_cyb1_zero_alpha(e, ec, f, fc, c1, c2), [&] { return "cyb1(alpha=0) case analysis at " + at(); });
              t.check(condition_cyb1(g, r, 1).is_zero() == r.is_zero(), [&] { return "cyb1(alpha=1) case analysis at " + at(); });
              for (const Scalar& al : {Scalar(0), Scalar(1)})
                t.check(condition_gyb1(g, r, al).is_zero() == predicted_gyb1(e, ec, f, fc, c1, c2, al),
                        [&] { return "gyb1(alpha=" + al.str() + ") case analysis at " + at(); });
              for (const auto& a : as)
                t.check(condition_boucetta(g, r, a).is_zero() == predicted_boucetta(e, ec, f, fc, c1, c2, a[0], a[1]),
                        [&] { return "bialgebra condition (a=" + a[0].str() + "," + a[1].str() + ") case analysis at " + at(); });
            }
  t.note("case-analysis grid: " + std::to_string(points) + " points, " + std::to_string(cyb_sol) + " solve cyb1 with alpha=0");
}

}  // namespace lieyb::detail
