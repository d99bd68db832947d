#include <doctest.h>

#include <random>

#include "lieyb/catalog.hpp"
#include "lieyb/oracles.hpp"
#include "lieyb/structure.hpp"

using namespace lieyb;
using O = OscillatorAlgebra;

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  Scalar scalar() {
    std::uniform_int_distribution<long> p(-2, 2), q(1, 2);
    const long n = p(eng);
    return Scalar(n, q(eng));
  }
  Vector vector(std::size_t d) {
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = scalar();
    return v;
  }
  Bivector bivector(std::size_t d) {
    Bivector r(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) r.set(i, j, scalar());
    return r;
  }
  Bivector wedge2_s(const OscillatorAlgebra& g) {
    Bivector r(g.dim());
    for (std::size_t i = 2; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j) r.set(i, j, scalar());
    return r;
  }
};

std::vector<LieAlgebra> algebra_pool() {
  return {sl2_algebra(), build_oscillator({1}).algebra, heisenberg_algebra(2), build_oscillator({1, 2, 4}).algebra,
          direct_sum(sl2_algebra(), build_oscillator({1, 3}).algebra), build_oscillator({1, 2, 4, 8}).algebra};
}

}  // namespace

TEST_CASE("sharp pairs with the bivector") {
  Rng rng(1);
  for (std::size_t d = 2; d <= 6; ++d) {
    const Bivector r = rng.bivector(d);
    const Covector a(rng.vector(d).components()), b(rng.vector(d).components());
    CHECK(pair(b, r.sharp(a)) == r(a, b));
    CHECK(r(a, b) == -r(b, a));
  }
}

TEST_CASE("ad dagger is a derivation of the wedge") {
  for (const LieAlgebra& g : algebra_pool())
    for (std::size_t u = 0; u < g.dim(); ++u)
      for (std::size_t x = 0; x < g.dim(); ++x)
        for (std::size_t y = x + 1; y < g.dim(); ++y) {
          const Vector bu = g.basis(u), bx = g.basis(x), by = g.basis(y);
          const Bivector lhs = ad_dag(g, bu, Bivector::basis(g.dim(), x, y));
          CHECK(lhs == Bivector::wedge(g.bracket(bu, bx), by) + Bivector::wedge(bx, g.bracket(bu, by)));
        }
}

TEST_CASE("ad of the Schouten square is twice the polarized pairing") {
  Rng rng(2);
  for (const LieAlgebra& g : algebra_pool())
    for (int n = 0; n < 5; ++n) {
      const Bivector r = rng.bivector(g.dim());
      const Vector u = rng.vector(g.dim());
      CHECK(ad_trivector(g, u, schouten_self(g, r)) == Scalar(2) * schouten_pair(g, ad_dag(g, u, r), r));
    }
}

TEST_CASE("constructed algebras satisfy Jacobi") {
  for (const LieAlgebra& g : algebra_pool()) CHECK(!find_jacobi_violation(g.constants()).has_value());
  for (const auto& l : {std::pair<long, long>{1, 2}, {1, 3}}) {
    const ExampleBundle b = example_41(l.first, l.second);
    CHECK(!find_jacobi_violation(r_bracket(b.algebra, b.r).algebra.constants()).has_value());
  }
}

TEST_CASE("J_a is a derivation commuting with ad e-1") {
  Rng rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Scalar> lam;
    for (std::size_t k = 0; k < n; ++k) lam.push_back(Scalar(1L << k));
    const OscillatorAlgebra g = build_oscillator(lam);
    const Matrix ad = g.algebra.ad_basis(O::em1);
    for (int t = 0; t < 50; ++t) {
      std::vector<Scalar> a;
      for (std::size_t k = 0; k < n; ++k) a.push_back(rng.scalar());
      const SkewDerivation j = j_a(g, a);
      CHECK(j.map.is_derivation(g.algebra));
      CHECK(j.map.matrix() * ad == ad * j.map.matrix());
    }
  }
}

TEST_CASE("omega pairing is symmetric and bilinear") {
  Rng rng(4);
  const OscillatorAlgebra g = build_oscillator({1, 2, 4});
  for (int t = 0; t < 20; ++t) {
    const Bivector r1 = rng.wedge2_s(g), r2 = rng.wedge2_s(g), r3 = rng.wedge2_s(g);
    const Scalar c = rng.scalar();
    CHECK(omega_pair(g, r1, r2) == omega_pair(g, r2, r1));
    CHECK(omega_pair(g, r1 + c * r3, r2) == omega_pair(g, r1, r2) + c * omega_pair(g, r3, r2));
  }
}

TEST_CASE("coboundary dual equals the r-bracket") {
  Rng rng(5);
  for (const LieAlgebra& g : algebra_pool())
    for (int t = 0; t < 5; ++t) {
      const Bivector r = rng.bivector(g.dim());
      CHECK(dual_constants(coboundary(g, r)) == r_bracket_constants(g, r));
    }
}

TEST_CASE("coadjoint action is skew for the dual metric") {
  const OscillatorAlgebra g = build_oscillator({1, 2});
  const DualMetric m = dual_metric(k_lambda(g));
  const std::size_t d = g.dim();
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Covector ua = g.algebra.coadjoint(g.algebra.basis(u), Covector::unit(d, a));
        const Covector ub = g.algebra.coadjoint(g.algebra.basis(u), Covector::unit(d, b));
        Scalar s;
        for (std::size_t k = 0; k < d; ++k) {
          s += ua[k] * m.matrix(k, b);
          s += m.matrix(a, k) * ub[k];
        }
        CHECK(s.is_zero());
      }
}

TEST_CASE("isotropic image characterizes cyb1 at alpha zero") {
  Rng rng(6);
  const OscillatorAlgebra g = build_oscillator({1, 2, 4});
  std::size_t iso = 0;
  for (int t = 0; t < 60; ++t) {
    Bivector r(g.dim());
    // sparse draws hit both sides of the equivalence
    std::bernoulli_distribution keep(0.2);
    for (std::size_t i = 2; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j)
        if (keep(rng.eng)) r.set(i, j, rng.scalar());
    bool isotropic = true;
    for (std::size_t a : g.s_indices)
      for (std::size_t b : g.s_indices)
        if (!omega(g, r.sharp(Covector::unit(g.dim(), a)), r.sharp(Covector::unit(g.dim(), b))).is_zero())
          isotropic = false;
    iso += isotropic;
    CHECK(condition_cyb1(g, r, 0).is_zero() == isotropic);
  }
  CHECK(iso > 0);
  CHECK(iso < 60);
}

TEST_CASE("CYBE kernel is an abelian ideal and the image a subalgebra") {
  Rng rng(7);
  const OscillatorAlgebra g = build_oscillator({1, 2});
  for (int t = 0; t < 20; ++t) {
    Dim6Params p;
    p.e = rng.scalar();
    p.c = p.e;
    p.u = Vector(6);
    p.u[O::e(1)] = rng.scalar();
    p.u[O::ec(2)] = rng.scalar();
    const Bivector r = *dim6_family(g, Dim6Case::CybeP, p).r;
    const DualGeometryReport rep = geometry_report(g.algebra, k_lambda(g), r);
    CHECK(rep.kernel_abelian_ideal);
    CHECK(rep.image_subalgebra);
    CHECK(rep.flat);
    CHECK(rep.unimodular);
  }
}
