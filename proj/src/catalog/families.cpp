#include <algorithm>

#include "lieyb/catalog.hpp"

namespace lieyb {

namespace {

using O = OscillatorAlgebra;

Vector e0_vec(const OscillatorAlgebra& g) { return g.algebra.basis(O::e0); }

void require_n(const OscillatorAlgebra& g, std::size_t n) {
  if (g.n() != n) throw DimensionMismatch("family needs an oscillator algebra with n = " + std::to_string(n));
}

void require_in_s(const Vector& u, const char* what) {
  if (!u[O::em1].is_zero() || !u[O::e0].is_zero()) throw ConstraintViolated(std::string(what) + " must lie in S");
}

Cocycle literal_cocycle(const OscillatorAlgebra& g, const Bivector& r, const Vector& u0, const std::vector<Scalar>& a) {
  require_in_s(u0, "u0");
  return thm11_cocycle_scaled(g, BialgebraParams{r, u0, a}, Scalar(1));
}

}  // namespace

EFBasis ef_basis(const OscillatorAlgebra& g, std::size_t i, std::size_t j) {
  if (i < 1 || j <= i || j > g.n()) throw BadIndices("need 1 <= i < j <= n");
  const std::size_t d = g.dim();
  EFBasis b;
  b.r = Bivector::basis(d, O::e(i), O::e(j));
  b.rc = Bivector::basis(d, O::ec(i), O::ec(j));
  b.s = Bivector::basis(d, O::e(i), O::ec(j));
  b.sc = Bivector::basis(d, O::ec(i), O::e(j));
  b.ti = t_bivector(g, i);
  b.tj = t_bivector(g, j);
  b.E = b.s + b.sc;
  b.Ec = b.rc - b.r;
  b.F = b.sc - b.s;
  b.Fc = b.r + b.rc;
  return b;
}

Bivector t_bivector(const OscillatorAlgebra& g, std::size_t i) {
  if (i < 1 || i > g.n()) throw BadIndices("t_i needs 1 <= i <= n");
  return Bivector::basis(g.dim(), O::e(i), O::ec(i));
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Bialgebra: return "bialgebra";
    case FamilyKind::Gybe: return "gybe";
    case FamilyKind::Cybe: return "cybe";
  }
  return "";
}

bool family_predicate(const OscillatorAlgebra& g, const FamilyRealization& f) {
  switch (f.kind) {
    case FamilyKind::Bialgebra:
      return cocycle_check(g.algebra, *f.xi).ok() && !find_jacobi_violation(dual_constants(*f.xi));
    case FamilyKind::Gybe: return gybe_check(g.algebra, *f.r);
    case FamilyKind::Cybe: return cybe_check(g.algebra, *f.r);
  }
  return false;
}

FamilyRealization dim4_family(const OscillatorAlgebra& g, FamilyKind kind, const Dim4Params& p) {
  require_n(g, 1);
  const Vector u = p.u.size() ? p.u : Vector(g.dim());
  FamilyRealization out;
  out.kind = kind;
  const Bivector t1 = t_bivector(g, 1);
  switch (kind) {
    case FamilyKind::Bialgebra: out.xi = literal_cocycle(g, p.alpha * t1, u, {p.a}); break;
    case FamilyKind::Gybe: out.r = Bivector::wedge(e0_vec(g), u) + p.alpha * t1; break;
    case FamilyKind::Cybe: out.r = Bivector::wedge(e0_vec(g), u); break;
  }
  return out;
}

std::string to_string(Dim6Case c) {
  switch (c) {
    case Dim6Case::BialgebraA: return "bialgebra-a";
    case Dim6Case::BialgebraB: return "bialgebra-b";
    case Dim6Case::BialgebraC: return "bialgebra-c";
    case Dim6Case::BialgebraD: return "bialgebra-d";
    case Dim6Case::GybeT: return "gybe-t";
    case Dim6Case::GybeP: return "gybe-p";
    case Dim6Case::CybeU: return "cybe-u";
    case Dim6Case::CybeP: return "cybe-p";
  }
  return "";
}

const std::vector<Dim6Case>& all_dim6_cases() {
  static const std::vector<Dim6Case> all{Dim6Case::BialgebraA, Dim6Case::BialgebraB, Dim6Case::BialgebraC,
                                         Dim6Case::BialgebraD, Dim6Case::GybeT,      Dim6Case::GybeP,
                                         Dim6Case::CybeU,      Dim6Case::CybeP};
  return all;
}

std::optional<Dim6Case> dim6_case_from_string(const std::string& s) {
  for (auto c : all_dim6_cases())
    if (to_string(c) == s) return c;
  return std::nullopt;
}

FamilyKind kind_of(Dim6Case c) {
  switch (c) {
    case Dim6Case::GybeT:
    case Dim6Case::GybeP: return FamilyKind::Gybe;
    case Dim6Case::CybeU:
    case Dim6Case::CybeP: return FamilyKind::Cybe;
    default: return FamilyKind::Bialgebra;
  }
}

Bivector case_analysis_bivector(const OscillatorAlgebra& g, std::size_t i, std::size_t j, const Scalar& e,
                                const Scalar& ec, const Scalar& f, const Scalar& fc, const Scalar& ci,
                                const Scalar& cj) {
  const EFBasis b = ef_basis(g, i, j);
  return e * b.E + ec * b.Ec + f * b.F + fc * b.Fc + ci * b.ti + cj * b.tj;
}

FamilyRealization dim6_family(const OscillatorAlgebra& g, Dim6Case which, const Dim6Params& p) {
  require_n(g, 2);
  if (p.a.size() != 2) throw DimensionMismatch("J_a needs two parameters");
  const Vector u = p.u.size() ? p.u : Vector(g.dim());
  const Scalar zero;
  const Scalar& a1 = p.a[0];
  const Scalar& a2 = p.a[1];
  FamilyRealization out;
  out.kind = kind_of(which);
  const Bivector e0u = Bivector::wedge(e0_vec(g), u);
  switch (which) {
    case Dim6Case::BialgebraA:
      out.xi = literal_cocycle(g, case_analysis_bivector(g, 1, 2, zero, zero, zero, zero, p.c1, p.c2), u, p.a);
      break;
    case Dim6Case::BialgebraB:
      if (!(a1 + a2).is_zero()) throw ConstraintViolated("case (b) needs a = (s, -s)");
      out.xi = literal_cocycle(g, case_analysis_bivector(g, 1, 2, p.e, p.ec, zero, zero, p.c, -p.c), u, p.a);
      break;
    case Dim6Case::BialgebraC:
      if (!(a1 == a2)) throw ConstraintViolated("case (c) needs a = (s, s)");
      out.xi = literal_cocycle(g, case_analysis_bivector(g, 1, 2, zero, zero, p.f, p.fc, p.c, -p.c), u, p.a);
      break;
    case Dim6Case::BialgebraD:
      if (!a1.is_zero() || !a2.is_zero()) throw ConstraintViolated("case (d) needs a = 0");
      out.xi = literal_cocycle(g, case_analysis_bivector(g, 1, 2, p.e, p.ec, p.f, p.fc, p.c, -p.c), u, p.a);
      break;
    case Dim6Case::GybeT:
      out.r = e0u + case_analysis_bivector(g, 1, 2, zero, zero, zero, zero, p.c1, p.c2);
      break;
    case Dim6Case::GybeP:
      require_in_s(u, "u");
      out.r = e0u + case_analysis_bivector(g, 1, 2, p.e, p.ec, p.f, p.fc, p.c, -p.c);
      break;
    case Dim6Case::CybeU: out.r = e0u; break;
    case Dim6Case::CybeP:
      require_in_s(u, "u");
      if (!(p.c * p.c == p.e * p.e + p.ec * p.ec - p.f * p.f - p.fc * p.fc))
        throw ConstraintViolated("need c^2 = a^2 + ac^2 - b^2 - bc^2");
      out.r = e0u + case_analysis_bivector(g, 1, 2, p.e, p.ec, p.f, p.fc, p.c, -p.c);
      break;
  }
  return out;
}

bool predicted_cyb1_zero_alpha(const Scalar& e, const Scalar& ec, const Scalar& f, const Scalar& fc,
                               const Scalar& ci, const Scalar& cj) {
  return (ci + cj).is_zero() && ci * ci == e * e + ec * ec - f * f - fc * fc;
}

bool predicted_gyb1(const Scalar& e, const Scalar& ec, const Scalar& f, const Scalar& fc, const Scalar& ci,
                    const Scalar& cj, const Scalar& alpha) {
  const bool p_zero = e.is_zero() && ec.is_zero() && f.is_zero() && fc.is_zero();
  if (!alpha.is_zero()) return p_zero;
  return p_zero || (ci + cj).is_zero();
}

bool predicted_boucetta(const Scalar& e, const Scalar& ec, const Scalar& f, const Scalar& fc, const Scalar& ci,
                        const Scalar& cj, const Scalar& ai, const Scalar& aj) {
  const bool s_zero = (ci + cj).is_zero();
  const bool e_ok = (e.is_zero() && ec.is_zero()) || (s_zero && (ai + aj).is_zero());
  const bool f_ok = (f.is_zero() && fc.is_zero()) || (s_zero && ai == aj);
  return e_ok && f_ok;
}

Bivector block_sum(const OscillatorAlgebra& g, const Bivector& r1, std::pair<std::size_t, std::size_t> p1,
                   const Bivector& r2, std::pair<std::size_t, std::size_t> p2) {
  auto check_pair = [&](std::pair<std::size_t, std::size_t> p) {
    if (p.first < 1 || p.second <= p.first || p.second > g.n()) throw BadIndices("need 1 <= i < j <= n");
  };
  check_pair(p1);
  check_pair(p2);
  if (p1.first == p2.first || p1.first == p2.second || p1.second == p2.first || p1.second == p2.second)
    throw OverlappingIndices("index pairs share an index");
  auto check_support = [&](const Bivector& r, std::pair<std::size_t, std::size_t> p) {
    const std::vector<std::size_t> block{O::e(p.first), O::ec(p.first), O::e(p.second), O::ec(p.second)};
    auto inside = [&](std::size_t k) { return std::find(block.begin(), block.end(), k) != block.end(); };
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = a + 1; b < g.dim(); ++b)
        if (!r(a, b).is_zero() && !(inside(a) && inside(b)))
          throw ConstraintViolated("summand has components outside its index block");
  };
  check_support(r1, p1);
  check_support(r2, p2);
  return r1 + r2;
}

Bivector isotropic_solution(const OscillatorAlgebra& g, const std::vector<Vector>& f, const Matrix& mu) {
  const std::size_t m = f.size();
  for (const auto& v : f) {
    if (v.size() != g.dim()) throw DimensionMismatch("basis vector of F has wrong length");
    require_in_s(v, "F");
  }
  if (mu.rows() != m || mu.cols() != m) throw DimensionMismatch("mu must be a square matrix on F");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!omega(g, f[a], f[b]).is_zero()) throw NotIsotropic("F is not w-isotropic");
  if (!mu.is_skew()) throw DegenerateMu("mu is not skew");
  if (m % 2 != 0 || determinant(mu).is_zero()) throw DegenerateMu("mu is degenerate");
  Matrix fm(m, g.dim());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < g.dim(); ++k) fm(a, k) = f[a][k];
  if (rank(fm) != m) throw DegenerateMu("basis of F is linearly dependent");
  return Bivector(fm.transpose() * mu * fm);
}

}  // namespace lieyb
