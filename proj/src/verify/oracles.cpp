#include "lieyb/oracles.hpp"

#include <map>
#include <tuple>

namespace lieyb {

namespace {

using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

// acc += coef * x ^ b_p ^ b_q, stored on sorted index triples
void add_wedge(std::map<Key, Scalar>& acc, const Scalar& coef, const Vector& x, std::size_t p, std::size_t q) {
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (x[m].is_zero() || m == p || m == q || p == q) continue;
    std::size_t a[3] = {m, p, q};
    int sign = 1;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2 - s; ++t)
        if (a[t] > a[t + 1]) {
          std::swap(a[t], a[t + 1]);
          sign = -sign;
        }
    Scalar v = coef * x[m];
    if (sign < 0) v = -v;
    acc[{a[0], a[1], a[2]}] += v;
  }
}

}  // namespace

Trivector schouten_oracle(const LieAlgebra& g, const Bivector& r) {
  const std::size_t d = g.dim();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!r(i, j).is_zero()) terms.emplace_back(i, j, r(i, j));

  std::map<Key, Scalar> acc;
  for (const auto& [x, y, cxy] : terms)
    for (const auto& [z, w, czw] : terms) {
      const Scalar c = cxy * czw;
      add_wedge(acc, c, g.bracket(g.basis(x), g.basis(z)), y, w);
      add_wedge(acc, -c, g.bracket(g.basis(x), g.basis(w)), y, z);
      add_wedge(acc, -c, g.bracket(g.basis(y), g.basis(z)), x, w);
      add_wedge(acc, c, g.bracket(g.basis(y), g.basis(w)), x, z);
    }
  Trivector t(d);
  for (const auto& [k, v] : acc)
    if (!v.is_zero()) t.set(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
  return t;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const std::size_t d1 = g1.dim(), d = d1 + g2.dim();
  StructureConstants c = zero_constants(d);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d1; ++k) c[i][j][k] = g1.constant(i, j, k);
  for (std::size_t i = 0; i < g2.dim(); ++i)
    for (std::size_t j = 0; j < g2.dim(); ++j)
      for (std::size_t k = 0; k < g2.dim(); ++k) c[d1 + i][d1 + j][d1 + k] = g2.constant(i, j, k);
  std::vector<std::string> labels = g1.labels();
  for (const auto& l : g2.labels()) labels.push_back(l + "'");
  return LieAlgebra::validate(std::move(c), std::move(labels));
}

}  // namespace lieyb
