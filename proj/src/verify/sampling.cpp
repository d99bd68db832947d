#include "sampling.hpp"

namespace lieyb::detail {

Scalar Sampler::scalar() {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  const long p = num(eng_);
  return Scalar(p, den(eng_));
}

Scalar Sampler::nonzero() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

Scalar Sampler::small() {
  std::uniform_int_distribution<long> num(-2, 2), den(1, 2);
  const long p = num(eng_);
  return Scalar(p, den(eng_));
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(eng_); }

std::size_t Sampler::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }

Bivector Sampler::bivector(std::size_t dim, double density) {
  Bivector r(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (coin(density)) r.set(i, j, scalar());
  return r;
}

Bivector Sampler::wedge2_s(const OscillatorAlgebra& g, double density) {
  Bivector r(g.dim());
  for (std::size_t i = 2; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (coin(density)) r.set(i, j, scalar());
  return r;
}

Vector Sampler::in_s(const OscillatorAlgebra& g, double density) {
  Vector v(g.dim());
  for (std::size_t i = 2; i < g.dim(); ++i)
    if (coin(density)) v[i] = scalar();
  return v;
}

Vector Sampler::vector(std::size_t dim, double density) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (coin(density)) v[i] = scalar();
  return v;
}

std::vector<Scalar> Sampler::scalars(std::size_t n) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(scalar());
  return out;
}

Bivector Sampler::pair_bivector(const OscillatorAlgebra& g, std::size_t i, std::size_t j) {
  const Scalar zero;
  switch (index(4)) {
    case 0: return case_analysis_bivector(g, i, j, zero, zero, zero, zero, scalar(), scalar());
    case 1: {
      const Scalar c = scalar();
      return case_analysis_bivector(g, i, j, scalar(), scalar(), zero, zero, c, -c);
    }
    case 2: {
      const Scalar c = scalar();
      return case_analysis_bivector(g, i, j, zero, zero, scalar(), scalar(), c, -c);
    }
    default: {
      const Scalar c = scalar();
      return case_analysis_bivector(g, i, j, scalar(), scalar(), scalar(), scalar(), c, coin() ? -c : scalar());
    }
  }
}

Dim6Params Sampler::cyb_point() {
  Dim6Params p;
  auto sign = [&](const Scalar& s) { return coin() ? s : -s; };
  if (coin()) {
    // c = +-e and f^2 + fc^2 = ec^2 through a rational point of the circle
    p.e = scalar();
    p.c = sign(p.e);
    p.ec = scalar();
    const Scalar t = scalar();
    const Scalar den = Scalar(1) + t * t;
    p.f = p.ec * (Scalar(1) - t * t) / den;
    p.fc = p.ec * Scalar(2) * t / den;
  } else {
    // a Pythagorean triple split between the two sides
    std::uniform_int_distribution<long> mn(1, 3);
    const long m = mn(eng_) + 1, n = mn(eng_) % m;
    const Scalar q = nonzero();
    const Scalar leg1 = Scalar(m * m - n * n) * q, leg2 = Scalar(2 * m * n) * q, hyp = Scalar(m * m + n * n) * q;
    p.e = sign(hyp);
    if (coin()) {
      p.c = sign(leg1);
      if (coin()) p.f = sign(leg2); else p.fc = sign(leg2);
    } else {
      p.c = sign(leg2);
      if (coin()) p.f = sign(leg1); else p.fc = sign(leg1);
    }
    if (coin()) std::swap(p.e, p.ec);
  }
  return p;
}

}  // namespace lieyb::detail
