#include "lieyb/scalar.hpp"

#include <cctype>

#include "lieyb/errors.hpp"

namespace lieyb {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error("Scalar: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar::Scalar(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("Scalar: division by zero");
  v_ /= o.v_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

}  // namespace lieyb
