#ifndef LIEYB_LINALG_HPP
#define LIEYB_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lieyb/errors.hpp"
#include "lieyb/scalar.hpp"

namespace lieyb {

struct PrimalTag {};
struct DualTag {};

/// Coordinates in a fixed basis. The tag separates vectors of the algebra
/// from covectors on it; the only bridge between them is pair().
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t n) : c_(n) {}
  explicit Coords(std::vector<Scalar> c) : c_(std::move(c)) {}
  Coords(std::initializer_list<Scalar> c) : c_(c) {}

  static Coords zero(std::size_t n) { return Coords(n); }
  static Coords unit(std::size_t n, std::size_t i) {
    Coords v(n);
    v.c_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Scalar>& components() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Coords& operator+=(const Coords& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Coords& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  /// this += s * o
  void axpy(const Scalar& s, const Coords& o) {
    check(o);
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i].add_product(s, o.c_[i]);
  }

  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator-(Coords a) { return a *= Scalar(-1); }
  friend Coords operator*(const Scalar& s, Coords a) { return a *= s; }
  friend bool operator==(const Coords& a, const Coords& b) { return a.c_ == b.c_; }

 private:
  void check(const Coords& o) const {
    if (o.c_.size() != c_.size()) throw DimensionMismatch("coordinate length mismatch");
  }
  std::vector<Scalar> c_;
};

using Vector = Coords<PrimalTag>;
using Covector = Coords<DualTag>;

/// <alpha, x> = sum_i alpha_i x_i
Scalar pair(const Covector& alpha, const Vector& x);

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Fraction-free (Bareiss) echelon form. Rows are first scaled to integers,
/// which changes neither the row space nor the kernel.
struct EchelonForm {
  std::vector<std::vector<mpz_class>> rows;  ///< echelon rows, rank() of them nonzero
  std::vector<std::size_t> pivots;           ///< pivot column of each nonzero row
  int swaps = 0;                             ///< row exchanges (determinant sign)
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm bareiss(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact basis of { x : M x = 0 }, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Throws Degenerate for singular input.
Matrix inverse(const Matrix& m);

/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Reduced row echelon basis of the row space (rows of the result).
Matrix row_space_basis(const Matrix& m);

/// Diagonal of P^T S P for some invertible rational P (congruence
/// diagonalization of a symmetric matrix). Signs give the signature.
std::vector<Scalar> congruence_diagonal(const Matrix& symmetric);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Signature signature(const Matrix& symmetric);

}  // namespace lieyb

#endif  // LIEYB_LINALG_HPP
