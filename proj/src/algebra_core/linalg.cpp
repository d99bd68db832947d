#include "lieyb/linalg.hpp"

#include <algorithm>
#include <utility>

namespace lieyb {

Scalar pair(const Covector& alpha, const Vector& x) {
  if (alpha.size() != x.size()) throw DimensionMismatch("pairing of covector and vector of different length");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s.add_product(alpha[i], x[i]);
  return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j).add_product(aik, b(k, j));
    }
  return out;
}

namespace {

// Integer rows spanning the same space as the rational rows, plus the
// factor each row was multiplied by.
std::pair<std::vector<std::vector<mpz_class>>, std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  std::vector<mpz_class> scale(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    scale[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
  }
  return {std::move(rows), std::move(scale)};
}

// Rational reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& a, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = Scalar(1) / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = -a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j).add_product(f, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

EchelonForm bareiss(const Matrix& m) {
  EchelonForm ef;
  ef.rows = integer_rows(m).first;
  auto& a = ef.rows;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++ef.swaps;
    }
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ef.pivots.push_back(c);
    ++r;
  }
  return ef;
}

std::size_t rank(const Matrix& m) { return bareiss(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const EchelonForm ef = bareiss(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    for (std::size_t k = ef.rank(); k-- > 0;) {
      const std::size_t pc = ef.pivots[k];
      Scalar acc;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (x[j].is_zero() || ef.rows[k][j] == 0) continue;
        acc.add_product(Scalar(mpq_class(ef.rows[k][j])), x[j]);
      }
      x[pc] = -acc / Scalar(mpq_class(ef.rows[k][pc]));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  const auto scale = integer_rows(m).second;
  const EchelonForm ef = bareiss(m);
  if (ef.rank() < m.rows()) return Scalar(0);
  mpz_class scale_product = 1;
  for (const auto& s : scale) scale_product *= s;
  mpq_class det(ef.rows[m.rows() - 1][m.cols() - 1], scale_product);
  det.canonicalize();
  if (ef.swaps % 2) det = -det;
  return Scalar(det);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (rref_in_place(aug, n).size() < n) throw Degenerate("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref_in_place(aug, n);
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (!aug(i, n).is_zero()) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, n);
  return x;
}

Matrix row_space_basis(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref_in_place(a, a.cols());
  Matrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

std::vector<Scalar> congruence_diagonal(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw NotSymmetric("congruence diagonalization needs a symmetric matrix");
  Matrix s = symmetric;
  const std::size_t n = s.rows();
  auto add_to = [&](std::size_t dst, std::size_t src) {  // row and column op
    for (std::size_t j = 0; j < n; ++j) s(dst, j) += s(src, j);
    for (std::size_t i = 0; i < n; ++i) s(i, dst) += s(i, src);
  };
  auto swap_idx = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (s(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && s(j, j).is_zero()) ++j;
      if (j < n) {
        swap_idx(j, k);
      } else {
        j = k + 1;
        while (j < n && s(k, j).is_zero()) ++j;
        if (j == n) continue;  // row k already zero off the diagonal
        add_to(k, j);          // s(k,k) becomes 2 s(k,j) != 0
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s(i, k).is_zero()) continue;
      Scalar f = -(s(i, k) / s(k, k));
      for (std::size_t j = 0; j < n; ++j) s(i, j).add_product(f, s(k, j));
      for (std::size_t r = 0; r < n; ++r) s(r, i).add_product(f, s(r, k));
    }
  }
  std::vector<Scalar> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = s(i, i);
  return diag;
}

Signature signature(const Matrix& symmetric) {
  Signature sig;
  for (const auto& d : congruence_diagonal(symmetric)) {
    if (d.sign() > 0) ++sig.positive;
    else if (d.sign() < 0) ++sig.negative;
    else ++sig.zero;
  }
  return sig;
}

}  // namespace lieyb
