#include "ckm/matrix.hpp"

#include <cassert>

#include "ckm/errors.hpp"

namespace ckm {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  require(cols_ == o.rows_, ErrorCode::Internal, "matrix shape mismatch in product");
  QMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> QMatrix::apply(std::span<const Rational> v) const {
  require(v.size() == cols_, ErrorCode::Internal, "matrix shape mismatch in apply");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

std::size_t rank_exact(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class den = m.at(i, j).den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      scale = scale / g * den;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      a[i][j] = q.num() * (scale / q.den());
    }
  }

  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        // Bareiss step: exact division by the previous pivot.
        mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// Gauss-Jordan on [A | B]; returns false when A is singular.
bool gauss_jordan(QMatrix& a, QMatrix& b) {
  const std::size_t n = a.rows();
  assert(a.cols() == n && b.rows() == n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(col, j), b.at(pivot, j));
    }
    Rational inv = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) a.at(col, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b.at(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) -= f * b.at(col, j);
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(const QMatrix& a,
                                                  std::span<const Rational> b) {
  require(a.rows() == a.cols() && b.size() == a.rows(), ErrorCode::Internal,
          "solve_linear expects a square system");
  QMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
  QMatrix lhs = a;
  if (!gauss_jordan(lhs, rhs)) return std::nullopt;
  std::vector<Rational> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs.at(i, 0);
  return x;
}

std::optional<QMatrix> solve_matrix(const QMatrix& a, const QMatrix& b) {
  require(a.rows() == a.cols() && b.rows() == a.rows(), ErrorCode::Internal,
          "solve_matrix expects a square system");
  QMatrix lhs = a, rhs = b;
  if (!gauss_jordan(lhs, rhs)) return std::nullopt;
  return rhs;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  QMatrix r = a;
  std::vector<std::optional<std::size_t>> pivot_of_col(cols);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && r.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r.at(rank, j), r.at(pivot, j));
    }
    Rational inv = r.at(rank, col).inverse();
    for (std::size_t j = col; j < cols; ++j) r.at(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || r.at(i, col).is_zero()) continue;
      Rational f = r.at(i, col);
      for (std::size_t j = col; j < cols; ++j) r.at(i, j) -= f * r.at(rank, j);
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = Rational(1);
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_of_col[col]) v[col] = -r.at(*pivot_of_col[col], free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpan::reduce(std::vector<Rational>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Rational f = c;
    for (std::size_t j = 0; j < width_; ++j) v[j] -= f * rows_[k][j];
  }
}

bool RowSpan::add(std::vector<Rational> v) {
  require(v.size() == width_, ErrorCode::Internal, "row width mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return false;
  Rational inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // Keep earlier rows reduced against the new pivot.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational f = rows_[k][p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < width_; ++j) rows_[k][j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpan::contains(std::vector<Rational> v) const {
  require(v.size() == width_, ErrorCode::Internal, "row width mismatch");
  reduce(v);
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace ckm
