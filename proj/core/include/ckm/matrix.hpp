#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ckm/rational.hpp"

namespace ckm {

/// Dense rational matrix, row major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Rank over the rationals.  Rows are cleared of denominators and the
/// elimination is fraction free (Bareiss), so intermediate values stay
/// integral.
std::size_t rank_exact(const QMatrix& m);

/// Solution of A x = b for square nonsingular A; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(const QMatrix& a,
                                                  std::span<const Rational> b);

/// Solution of A X = B for square nonsingular A; nullopt when A is singular.
std::optional<QMatrix> solve_matrix(const QMatrix& a, const QMatrix& b);

/// Basis of { x : A x = 0 }, one vector per free column of the RREF,
/// in ascending free-column order.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& a);

/// Incremental row space with exact elimination; add() reports whether the
/// vector enlarged the span.
class RowSpan {
public:
  explicit RowSpan(std::size_t width) : width_(width) {}

  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;   // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivots_;           // pivot column of each row
};

}  // namespace ckm
