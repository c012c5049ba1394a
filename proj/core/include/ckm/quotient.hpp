#pragma once

#include <vector>

#include "ckm/groebner.hpp"
#include "ckm/matrix.hpp"

namespace ckm {

/// Finite-dimensional quotient A/I presented on its standard-monomial basis.
/// Multiplication matrices act on coordinate columns: column c of matrix i
/// holds the normal form of x_i * m_c.
class QuotientAlgebra {
public:
  explicit QuotientAlgebra(ReducedGroebnerBasis gb);

  const Ring& ring() const { return gb_.ring(); }
  const ReducedGroebnerBasis& groebner() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const QMatrix& mul_matrix(std::size_t var) const;

  std::size_t index_of(const Monomial& m) const;  // m must be standard

  std::vector<Rational> coords(const Polynomial& p) const;
  Polynomial from_coords(std::span<const Rational> c) const;

  /// Product in the quotient, in coordinates.
  std::vector<Rational> multiply(std::span<const Rational> a,
                                 std::span<const Rational> b) const;

private:
  ReducedGroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::vector<QMatrix> mul_;
};

QuotientAlgebra quotient_algebra(const ReducedGroebnerBasis& gb);

/// Monic least-degree univariate polynomial (in the variable "z") annihilating
/// the image of variable `var` in the quotient; degree <= dim.
Polynomial minimal_polynomial(const QuotientAlgebra& q, std::size_t var);

}  // namespace ckm
