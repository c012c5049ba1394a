#include "ckm/quotient.hpp"

#include <algorithm>

#include "ckm/errors.hpp"

namespace ckm {

QuotientAlgebra::QuotientAlgebra(ReducedGroebnerBasis gb)
    : gb_(std::move(gb)), basis_(standard_monomials(gb_)) {
  const std::size_t n = ring().nvars();
  const std::size_t d = basis_.size();
  mul_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    QMatrix m(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Polynomial image = normal_form(
          Polynomial::variable(ring(), v) *
              Polynomial::from_monomial(ring(), basis_[c]),
          gb_);
      for (const auto& [mono, coeff] : image.terms()) {
        m.at(index_of(mono), c) = coeff;
      }
    }
    mul_.push_back(std::move(m));
  }
}

const QMatrix& QuotientAlgebra::mul_matrix(std::size_t var) const {
  require(var < mul_.size(), ErrorCode::Internal, "variable index out of range");
  return mul_[var];
}

std::size_t QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m);
  require(it != basis_.end() && *it == m, ErrorCode::Internal,
          "monomial is not standard for this quotient");
  return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<Rational> QuotientAlgebra::coords(const Polynomial& p) const {
  require(p.ring() == ring(), ErrorCode::RingMismatch,
          "polynomial ring differs from quotient ring");
  Polynomial nf = normal_form(p, gb_);
  std::vector<Rational> out(dim());
  for (const auto& [mono, coeff] : nf.terms()) {
    out[index_of(mono)] = coeff;
  }
  return out;
}

Polynomial QuotientAlgebra::from_coords(std::span<const Rational> c) const {
  require(c.size() == dim(), ErrorCode::Internal, "coordinate length mismatch");
  Polynomial out(ring());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.add_term(basis_[i], c[i]);
  }
  return out;
}

std::vector<Rational> QuotientAlgebra::multiply(std::span<const Rational> a,
                                                std::span<const Rational> b) const {
  return coords(from_coords(a) * from_coords(b));
}

QuotientAlgebra quotient_algebra(const ReducedGroebnerBasis& gb) {
  return QuotientAlgebra(gb);
}

Polynomial minimal_polynomial(const QuotientAlgebra& q, std::size_t var) {
  require(var < q.ring().nvars(), ErrorCode::Internal, "variable index out of range");
  const std::size_t d = q.dim();
  Ring z({"z"});
  if (d == 0) {
    // Zero algebra: every element is annihilated by the constant 1.
    return Polynomial::constant(z, Rational(1));
  }

  // Powers of x_var applied to 1, as coordinate columns.
  std::vector<std::vector<Rational>> powers;
  std::vector<Rational> cur(d);
  cur[q.index_of(Monomial::one(q.ring().nvars()))] = Rational(1);
  powers.push_back(cur);

  const QMatrix& m = q.mul_matrix(var);
  for (std::size_t k = 1; k <= d; ++k) {
    cur = m.apply(powers.back());
    // Solve powers * c = cur for the least k where possible.
    QMatrix lhs(d, k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < d; ++i) lhs.at(i, j) = powers[j][i];
    }
    // Overdetermined consistency check via row reduction on [lhs | cur].
    QMatrix aug(d, k + 1);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = lhs.at(i, j);
      aug.at(i, k) = cur[i];
    }
    if (rank_exact(lhs) == rank_exact(aug)) {
      // Dependent: extract coefficients from the kernel of [lhs | -cur].
      QMatrix sys(d, k + 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) sys.at(i, j) = lhs.at(i, j);
        sys.at(i, k) = -cur[i];
      }
      for (const auto& v : kernel_basis(sys)) {
        if (v[k].is_zero()) continue;
        Polynomial out(z);
        Rational scale = v[k].inverse();
        out.add_term(Monomial(std::vector<int>{static_cast<int>(k)}), Rational(1));
        for (std::size_t j = 0; j < k; ++j) {
          out.add_term(Monomial(std::vector<int>{static_cast<int>(j)}),
                       -(v[j] * scale));
        }
        return out;
      }
      fail(ErrorCode::Internal, "dependence detected but no kernel vector");
    }
    powers.push_back(cur);
  }
  fail(ErrorCode::Internal, "no minimal polynomial within dimension bound");
}

}  // namespace ckm
