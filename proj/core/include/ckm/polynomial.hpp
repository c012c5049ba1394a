#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ckm/monomial.hpp"
#include "ckm/rational.hpp"

namespace ckm {

/// Named polynomial ring over the rationals.  Cheap to copy; two rings are
/// interchangeable iff their variable lists are equal.
class Ring {
public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t nvars() const { return vars_->size(); }
  const std::vector<std::string>& vars() const { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in ascending grevlex order with no zero coefficients.
class Polynomial {
public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial from_monomial(const Ring& ring, const Monomial& m,
                                  const Rational& c = Rational(1));

  /// Grammar: sum of terms, each `coeff ('*' var ('^' uint)?)*` or a product
  /// of variable powers with implicit coefficient 1.
  static Polynomial parse(std::string_view text, const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;
  Rational eval(std::span<const Rational> point) const;
  Polynomial monic() const;

  /// Canonical form: terms in descending order, reduced coefficients,
  /// no spaces.  parse(str()) reproduces the polynomial exactly.
  std::string str() const;

private:
  Ring ring_;
  std::map<Monomial, Rational> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// Univariate helpers; all of these reject polynomials in several variables.
Polynomial derivative(const Polynomial& p);
std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& p,
                                                    const Polynomial& d);
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b);

/// Monic product of the distinct irreducible factors: p / gcd(p, p').
Polynomial squarefree_part(const Polynomial& p);

/// Image of a univariate polynomial under z -> (variable `index` of `ring`).
Polynomial substitute_variable(const Polynomial& p, const Ring& ring,
                               std::size_t index);

}  // namespace ckm
