#pragma once

#include <optional>
#include <vector>

#include "ckm/polynomial.hpp"

namespace ckm {

/// Finitely generated ideal; generators are nonzero and share one ring.
/// Generator order never influences any derived result.
class Ideal {
public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

/// Unique reduced Groebner basis under grevlex: elements monic, sorted by
/// leading monomial, no term divisible by another element's leading monomial.
class ReducedGroebnerBasis {
public:
  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_unit_ideal() const;

  friend bool operator==(const ReducedGroebnerBasis& a,
                         const ReducedGroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.elems_ == b.elems_;
  }

private:
  friend ReducedGroebnerBasis buchberger(const Ideal& ideal);
  ReducedGroebnerBasis(Ring ring, std::vector<Polynomial> elems)
      : ring_(std::move(ring)), elems_(std::move(elems)) {}

  Ring ring_;
  std::vector<Polynomial> elems_;
};

ReducedGroebnerBasis buchberger(const Ideal& ideal);

/// Fully reduced remainder: no term divisible by any basis leading monomial,
/// p - result in the ideal.  Linear in p and idempotent.
Polynomial normal_form(const Polynomial& p, const ReducedGroebnerBasis& gb);

/// dim A/I when the quotient is finite dimensional, nullopt otherwise.
/// Finite dimensionality is read off the staircase: every variable needs a
/// pure power among the leading monomials.
std::optional<std::size_t> cofinite_dimension(const ReducedGroebnerBasis& gb);

/// Standard monomials (not divisible by any leading monomial), ascending.
/// Throws NotCofinite when the staircase is infinite.
std::vector<Monomial> standard_monomials(const ReducedGroebnerBasis& gb);

/// Generated by all pairwise products of generators.
Ideal ideal_product(const Ideal& a, const Ideal& b);

}  // namespace ckm
