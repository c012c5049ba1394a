#pragma once

#include <vector>

#include "ckm/quotient.hpp"

namespace ckm {

/// Radical of a cofinite ideal: adds the squarefree part of every variable's
/// minimal polynomial and recomputes the reduced basis.  Idempotent; the
/// rational zero set is unchanged.
ReducedGroebnerBasis radical_zero_dim(const ReducedGroebnerBasis& gb);

/// All rational roots of a nonzero univariate polynomial, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

/// The rational points cut out by a cofinite radical ideal, sorted
/// lexicographically.  Throws NonRationalPoint unless the points account for
/// the whole quotient dimension.
std::vector<std::vector<Rational>> maximal_points(const ReducedGroebnerBasis& radical_gb);

/// CRT idempotents e_1..e_k (as standard-monomial coordinate tuples) with
/// e_j(points[m]) = delta_jm.  Requires |points| = dim A/J.
std::vector<std::vector<Rational>> crt_idempotents(
    const QuotientAlgebra& q, const std::vector<std::vector<Rational>>& points);

}  // namespace ckm
