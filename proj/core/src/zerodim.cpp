#include "ckm/zerodim.hpp"

#include <algorithm>

#include "ckm/errors.hpp"

namespace ckm {

ReducedGroebnerBasis radical_zero_dim(const ReducedGroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return gb;
  QuotientAlgebra q(gb);
  std::vector<Polynomial> gens = gb.elements();
  for (std::size_t v = 0; v < gb.ring().nvars(); ++v) {
    Polynomial m = minimal_polynomial(q, v);
    Polynomial s = squarefree_part(m);
    gens.push_back(substitute_variable(s, gb.ring(), v));
  }
  return buchberger(Ideal(gb.ring(), std::move(gens)));
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  mpz_class i = 1;
  for (; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  require(p.ring().nvars() == 1, ErrorCode::NotUnivariate,
          "rational roots of a multivariate polynomial");
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "rational roots of zero");

  // Strip the power of the variable: z^k contributes the root 0.
  std::vector<Rational> roots;
  Polynomial q = p;
  int low = q.terms().begin()->first[0];
  if (low > 0) {
    roots.push_back(Rational(0));
    Polynomial shifted(q.ring());
    for (const auto& [m, c] : q.terms()) {
      shifted.add_term(Monomial(std::vector<int>{m[0] - low}), c);
    }
    q = shifted;
  }
  if (q.total_degree() == 0) {
    return roots;
  }

  // Scale to integer coefficients: candidates are (divisor of constant) /
  // (divisor of leading coefficient), both signs.
  mpz_class scale = 1;
  for (const auto& [m, c] : q.terms()) {
    mpz_class den = c.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    scale = scale / g * den;
  }
  mpz_class constant = (q.constant_term() * Rational(scale)).num();
  mpz_class leading = (q.leading_coefficient() * Rational(scale)).num();

  for (const mpz_class& a : positive_divisors(constant)) {
    for (const mpz_class& b : positive_divisors(leading)) {
      for (int sign : {1, -1}) {
        Rational cand{mpq_class(sign * a, b)};
        std::vector<Rational> pt{cand};
        if (q.eval(pt).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::vector<Rational>> maximal_points(
    const ReducedGroebnerBasis& radical_gb) {
  QuotientAlgebra q(radical_gb);
  const std::size_t n = radical_gb.ring().nvars();
  const std::size_t dim = q.dim();
  if (dim == 0) return {};

  // Candidate grid: rational roots of each variable's minimal polynomial.
  std::vector<std::vector<Rational>> axis(n);
  for (std::size_t v = 0; v < n; ++v) {
    axis[v] = rational_roots(minimal_polynomial(q, v));
    require(!axis[v].empty(), ErrorCode::NonRationalPoint,
            "variable '" + radical_gb.ring().vars()[v] + "' has no rational value");
  }

  std::vector<std::vector<Rational>> points;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Rational> pt(n);
    for (std::size_t v = 0; v < n; ++v) pt[v] = axis[v][idx[v]];
    bool vanishes = true;
    for (const auto& g : radical_gb.elements()) {
      if (!g.eval(pt).is_zero()) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) points.push_back(std::move(pt));
    std::size_t v = 0;
    while (v < n) {
      if (++idx[v] < axis[v].size()) break;
      idx[v] = 0;
      ++v;
    }
    if (v == n) break;
  }

  require(points.size() == dim, ErrorCode::NonRationalPoint,
          "found " + std::to_string(points.size()) + " rational points, need " +
              std::to_string(dim));
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<std::vector<Rational>> crt_idempotents(
    const QuotientAlgebra& q, const std::vector<std::vector<Rational>>& points) {
  const std::size_t k = points.size();
  require(k == q.dim(), ErrorCode::Internal,
          "idempotents need as many points as the quotient dimension");

  // Evaluation matrix E[j][m] = m-th basis monomial at point j; solving
  // E X = I column by column yields the idempotent coordinates.
  QMatrix e(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t m = 0; m < k; ++m) {
      e.at(j, m) =
          Polynomial::from_monomial(q.ring(), q.basis()[m]).eval(points[j]);
    }
  }
  auto x = solve_matrix(e, QMatrix::identity(k));
  require(x.has_value(), ErrorCode::SingularMatrix,
          "evaluation matrix is singular; points do not match the ideal");

  std::vector<std::vector<Rational>> out(k, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t m = 0; m < k; ++m) out[j][m] = x->at(m, j);
  }
  return out;
}

}  // namespace ckm
