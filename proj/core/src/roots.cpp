#include "ckm/roots.hpp"

#include <algorithm>
#include <numeric>

#include "ckm/errors.hpp"

namespace ckm {

long RootTable::mult(const std::vector<int>& beta) const {
  auto it = mult_.find(beta);
  return it == mult_.end() ? 0 : it->second;
}

int RootTable::max_height() const {
  int h = 0;
  for (const auto& [beta, m] : mult_) {
    h = std::max(h, std::accumulate(beta.begin(), beta.end(), 0));
  }
  return h;
}

namespace {

// All lattice points with the given coordinate sum, lexicographic order.
void compositions(int height, std::size_t rank,
                  std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (prefix.size() + 1 == rank) {
    prefix.push_back(height);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = 0; c <= height; ++c) {
    prefix.push_back(c);
    compositions(height - c, rank, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> level(int height, std::size_t rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions(height, rank, prefix, out);
  return out;
}

}  // namespace

RootTable roots_up_to_height(const CartanData& c, int bound) {
  require(bound >= 1, ErrorCode::Internal, "height bound must be positive");
  const std::size_t l = c.rank();
  RootTable table(c, bound);

  // Peterson recursion on the auxiliary coefficients
  //   c_beta = sum_{k >= 1, beta/k integral} mult(beta/k) / k.
  std::map<std::vector<int>, Rational> aux;
  std::map<std::vector<int>, long> mult;

  // (rho, beta) = sum d_i beta_i, from rho(h_i) = 1.
  auto rho_form = [&](const std::vector<int>& beta) {
    long out = 0;
    for (std::size_t i = 0; i < l; ++i) out += c.d(i) * beta[i];
    return Rational(out);
  };

  auto divisor_tail = [&](const std::vector<int>& beta) {
    // sum over k >= 2 dividing beta of mult(beta/k)/k.
    int g = 0;
    for (int x : beta) g = std::gcd(g, x);
    Rational out(0);
    for (int k = 2; k <= g; ++k) {
      if (g % k != 0) continue;
      std::vector<int> part(l);
      for (std::size_t i = 0; i < l; ++i) part[i] = beta[i] / k;
      auto it = mult.find(part);
      if (it != mult.end()) out += Rational(it->second, k);
    }
    return out;
  };

  for (int h = 1; h <= bound; ++h) {
    for (const auto& beta : level(h, l)) {
      if (h == 1) {
        aux[beta] = Rational(1);
        mult[beta] = 1;
        continue;
      }
      // Ordered pairs beta' + beta'' = beta, both nonzero.
      Rational num(0);
      std::vector<int> sub(l, 0);
      while (true) {
        bool zero = true, full = true;
        for (std::size_t i = 0; i < l; ++i) {
          if (sub[i] != 0) zero = false;
          if (sub[i] != beta[i]) full = false;
        }
        if (!zero && !full) {
          auto it = aux.find(sub);
          if (it != aux.end() && !it->second.is_zero()) {
            std::vector<int> rest(l);
            for (std::size_t i = 0; i < l; ++i) rest[i] = beta[i] - sub[i];
            auto jt = aux.find(rest);
            if (jt != aux.end() && !jt->second.is_zero()) {
              std::vector<int> subi(sub.begin(), sub.end());
              num += c.form(subi, rest) * it->second * jt->second;
            }
          }
        }
        std::size_t i = 0;
        while (i < l) {
          if (++sub[i] <= beta[i]) break;
          sub[i] = 0;
          ++i;
        }
        if (i == l) break;
      }

      Rational den = c.form(beta, beta) - Rational(2) * rho_form(beta);
      Rational tail = divisor_tail(beta);
      if (den.is_zero()) {
        // The recursion degenerates only off the root system (simple roots
        // are seeded; imaginary roots have strictly negative denominator),
        // so the multiplicity is zero and c_beta is the divisor tail alone.
        require(num.is_zero(), ErrorCode::Internal,
                "zero denominator with nonzero numerator in root recursion");
        aux[beta] = tail;
        mult[beta] = 0;
        continue;
      }
      Rational cb = num / den;
      aux[beta] = cb;
      Rational m = cb - tail;
      require(m.is_nonnegative_integer(), ErrorCode::Internal,
              "root multiplicity is not a non-negative integer");
      mult[beta] = m.to_long();
    }
  }

  for (auto& [beta, m] : mult) {
    if (m > 0) table.mult_.emplace(beta, m);
  }
  return table;
}

RootTable all_positive_roots(const CartanData& c) {
  require(c.kind() == CartanKind::Finite, ErrorCode::NotFiniteType,
          "complete root enumeration needs finite kind");
  int bound = static_cast<int>(c.rank());
  while (true) {
    RootTable t = roots_up_to_height(c, bound);
    if (t.max_height() < bound) return t;
    bound *= 2;
  }
}

long weyl_dim(const CartanData& c, const Weight& lambda) {
  require(is_dominant_integral(lambda), ErrorCode::NotDominant,
          "dimension formula needs a dominant integral weight");
  RootTable t = all_positive_roots(c);
  Rational dim(1);
  for (const auto& [beta, m] : t.roots()) {
    Rational rho(0), top(0);
    for (std::size_t i = 0; i < c.rank(); ++i) {
      rho += Rational(c.d(i) * beta[i]);
      top += Rational(c.d(i) * beta[i]) * (lambda.pairings[i] + Rational(1));
    }
    dim *= top / rho;
  }
  require(dim.is_integer() && dim.sign() > 0, ErrorCode::Internal,
          "dimension formula did not produce a positive integer");
  return dim.to_long();
}

}  // namespace ckm
