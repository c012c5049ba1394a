#include "ckm/cartan.hpp"

#include <algorithm>

#include "ckm/errors.hpp"
#include "ckm/matrix.hpp"

namespace ckm {

const char* cartan_kind_name(CartanKind k) {
  switch (k) {
    case CartanKind::Finite: return "finite";
    case CartanKind::Affine: return "affine";
    case CartanKind::Indefinite: return "indefinite";
  }
  return "unknown";
}

namespace {

// Connected components of the Coxeter graph (edges where a_ij != 0).
std::vector<std::vector<std::size_t>> components(
    const std::vector<std::vector<long>>& a) {
  const std::size_t l = a.size();
  std::vector<bool> seen(l, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < l; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t j = 0; j < l; ++j) {
        if (!seen[j] && a[comp[k]][j] != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Rational det(QMatrix m) {
  const std::size_t n = m.rows();
  Rational out(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      out = -out;
    }
    out *= m.at(col, col);
    Rational inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return out;
}

}  // namespace

CartanData CartanData::validate(const std::vector<std::vector<long>>& matrix) {
  const std::size_t l = matrix.size();
  require(l > 0, ErrorCode::NotGCM, "empty matrix");
  for (const auto& row : matrix) {
    require(row.size() == l, ErrorCode::NotGCM, "matrix is not square");
  }
  for (std::size_t i = 0; i < l; ++i) {
    require(matrix[i][i] == 2, ErrorCode::NotGCM,
            "diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) +
                " must be 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      require(matrix[i][j] <= 0, ErrorCode::NotGCM,
              "off-diagonal entries must be non-positive");
      require((matrix[i][j] == 0) == (matrix[j][i] == 0), ErrorCode::NotGCM,
              "a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                  " = 0 requires the transposed entry to vanish");
    }
  }

  // Symmetrizer, per connected component: propagate d_j = d_i a_ij / a_ji
  // along edges, check global consistency, then clear to minimal integers.
  auto comps = components(matrix);
  std::vector<Rational> dq(l);
  for (const auto& comp : comps) {
    dq[comp[0]] = Rational(1);
    std::vector<bool> fixed(l, false);
    fixed[comp[0]] = true;
    std::vector<std::size_t> frontier{comp[0]};
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      std::size_t i = frontier[k];
      for (std::size_t j : comp) {
        if (fixed[j] || matrix[i][j] == 0) continue;
        dq[j] = dq[i] * Rational(matrix[i][j]) / Rational(matrix[j][i]);
        fixed[j] = true;
        frontier.push_back(j);
      }
    }
    for (std::size_t i : comp) {
      for (std::size_t j : comp) {
        require(dq[i] * Rational(matrix[i][j]) == dq[j] * Rational(matrix[j][i]),
                ErrorCode::NotSymmetrizable, "no consistent symmetrizer exists");
      }
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (std::size_t i : comp) {
      mpz_class den = dq[i].den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
      den_lcm = den_lcm / g * den;
    }
    for (std::size_t i : comp) {
      dq[i] *= Rational(den_lcm);
      mpz_class g;
      mpz_class num = dq[i].num();
      mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
      num_gcd = g;
    }
    for (std::size_t i : comp) {
      dq[i] /= Rational(num_gcd);
    }
  }
  std::vector<long> d(l);
  for (std::size_t i = 0; i < l; ++i) {
    require(dq[i].is_integer() && dq[i].sign() > 0, ErrorCode::Internal,
            "symmetrizer normalization failed");
    d[i] = dq[i].to_long();
  }

  // Kind per component from leading principal minors of B = D A restricted
  // to the component: positive definite <=> all minors positive; positive
  // semidefinite with one-dimensional kernel <=> proper minors positive and
  // the full determinant zero (Cauchy interlacing).
  CartanKind kind = CartanKind::Finite;
  for (const auto& comp : comps) {
    const std::size_t m = comp.size();
    bool proper_positive = true;
    Rational full_det(0);
    for (std::size_t k = 1; k <= m; ++k) {
      QMatrix b(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          b.at(i, j) = Rational(d[comp[i]] * matrix[comp[i]][comp[j]]);
        }
      }
      Rational dk = det(b);
      if (k == m) {
        full_det = dk;
      } else if (dk.sign() <= 0) {
        proper_positive = false;
      }
    }
    CartanKind ck;
    if (proper_positive && full_det.sign() > 0) {
      ck = CartanKind::Finite;
    } else if (proper_positive && full_det.is_zero()) {
      ck = CartanKind::Affine;
    } else {
      ck = CartanKind::Indefinite;
    }
    if (ck == CartanKind::Indefinite) {
      kind = CartanKind::Indefinite;
    } else if (ck == CartanKind::Affine && kind == CartanKind::Finite) {
      kind = CartanKind::Affine;
    }
  }

  return CartanData(matrix, std::move(d), kind);
}

Rational CartanData::form(std::span<const int> x, std::span<const int> y) const {
  require(x.size() == rank() && y.size() == rank(), ErrorCode::Internal,
          "form arity mismatch");
  Rational out(0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (y[j] == 0) continue;
      out += Rational(d_[i] * a_[i][j]) * Rational(x[i]) * Rational(y[j]);
    }
  }
  return out;
}

bool is_dominant_integral(const Weight& w) {
  for (const auto& p : w.pairings) {
    if (!p.is_nonnegative_integer()) return false;
  }
  return true;
}

Rational weight_root_form(const CartanData& c, const Weight& w,
                          std::span<const int> beta) {
  require(w.pairings.size() == c.rank() && beta.size() == c.rank(),
          ErrorCode::Internal, "weight form arity mismatch");
  Rational out(0);
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (beta[i] == 0) continue;
    out += Rational(c.d(i)) * w.pairings[i] * Rational(beta[i]);
  }
  return out;
}

}  // namespace ckm
