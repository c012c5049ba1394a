#pragma once

#include <span>
#include <vector>

#include "ckm/rational.hpp"

namespace ckm {

enum class CartanKind { Finite, Affine, Indefinite };

const char* cartan_kind_name(CartanKind k);

/// Validated generalized Cartan matrix with its minimal positive integer
/// symmetrizer d (d_i a_ij = d_j a_ji) and the finite/affine/indefinite
/// classification of the symmetrized form.
class CartanData {
public:
  static CartanData validate(const std::vector<std::vector<long>>& matrix);

  std::size_t rank() const { return a_.size(); }
  long a(std::size_t i, std::size_t j) const { return a_[i][j]; }
  long d(std::size_t i) const { return d_[i]; }
  CartanKind kind() const { return kind_; }
  const std::vector<std::vector<long>>& matrix() const { return a_; }

  /// Invariant form on root-lattice coordinates: (alpha_i, alpha_j) = d_i a_ij.
  Rational form(std::span<const int> x, std::span<const int> y) const;

  friend bool operator==(const CartanData& x, const CartanData& y) {
    return x.a_ == y.a_;
  }
  friend bool operator!=(const CartanData& x, const CartanData& y) {
    return !(x == y);
  }

private:
  CartanData(std::vector<std::vector<long>> a, std::vector<long> d, CartanKind kind)
      : a_(std::move(a)), d_(std::move(d)), kind_(kind) {}

  std::vector<std::vector<long>> a_;
  std::vector<long> d_;
  CartanKind kind_;
};

/// Weight stored as its pairings with the simple coroots.
struct Weight {
  std::vector<Rational> pairings;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.pairings == b.pairings;
  }
};

bool is_dominant_integral(const Weight& w);

/// (lambda, beta) for beta in root-lattice coordinates: sum d_i lambda_i c_i.
Rational weight_root_form(const CartanData& c, const Weight& w,
                          std::span<const int> beta);

}  // namespace ckm
