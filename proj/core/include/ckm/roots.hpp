#pragma once

#include <map>
#include <vector>

#include "ckm/cartan.hpp"

namespace ckm {

/// Positive roots up to a height bound, with multiplicities.
class RootTable {
public:
  const CartanData& cartan() const { return cartan_; }
  int height_bound() const { return bound_; }

  /// Only roots (multiplicity > 0) are stored.
  const std::map<std::vector<int>, long>& roots() const { return mult_; }
  long mult(const std::vector<int>& beta) const;

  /// Largest height among stored roots; 0 when empty.
  int max_height() const;

private:
  friend RootTable roots_up_to_height(const CartanData& c, int bound);
  RootTable(CartanData c, int bound) : cartan_(std::move(c)), bound_(bound) {}

  CartanData cartan_;
  int bound_;
  std::map<std::vector<int>, long> mult_;
};

/// Peterson recursion by height with exact rational arithmetic.
RootTable roots_up_to_height(const CartanData& c, int bound);

/// Complete positive root system of a finite-kind Cartan matrix; grows the
/// height bound until an empty level certifies stabilization.
RootTable all_positive_roots(const CartanData& c);

/// Weyl dimension formula over all positive roots.
long weyl_dim(const CartanData& c, const Weight& lambda);

}  // namespace ckm
