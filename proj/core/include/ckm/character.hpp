#pragma once

#include <map>
#include <vector>

#include "ckm/roots.hpp"

namespace ckm {

/// Weight multiplicities of a highest-weight module, indexed by the
/// root-lattice drop beta below the highest weight.  The table stores the
/// whole box {beta >= 0, height <= depth}, zeros included.
class CharacterTable {
public:
  CharacterTable(CartanData cartan, Weight label, int depth);

  const CartanData& cartan() const { return cartan_; }
  const Weight& label() const { return label_; }
  int depth() const { return depth_; }

  long mult(const std::vector<int>& beta) const;  // 0 outside the box
  const std::map<std::vector<int>, long>& entries() const { return entries_; }
  void set(const std::vector<int>& beta, long m);

  /// True when the deepest height level is entirely zero.  Weight supports
  /// of highest-weight modules grow downward connectedly, so an empty level
  /// certifies that nothing exists beyond it.
  bool stabilized() const;

  /// Sum of all multiplicities in the box.
  long total() const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.cartan_ == b.cartan_ && a.label_ == b.label_ &&
           a.depth_ == b.depth_ && a.entries_ == b.entries_;
  }

private:
  CartanData cartan_;
  Weight label_;
  int depth_;
  std::map<std::vector<int>, long> entries_;
};

/// Freudenthal recursion, top down by height of the drop.
CharacterTable freudenthal_character(const CartanData& c, const Weight& lambda,
                                     int depth);

/// Pointwise convolution of the parts' tables, truncated to the depth box.
/// The label is the sum of the parts' labels; an empty list gives the
/// one-dimensional character.
CharacterTable tensor_character(const CartanData& c,
                                const std::vector<CharacterTable>& parts,
                                int depth);

}  // namespace ckm
