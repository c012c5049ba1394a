#include "ckm/character.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ckm/errors.hpp"

namespace ckm {

namespace {

int height_of(const std::vector<int>& beta) {
  return std::accumulate(beta.begin(), beta.end(), 0);
}

void box_walk(int depth, std::size_t rank,
              const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> beta(rank, 0);
  while (true) {
    if (height_of(beta) <= depth) visit(beta);
    std::size_t i = 0;
    while (i < rank) {
      if (++beta[i] <= depth) break;
      beta[i] = 0;
      ++i;
    }
    if (i == rank) break;
  }
}

}  // namespace

CharacterTable::CharacterTable(CartanData cartan, Weight label, int depth)
    : cartan_(std::move(cartan)), label_(std::move(label)), depth_(depth) {
  require(depth >= 0, ErrorCode::Internal, "negative character depth");
  require(label_.pairings.size() == cartan_.rank(), ErrorCode::ContextMismatch,
          "label rank differs from Cartan rank");
  box_walk(depth_, cartan_.rank(),
           [&](const std::vector<int>& beta) { entries_.emplace(beta, 0); });
}

long CharacterTable::mult(const std::vector<int>& beta) const {
  auto it = entries_.find(beta);
  return it == entries_.end() ? 0 : it->second;
}

void CharacterTable::set(const std::vector<int>& beta, long m) {
  auto it = entries_.find(beta);
  require(it != entries_.end(), ErrorCode::Internal, "drop outside the depth box");
  require(m >= 0, ErrorCode::Internal, "negative multiplicity");
  it->second = m;
}

bool CharacterTable::stabilized() const {
  std::vector<long> level_mass(static_cast<std::size_t>(depth_) + 1, 0);
  for (const auto& [beta, m] : entries_) {
    level_mass[static_cast<std::size_t>(height_of(beta))] += m;
  }
  for (long mass : level_mass) {
    if (mass == 0) return true;
  }
  return false;
}

long CharacterTable::total() const {
  long out = 0;
  for (const auto& [beta, m] : entries_) out += m;
  return out;
}

CharacterTable freudenthal_character(const CartanData& c, const Weight& lambda,
                                     int depth) {
  require(is_dominant_integral(lambda), ErrorCode::NotDominant,
          "character of a non-dominant weight");
  CharacterTable table(c, lambda, depth);
  table.set(std::vector<int>(c.rank(), 0), 1);
  if (depth == 0) return table;

  RootTable roots = roots_up_to_height(c, depth);
  const std::size_t l = c.rank();

  // Group the box by height; process top down.
  std::vector<std::vector<std::vector<int>>> by_height(
      static_cast<std::size_t>(depth) + 1);
  for (const auto& [beta, m] : table.entries()) {
    by_height[static_cast<std::size_t>(height_of(beta))].push_back(beta);
  }

  for (int h = 1; h <= depth; ++h) {
    for (const auto& beta : by_height[static_cast<std::size_t>(h)]) {
      // 2 sum_{alpha > 0} mult(alpha) sum_{k >= 1} m(beta - k alpha)
      //   * (lambda - beta + k alpha, alpha)
      Rational num(0);
      for (const auto& [alpha, malpha] : roots.roots()) {
        for (int k = 1;; ++k) {
          std::vector<int> up(l);
          bool inside = true;
          for (std::size_t i = 0; i < l; ++i) {
            up[i] = beta[i] - k * alpha[i];
            if (up[i] < 0) inside = false;
          }
          if (!inside) break;
          long m_up = table.mult(up);
          if (m_up == 0) continue;
          // (lambda - beta + k alpha, alpha)
          Rational pairing = weight_root_form(c, lambda, alpha) -
                             c.form(beta, alpha) +
                             Rational(k) * c.form(alpha, alpha);
          num += Rational(malpha) * Rational(m_up) * pairing;
        }
      }
      num *= Rational(2);

      if (num.is_zero()) {
        table.set(beta, 0);
        continue;
      }
      // (lambda+rho, lambda+rho) - (lambda-beta+rho, lambda-beta+rho)
      //   = 2(lambda+rho, beta) - (beta, beta)
      Rational den(0);
      for (std::size_t i = 0; i < l; ++i) {
        den += Rational(2 * c.d(i)) * (lambda.pairings[i] + Rational(1)) *
               Rational(beta[i]);
      }
      den -= c.form(beta, beta);
      require(!den.is_zero(), ErrorCode::Internal,
              "Freudenthal denominator vanished with nonzero numerator");
      Rational m = num / den;
      require(m.is_nonnegative_integer(), ErrorCode::Internal,
              "Freudenthal produced a non-integer multiplicity");
      table.set(beta, m.to_long());
    }
  }
  return table;
}

CharacterTable tensor_character(const CartanData& c,
                                const std::vector<CharacterTable>& parts,
                                int depth) {
  Weight label{std::vector<Rational>(c.rank(), Rational(0))};
  for (const auto& p : parts) {
    require(p.cartan() == c, ErrorCode::ContextMismatch,
            "tensor parts live over different Cartan matrices");
    require(p.depth() >= depth, ErrorCode::ContextMismatch,
            "tensor part depth is below the requested depth");
    for (std::size_t i = 0; i < c.rank(); ++i) {
      label.pairings[i] += p.label().pairings[i];
    }
  }

  CharacterTable out(c, label, depth);
  // Convolve one part at a time; acc holds multiplicities within the box.
  std::map<std::vector<int>, long> acc;
  acc.emplace(std::vector<int>(c.rank(), 0), 1);
  for (const auto& p : parts) {
    std::map<std::vector<int>, long> next;
    for (const auto& [a, ma] : acc) {
      if (ma == 0) continue;
      for (const auto& [b, mb] : p.entries()) {
        if (mb == 0) continue;
        std::vector<int> sum(c.rank());
        int h = 0;
        for (std::size_t i = 0; i < c.rank(); ++i) {
          sum[i] = a[i] + b[i];
          h += sum[i];
        }
        if (h > depth) continue;
        next[sum] += ma * mb;
      }
    }
    acc = std::move(next);
  }
  for (const auto& [beta, m] : acc) out.set(beta, m);
  return out;
}

}  // namespace ckm
