#pragma once

#include <cassert>
#include <numeric>
#include <string>
#include <vector>

namespace ckm {

/// Exponent vector.  Ordering is graded reverse lexicographic throughout:
/// higher total degree wins; on equal degree the monomial whose exponent
/// deficit appears in the rightmost position is the larger one.
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {}

  /// The unit monomial (all exponents zero) in `nvars` variables.  Kept as a
  /// named factory so integer literals can never pick the wrong overload.
  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<int>(nvars, 0));
  }

  std::size_t nvars() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    for (int x : e_) if (x != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    assert(nvars() == m.nvars());
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    assert(nvars() == m.nvars());
    Monomial out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += m.e_[i];
    return out;
  }

  /// Exponentwise difference; caller guarantees divisibility.
  Monomial quotient(const Monomial& d) const {
    assert(d.divides(*this));
    Monomial out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= d.e_[i];
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i)
      if (b.e_[i] > out.e_[i]) out.e_[i] = b.e_[i];
    return out;
  }

  bool coprime(const Monomial& m) const {
    assert(nvars() == m.nvars());
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
  }

  /// -1 / 0 / +1 in graded reverse lexicographic order.
  static int cmp(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.e_.size(); i-- > 0;) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }

  std::string str(const std::vector<std::string>& vars) const {
    assert(vars.size() == e_.size());
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += vars[i];
      if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

private:
  std::vector<int> e_;
};

}  // namespace ckm
