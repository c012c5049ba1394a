#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ckm/classify.hpp"
#include "ckm/quotient.hpp"

namespace ckm {

/// Concrete model of the traceless (n+1) x (n+1) matrices with entries in a
/// finite-dimensional commutative quotient algebra.  Off-diagonal units E_pq
/// tensor basis monomials are the working generators; brackets come from
/// matrix units and the algebra's multiplication tables, with no sign
/// conventions to choose.  Only Cartan matrices of this one-line type are
/// accepted.
class CurrentAlgebraSpec {
public:
  /// A positive root is an interval [p, q) of matrix indices; its lowering
  /// generator is E_qp.  Roots are listed by (height, then coordinates
  /// lexicographically), the order that also fixes the generator numbering.
  struct Root {
    std::size_t p, q;
    std::vector<int> coords;
    int height;
  };

  CurrentAlgebraSpec(const CartanData& cartan, QuotientAlgebra algebra);

  std::size_t rank() const { return rank_; }
  const CartanData& cartan() const { return cartan_; }
  const QuotientAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }

  const std::vector<Root>& positive_roots() const { return roots_; }
  std::size_t root_index(std::size_t p, std::size_t q) const;

  /// Lowering generators are numbered root-major: (root r, basis monomial c)
  /// has id r * dim + c.
  std::size_t generator_count() const { return roots_.size() * dim(); }
  int gen_id(std::size_t root, std::size_t mono) const;
  std::size_t gen_root(int id) const;
  std::size_t gen_mono(int id) const;

  /// Coordinates of (basis monomial a) * (basis monomial b), cached.
  const std::vector<Rational>& product(std::size_t a, std::size_t b) const;

  /// Root-lattice drop of a sorted generator-id word.
  std::vector<int> drop_of(const std::vector<int>& word) const;

private:
  std::size_t rank_;
  CartanData cartan_;
  QuotientAlgebra algebra_;
  std::vector<Root> roots_;
  std::vector<std::vector<std::size_t>> root_index_;
  std::vector<std::vector<std::vector<Rational>>> products_;
};

/// Formal rational combination of ordered words in the lowering generators,
/// each word a non-decreasing sequence of generator ids applied to the
/// highest-weight line.  The zero vector is the empty combination.
class PBWVector {
public:
  static PBWVector vacuum();

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add(const std::vector<int>& word, const Rational& c);

  PBWVector& operator+=(const PBWVector& o);
  PBWVector& operator*=(const Rational& c);

  friend bool operator==(const PBWVector& a, const PBWVector& b) {
    return a.terms_ == b.terms_;
  }

private:
  std::map<std::vector<int>, Rational> terms_;
};

/// E_pq tensor a, applied to v and re-expressed in the ordered basis.
/// Lowering entries (p > q) multiply; raising entries (p < q) are commuted
/// through to the vacuum, where they vanish.  p == q is rejected: only
/// coroot differences exist in the algebra, via act_coroot.
PBWVector act(const CurrentAlgebraSpec& s, const PsiSpec& psi, std::size_t p,
              std::size_t q, const Polynomial& a, const PBWVector& v);

/// h_i tensor a, applied to v; on the vacuum it reads the functional.
PBWVector act_coroot(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                     std::size_t i, const Polynomial& a, const PBWVector& v);

/// All ordered words with drop exactly beta, in lexicographic id order.
std::vector<std::vector<int>> pbw_monomials_at(const CurrentAlgebraSpec& s,
                                               const std::vector<int>& beta);

/// Contravariant pairing: the vacuum coefficient after applying the
/// transposes of u's factors to w.  Symmetric, bilinear, zero across
/// different drops.
Rational gram_pair(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                   const PBWVector& u, const PBWVector& w);

/// Pairing matrix of the ordered words at drop beta.
QMatrix shapovalov_gram(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                        const std::vector<int>& beta);

/// True when v pairs to zero against the whole weight space of its drop,
/// i.e. v lands in the kernel of the pairing and dies in the irreducible
/// quotient.  Requires v homogeneous.
bool is_zero_in_irreducible(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                            const PBWVector& v);

struct GramEntry {
  std::vector<int> beta;
  QMatrix gram;          // rows() is the word count at this drop
  std::size_t rank;
};

/// One entry per drop in the box height <= depth, sorted by (height, lex).
struct GramReport {
  std::vector<GramEntry> entries;
};

GramReport gram_report(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                       int depth);

/// Weight multiplicities of the irreducible quotient, realized as pairing
/// ranks per drop.
CharacterTable irreducible_character(const CurrentAlgebraSpec& s,
                                     const PsiSpec& psi, int depth);

/// Outcome of powering one generator: the least power whose image dies in
/// the irreducible quotient, or nothing when every power up to the bound
/// survives.
struct NilpotencyProbe {
  std::optional<int> vanishing_power;
  int max_power;
};

NilpotencyProbe nilpotency_probe(const CurrentAlgebraSpec& s,
                                 const PsiSpec& psi, std::size_t p,
                                 std::size_t q, const Polynomial& a,
                                 const PBWVector& start, int max_power = 8);

/// Annihilation scan and recovery.  `annihilates` covers every candidate
/// against every root direction and every basis word of height < depth.
/// The recovered ideal is the closure of the common depth-one kernel: all a
/// with (E_{i+1,i} tensor a) killing the vacuum in the quotient, for every i,
/// closed under multiplication by the algebra.
struct AnnihilatorReport {
  bool annihilates;
  std::vector<std::vector<Rational>> ideal_basis;  // echelon, in coordinates
  std::size_t codimension;
};

AnnihilatorReport annihilator_probe(const CurrentAlgebraSpec& s,
                                    const PsiSpec& psi,
                                    const std::vector<Polynomial>& candidates,
                                    int depth);

}  // namespace ckm
