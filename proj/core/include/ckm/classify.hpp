#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ckm/cartan.hpp"
#include "ckm/character.hpp"
#include "ckm/quotient.hpp"
#include "ckm/zerodim.hpp"

namespace ckm {

/// Highest-weight data for a current algebra: the value of the functional on
/// h_i tensor m for every simple coroot h_i and every standard monomial m of
/// the quotient by a cofinite ideal, plus optional opaque scalars for a
/// complementary central part.  Construction validates everything: the ideal
/// must be cofinite and the entry map must cover the basis exactly.
class PsiSpec {
public:
  /// Keyed by (coroot index, monomial), both 0-based / in ring coordinates.
  using EntryMap = std::map<std::pair<std::size_t, Monomial>, Rational>;

  PsiSpec(CartanData cartan, Ideal ideal, const EntryMap& entries,
          std::optional<std::vector<Rational>> hpp = std::nullopt);

  const CartanData& cartan() const { return cartan_; }
  const Ring& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const ReducedGroebnerBasis& groebner() const { return quotient_.groebner(); }
  const QuotientAlgebra& quotient() const { return quotient_; }

  /// Row i holds the values on h_i tensor (standard basis), one column per
  /// standard monomial in ascending order.
  const QMatrix& psi() const { return psi_; }

  /// Value on h_i tensor p for arbitrary p; reduces p first, then reads the
  /// stored values off the coordinates.
  Rational apply(std::size_t coroot, const Polynomial& p) const;

  const std::optional<std::vector<Rational>>& hpp_values() const {
    return hpp_;
  }

private:
  CartanData cartan_;
  Ideal ideal_;
  QuotientAlgebra quotient_;
  QMatrix psi_;
  std::optional<std::vector<Rational>> hpp_;
};

/// Function-form alias for the validating constructor.
PsiSpec psi_validate(const CartanData& cartan, const Ideal& ideal,
                     const PsiSpec::EntryMap& entries,
                     std::optional<std::vector<Rational>> hpp = std::nullopt);

/// Certificate that the functional fails to vanish on h' tensor (radical/I):
/// the witness is a reduced representative of a radical element whose value
/// on the named coroot is nonzero.  Any such element rules out integrability.
struct RadicalObstruction {
  std::size_t coroot;
  Polynomial witness;
};

/// Restriction of the functional to the radical quotient A/J.  Succeeds
/// exactly when every h_i tensor J/I is killed; the descended spec lives over
/// the same ring with ideal J, and its standard monomials are a subset of the
/// original ones, so the values carry over by restriction.  The two-argument
/// form takes a precomputed radical_zero_dim(spec.groebner()).
std::variant<PsiSpec, RadicalObstruction> radical_descent(const PsiSpec& spec);
std::variant<PsiSpec, RadicalObstruction> radical_descent(
    const PsiSpec& spec, const ReducedGroebnerBasis& radical);

/// One weight per point: lambda_j(h_i) = sum_m e_j[m] psi(h_i tensor m).
/// Points are only used for alignment checks; the idempotent coordinates
/// carry the evaluation.
std::vector<Weight> evaluation_weights(
    const PsiSpec& spec, const std::vector<std::vector<Rational>>& points,
    const std::vector<std::vector<Rational>>& idempotents);

enum class Verdict { Integrable, NotIntegrable };

const char* verdict_name(Verdict v);

/// Locates the first weight entry that is not a non-negative integer,
/// scanning points in their sorted order and coroots ascending.
struct NonDominantWeight {
  std::size_t point_index;
  std::size_t coroot;
};

/// Outcome of the full pipeline.  Points are sorted lexicographically;
/// weights and idempotents align with them.  After a radical obstruction the
/// point data is empty: the functional does not factor through A/J, so no
/// evaluation exists.  A non-dominant weight keeps the full point data.
struct Decomposition {
  CartanData cartan;
  Verdict verdict = Verdict::NotIntegrable;
  std::optional<RadicalObstruction> obstruction;
  std::optional<NonDominantWeight> non_dominant;
  std::vector<Polynomial> radical_generators;
  std::vector<std::vector<Rational>> points;
  std::vector<Weight> weights;
  std::vector<std::vector<Rational>> idempotents;
  std::optional<std::vector<Rational>> hpp_values;
};

/// Radical descent, point splitting, weight extraction, dominance check.
/// Integrable iff the descent succeeds and every evaluation weight is
/// dominant integral.  Throws NonRationalPoint when the splitting leaves the
/// rationals; that is a modelling limit, not a verdict.
Decomposition classify_module(const PsiSpec& spec);

/// Character box of the predicted tensor product of the evaluation modules.
/// Requires an integrable verdict; with zero points the module is the trivial
/// one-dimensional one.
CharacterTable predicted_character(const Decomposition& d, int depth);

}  // namespace ckm
