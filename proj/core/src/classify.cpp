#include "ckm/classify.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ckm/errors.hpp"

namespace ckm {

namespace {

std::string coroot_label(std::size_t i) { return "h" + std::to_string(i + 1); }

}  // namespace

PsiSpec::PsiSpec(CartanData cartan, Ideal ideal, const EntryMap& entries,
                 std::optional<std::vector<Rational>> hpp)
    : cartan_(std::move(cartan)),
      ideal_(std::move(ideal)),
      quotient_(buchberger(ideal_)),
      psi_(cartan_.rank(), quotient_.dim()),
      hpp_(std::move(hpp)) {
  const auto& basis = quotient_.basis();
  const auto& vars = ring().vars();
  const std::size_t rank = cartan_.rank();

  for (const auto& [key, value] : entries) {
    const auto& [i, m] = key;
    require(i < rank, ErrorCode::UnknownPsiKey,
            "psi key " + coroot_label(i) + " exceeds the coroot range");
    require(m.nvars() == ring().nvars(), ErrorCode::UnknownPsiKey,
            "psi key monomial does not live in the coordinate ring");
    require(std::binary_search(basis.begin(), basis.end(), m),
            ErrorCode::UnknownPsiKey,
            "psi key " + coroot_label(i) + " tensor " + m.str(vars) +
                " is not a standard monomial of the quotient");
  }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      auto it = entries.find({i, basis[c]});
      require(it != entries.end(), ErrorCode::MissingPsiEntry,
              "psi value missing for " + coroot_label(i) + " tensor " +
                  basis[c].str(vars));
      psi_.at(i, c) = it->second;
    }
}

Rational PsiSpec::apply(std::size_t coroot, const Polynomial& p) const {
  require(coroot < cartan_.rank(), ErrorCode::UnknownPsiKey,
          "coroot index out of range");
  auto c = quotient_.coords(p);
  Rational out;
  for (std::size_t m = 0; m < c.size(); ++m) out += psi_.at(coroot, m) * c[m];
  return out;
}

PsiSpec psi_validate(const CartanData& cartan, const Ideal& ideal,
                     const PsiSpec::EntryMap& entries,
                     std::optional<std::vector<Rational>> hpp) {
  return PsiSpec(cartan, ideal, entries, std::move(hpp));
}

std::variant<PsiSpec, RadicalObstruction> radical_descent(const PsiSpec& spec) {
  return radical_descent(spec, radical_zero_dim(spec.groebner()));
}

std::variant<PsiSpec, RadicalObstruction> radical_descent(
    const PsiSpec& spec, const ReducedGroebnerBasis& radical) {
  const QuotientAlgebra& q = spec.quotient();
  const std::size_t rank = spec.cartan().rank();

  // The products g*m over radical generators g and standard monomials m span
  // J/I, so vanishing there is vanishing on all of h_i tensor J/I.  Scan
  // order (generator, monomial, coroot) fixes which witness is reported.
  for (const auto& g : radical.elements())
    for (const auto& m : q.basis()) {
      Polynomial nf =
          normal_form(g * Polynomial::from_monomial(spec.ring(), m),
                      spec.groebner());
      if (nf.is_zero()) continue;
      for (std::size_t i = 0; i < rank; ++i)
        if (!spec.apply(i, nf).is_zero()) return RadicalObstruction{i, nf};
    }

  // Leading terms only grow when passing to the radical, so its standard
  // monomials sit inside the original basis and the values restrict.
  PsiSpec::EntryMap entries;
  for (const auto& m : standard_monomials(radical)) {
    std::size_t c = q.index_of(m);
    for (std::size_t i = 0; i < rank; ++i)
      entries[{i, m}] = spec.psi().at(i, c);
  }
  return PsiSpec(spec.cartan(), Ideal(spec.ring(), radical.elements()), entries,
                 spec.hpp_values());
}

std::vector<Weight> evaluation_weights(
    const PsiSpec& spec, const std::vector<std::vector<Rational>>& points,
    const std::vector<std::vector<Rational>>& idempotents) {
  require(points.size() == idempotents.size(), ErrorCode::ContextMismatch,
          "points and idempotents must align one to one");
  const std::size_t rank = spec.cartan().rank();
  const std::size_t dim = spec.quotient().dim();

  std::vector<Weight> out;
  out.reserve(idempotents.size());
  for (const auto& e : idempotents) {
    require(e.size() == dim, ErrorCode::ContextMismatch,
            "idempotent coordinates do not match the quotient dimension");
    Weight w;
    w.pairings.assign(rank, Rational(0));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t c = 0; c < dim; ++c)
        w.pairings[i] += spec.psi().at(i, c) * e[c];
    out.push_back(std::move(w));
  }
  return out;
}

const char* verdict_name(Verdict v) {
  return v == Verdict::Integrable ? "integrable" : "not-integrable";
}

Decomposition classify_module(const PsiSpec& spec) {
  auto radical = radical_zero_dim(spec.groebner());

  Decomposition d{.cartan = spec.cartan(),
                  .verdict = Verdict::Integrable,
                  .radical_generators = radical.elements(),
                  .hpp_values = spec.hpp_values()};

  auto descended = radical_descent(spec, radical);
  if (auto* obs = std::get_if<RadicalObstruction>(&descended)) {
    d.verdict = Verdict::NotIntegrable;
    d.obstruction = std::move(*obs);
    return d;
  }
  const PsiSpec& rspec = std::get<PsiSpec>(descended);

  d.points = maximal_points(radical);
  d.idempotents = crt_idempotents(rspec.quotient(), d.points);
  d.weights = evaluation_weights(rspec, d.points, d.idempotents);

  for (std::size_t j = 0; j < d.weights.size() && !d.non_dominant; ++j)
    for (std::size_t i = 0; i < d.weights[j].pairings.size(); ++i)
      if (!d.weights[j].pairings[i].is_nonnegative_integer()) {
        d.non_dominant = NonDominantWeight{j, i};
        d.verdict = Verdict::NotIntegrable;
        break;
      }
  return d;
}

CharacterTable predicted_character(const Decomposition& d, int depth) {
  require(d.verdict == Verdict::Integrable, ErrorCode::NotIntegrableInput,
          "character prediction requires an integrable verdict");
  std::vector<CharacterTable> parts;
  parts.reserve(d.weights.size());
  for (const auto& w : d.weights)
    parts.push_back(freudenthal_character(d.cartan, w, depth));
  return tensor_character(d.cartan, parts, depth);
}

}  // namespace ckm
