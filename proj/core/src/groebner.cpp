#include "ckm/groebner.hpp"

#include <algorithm>
#include <set>

#include "ckm/errors.hpp"

namespace ckm {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  require(!gens_.empty(), ErrorCode::ZeroPolynomial, "ideal needs at least one generator");
  for (const auto& g : gens_) {
    require(g.ring() == ring_, ErrorCode::RingMismatch, "generator ring mismatch");
    require(!g.is_zero(), ErrorCode::ZeroPolynomial, "zero ideal generator");
  }
}

bool ReducedGroebnerBasis::is_unit_ideal() const {
  return elems_.size() == 1 && elems_[0].total_degree() == 0;
}

namespace {

// Full reduction against an arbitrary (not necessarily reduced) basis.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial rest = p;
  Polynomial out(p.ring());
  while (!rest.is_zero()) {
    const Monomial& lm = rest.leading_monomial();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      // Leading term is irreducible; retire it and continue below.
      out.add_term(lm, rest.leading_coefficient());
      Polynomial t(p.ring());
      t.add_term(lm, rest.leading_coefficient());
      rest -= t;
      continue;
    }
    Rational c = rest.leading_coefficient() / reducer->leading_coefficient();
    Monomial shift = lm.quotient(reducer->leading_monomial());
    rest -= Polynomial::from_monomial(p.ring(), shift, c) * *reducer;
  }
  return out;
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;
};

// Normal selection: by lcm degree, then grevlex, then generator indices.
bool pair_less(const Pair& a, const Pair& b) {
  int c = Monomial::cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

ReducedGroebnerBasis buchberger(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) basis.push_back(g.monic());

  std::vector<Pair> pending;
  auto queue_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back(
          {Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial()),
           i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(j);

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair p = *it;
    pending.erase(it);

    const Polynomial& f = basis[p.i];
    const Polynomial& g = basis[p.j];
    // Product criterion: coprime leading monomials reduce to zero.
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;

    Monomial mf = p.lcm.quotient(f.leading_monomial());
    Monomial mg = p.lcm.quotient(g.leading_monomial());
    Polynomial s = Polynomial::from_monomial(ring, mf) * f -
                   Polynomial::from_monomial(ring, mg) * g;
    Polynomial r = reduce(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    queue_pairs_with(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j].leading_monomial();
      const Monomial& b = basis[i].leading_monomial();
      if (a.divides(b) && (a != b || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each element against the others.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial r = reduce(minimal[i], others);
    require(!r.is_zero(), ErrorCode::Internal, "minimal basis element reduced away");
    reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  return ReducedGroebnerBasis(ring, std::move(reduced));
}

Polynomial normal_form(const Polynomial& p, const ReducedGroebnerBasis& gb) {
  require(p.ring() == gb.ring(), ErrorCode::RingMismatch,
          "polynomial ring differs from basis ring");
  return reduce(p, gb.elements());
}

std::optional<std::size_t> cofinite_dimension(const ReducedGroebnerBasis& gb) {
  const std::size_t n = gb.ring().nvars();
  if (gb.is_unit_ideal()) return 0;
  // Pure-power bound per variable, from leading monomials supported on one axis.
  std::vector<std::optional<int>> bound(n);
  for (const auto& g : gb.elements()) {
    const Monomial& lm = g.leading_monomial();
    int support = -1;
    bool pure = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (lm[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(v);
    }
    if (!pure || support < 0) continue;
    int e = lm[static_cast<std::size_t>(support)];
    auto& slot = bound[static_cast<std::size_t>(support)];
    if (!slot || e < *slot) slot = e;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!bound[v]) return std::nullopt;
  }
  return standard_monomials(gb).size();
}

std::vector<Monomial> standard_monomials(const ReducedGroebnerBasis& gb) {
  const std::size_t n = gb.ring().nvars();
  if (gb.is_unit_ideal()) return {};

  std::vector<int> cap(n, -1);
  for (const auto& g : gb.elements()) {
    const Monomial& lm = g.leading_monomial();
    int support = -1;
    bool pure = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (lm[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(v);
    }
    if (!pure || support < 0) continue;
    auto s = static_cast<std::size_t>(support);
    if (cap[s] < 0 || lm[s] < cap[s]) cap[s] = lm[s];
  }
  for (std::size_t v = 0; v < n; ++v) {
    require(cap[v] >= 0, ErrorCode::NotCofinite,
            "no pure power of '" + gb.ring().vars()[v] + "' among leading monomials");
  }

  std::vector<Monomial> lms;
  for (const auto& g : gb.elements()) lms.push_back(g.leading_monomial());

  // Enumerate the staircase box and keep monomials outside the ideal.
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  while (true) {
    Monomial m{std::vector<int>(e)};
    bool standard = true;
    for (const auto& lm : lms) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) out.push_back(m);
    std::size_t v = 0;
    while (v < n) {
      if (++e[v] < cap[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require(a.ring() == b.ring(), ErrorCode::RingMismatch,
          "ideal product across different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial prod = f * g;
      if (std::find(gens.begin(), gens.end(), prod) == gens.end()) {
        gens.push_back(std::move(prod));
      }
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace ckm
