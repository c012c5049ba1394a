#include "ckm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "ckm/errors.hpp"

namespace ckm {

namespace {

bool is_type_a(const CartanData& c) {
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = 0; j < c.rank(); ++j) {
      long want = i == j ? 2 : (i + 1 == j || j + 1 == i) ? -1 : 0;
      if (c.a(i, j) != want) return false;
    }
  return true;
}

}  // namespace

CurrentAlgebraSpec::CurrentAlgebraSpec(const CartanData& cartan,
                                       QuotientAlgebra algebra)
    : rank_(cartan.rank()), cartan_(cartan), algebra_(std::move(algebra)) {
  require(is_type_a(cartan_), ErrorCode::UnsupportedOracleType,
          "the brute-force model only covers one-line (type A) Cartan "
          "matrices");

  for (std::size_t h = 1; h <= rank_; ++h) {
    std::vector<Root> level;
    for (std::size_t p = 0; p + h <= rank_; ++p) {
      std::size_t q = p + h;
      std::vector<int> coords(rank_, 0);
      for (std::size_t i = p; i < q; ++i) coords[i] = 1;
      level.push_back(Root{p, q, std::move(coords), static_cast<int>(h)});
    }
    std::sort(level.begin(), level.end(),
              [](const Root& a, const Root& b) { return a.coords < b.coords; });
    for (auto& r : level) roots_.push_back(std::move(r));
  }
  root_index_.assign(rank_ + 1, std::vector<std::size_t>(rank_ + 1, 0));
  for (std::size_t r = 0; r < roots_.size(); ++r)
    root_index_[roots_[r].p][roots_[r].q] = r;

  const std::size_t d = dim();
  products_.assign(d, std::vector<std::vector<Rational>>(d));
  std::vector<Rational> ea(d, Rational(0)), eb(d, Rational(0));
  for (std::size_t a = 0; a < d; ++a) {
    ea[a] = Rational(1);
    for (std::size_t b = a; b < d; ++b) {
      eb[b] = Rational(1);
      products_[a][b] = algebra_.multiply(ea, eb);
      if (b != a) products_[b][a] = products_[a][b];
      eb[b] = Rational(0);
    }
    ea[a] = Rational(0);
  }
}

std::size_t CurrentAlgebraSpec::root_index(std::size_t p, std::size_t q) const {
  require(p < q && q <= rank_, ErrorCode::Internal,
          "root interval indices out of order");
  return root_index_[p][q];
}

int CurrentAlgebraSpec::gen_id(std::size_t root, std::size_t mono) const {
  return static_cast<int>(root * dim() + mono);
}

std::size_t CurrentAlgebraSpec::gen_root(int id) const {
  return static_cast<std::size_t>(id) / dim();
}

std::size_t CurrentAlgebraSpec::gen_mono(int id) const {
  return static_cast<std::size_t>(id) % dim();
}

const std::vector<Rational>& CurrentAlgebraSpec::product(std::size_t a,
                                                         std::size_t b) const {
  return products_[a][b];
}

std::vector<int> CurrentAlgebraSpec::drop_of(
    const std::vector<int>& word) const {
  std::vector<int> out(rank_, 0);
  for (int g : word) {
    const auto& c = roots_[gen_root(g)].coords;
    for (std::size_t i = 0; i < rank_; ++i) out[i] += c[i];
  }
  return out;
}

PBWVector PBWVector::vacuum() {
  PBWVector v;
  v.terms_[{}] = Rational(1);
  return v;
}

void PBWVector::add(const std::vector<int>& word, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWVector& PBWVector::operator+=(const PBWVector& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PBWVector& PBWVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

namespace {

struct ActCtx {
  const CurrentAlgebraSpec& s;
  const PsiSpec& psi;
};

void act_coroot_basis(const ActCtx& ctx, std::size_t i, std::size_t mono,
                      const std::vector<int>& word, const Rational& c,
                      PBWVector& out);

// f_g * (word . vac) for a sorted word.  The straightened words stay sorted:
// a bracket of two lowering factors has strictly larger height, hence a
// strictly larger generator id than either input, so consing the old head
// back on never breaks the order.
void insert_lowering(const ActCtx& ctx, int g, const std::vector<int>& word,
                     const Rational& c, PBWVector& out) {
  if (word.empty() || g <= word.front()) {
    std::vector<int> w;
    w.reserve(word.size() + 1);
    w.push_back(g);
    w.insert(w.end(), word.begin(), word.end());
    out.add(w, c);
    return;
  }
  const int h = word.front();
  const std::vector<int> rest(word.begin() + 1, word.end());

  PBWVector sub;
  insert_lowering(ctx, g, rest, c, sub);
  for (const auto& [w, cw] : sub.terms()) {
    std::vector<int> v;
    v.reserve(w.size() + 1);
    v.push_back(h);
    v.insert(v.end(), w.begin(), w.end());
    out.add(v, cw);
  }

  const auto& rg = ctx.s.positive_roots()[ctx.s.gen_root(g)];
  const auto& rh = ctx.s.positive_roots()[ctx.s.gen_root(h)];
  const auto& prod = ctx.s.product(ctx.s.gen_mono(g), ctx.s.gen_mono(h));
  if (rg.p == rh.q) {
    std::size_t r = ctx.s.root_index(rh.p, rg.q);
    for (std::size_t k = 0; k < prod.size(); ++k)
      if (!prod[k].is_zero())
        insert_lowering(ctx, ctx.s.gen_id(r, k), rest, c * prod[k], out);
  }
  if (rh.p == rg.q) {
    std::size_t r = ctx.s.root_index(rg.p, rh.q);
    for (std::size_t k = 0; k < prod.size(); ++k)
      if (!prod[k].is_zero())
        insert_lowering(ctx, ctx.s.gen_id(r, k), rest, -(c * prod[k]), out);
  }
}

// E_pq tensor (basis monomial) on word . vac, p != q.
void act_matrix_basis(const ActCtx& ctx, std::size_t p, std::size_t q,
                      std::size_t mono, const std::vector<int>& word,
                      const Rational& c, PBWVector& out) {
  if (p > q) {
    insert_lowering(ctx, ctx.s.gen_id(ctx.s.root_index(q, p), mono), word, c,
                    out);
    return;
  }
  if (word.empty()) return;  // raising kills the vacuum

  const int h = word.front();
  const std::vector<int> rest(word.begin() + 1, word.end());
  const auto& rh = ctx.s.positive_roots()[ctx.s.gen_root(h)];

  PBWVector sub;
  act_matrix_basis(ctx, p, q, mono, rest, c, sub);
  for (const auto& [w, cw] : sub.terms()) insert_lowering(ctx, h, w, cw, out);

  // [E_pq ox m, E_{rh.q, rh.p} ox m'']: inner index matches give
  // delta_{q, rh.q} E_{p, rh.p} - delta_{rh.p, p} E_{rh.q, q}; both at once
  // is the diagonal E_pp - E_qq, the coroot ladder from p to q.
  const auto& prod = ctx.s.product(mono, ctx.s.gen_mono(h));
  const bool hit_left = (q == rh.q);
  const bool hit_right = (rh.p == p);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const Rational ck = c * prod[k];
    if (hit_left && hit_right) {
      for (std::size_t i = p; i < q; ++i)
        act_coroot_basis(ctx, i, k, rest, ck, out);
    } else if (hit_left) {
      act_matrix_basis(ctx, p, rh.p, k, rest, ck, out);
    } else if (hit_right) {
      act_matrix_basis(ctx, rh.q, q, k, rest, -ck, out);
    }
  }
}

// h_i tensor (basis monomial) on word . vac; reads the functional at the
// vacuum.
void act_coroot_basis(const ActCtx& ctx, std::size_t i, std::size_t mono,
                      const std::vector<int>& word, const Rational& c,
                      PBWVector& out) {
  if (word.empty()) {
    out.add({}, c * ctx.psi.psi().at(i, mono));
    return;
  }
  const int h = word.front();
  const std::vector<int> rest(word.begin() + 1, word.end());
  const auto& rh = ctx.s.positive_roots()[ctx.s.gen_root(h)];

  PBWVector sub;
  act_coroot_basis(ctx, i, mono, rest, c, sub);
  for (const auto& [w, cw] : sub.terms()) insert_lowering(ctx, h, w, cw, out);

  const long kappa = (i == rh.q ? 1 : 0) - (i == rh.p ? 1 : 0) -
                     (i + 1 == rh.q ? 1 : 0) + (i + 1 == rh.p ? 1 : 0);
  if (kappa != 0) {
    const auto& prod = ctx.s.product(mono, ctx.s.gen_mono(h));
    std::size_t r = ctx.s.root_index(rh.p, rh.q);
    for (std::size_t k = 0; k < prod.size(); ++k)
      if (!prod[k].is_zero())
        insert_lowering(ctx, ctx.s.gen_id(r, k), rest,
                        c * prod[k] * Rational(kappa), out);
  }
}

void require_compatible(const CurrentAlgebraSpec& s, const PsiSpec& psi) {
  require(psi.cartan() == s.cartan(), ErrorCode::ContextMismatch,
          "functional and matrix model disagree on the Cartan matrix");
  require(psi.quotient().groebner() == s.algebra().groebner(),
          ErrorCode::ContextMismatch,
          "functional and matrix model disagree on the coordinate quotient");
}

// Vacuum coefficient of transpose(word) applied to w; ascending factors act
// first, matching the reversal built into the anti-involution.
Rational pair_word(const ActCtx& ctx, const std::vector<int>& u,
                   const PBWVector& w) {
  PBWVector cur = w;
  for (int g : u) {
    const auto& r = ctx.s.positive_roots()[ctx.s.gen_root(g)];
    PBWVector next;
    for (const auto& [word, c] : cur.terms())
      act_matrix_basis(ctx, r.p, r.q, ctx.s.gen_mono(g), word, c, next);
    cur = std::move(next);
    if (cur.is_zero()) return Rational(0);
  }
  auto it = cur.terms().find({});
  return it == cur.terms().end() ? Rational(0) : it->second;
}

// All drops with the given height, sorted lexicographically.
std::vector<std::vector<int>> drops_at_height(std::size_t rank, int h) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(rank, 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i + 1 == rank) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      go(i + 1, left - v);
    }
  };
  if (rank > 0) go(0, h);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PBWVector act(const CurrentAlgebraSpec& s, const PsiSpec& psi, std::size_t p,
              std::size_t q, const Polynomial& a, const PBWVector& v) {
  require_compatible(s, psi);
  require(p != q && p <= s.rank() && q <= s.rank(), ErrorCode::ContextMismatch,
          "matrix unit indices must be distinct and within range");
  ActCtx ctx{s, psi};
  auto coords = s.algebra().coords(a);
  PBWVector out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero())
      for (const auto& [word, c] : v.terms())
        act_matrix_basis(ctx, p, q, k, word, c * coords[k], out);
  return out;
}

PBWVector act_coroot(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                     std::size_t i, const Polynomial& a, const PBWVector& v) {
  require_compatible(s, psi);
  require(i < s.rank(), ErrorCode::ContextMismatch,
          "coroot index out of range");
  ActCtx ctx{s, psi};
  auto coords = s.algebra().coords(a);
  PBWVector out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero())
      for (const auto& [word, c] : v.terms())
        act_coroot_basis(ctx, i, k, word, c * coords[k], out);
  return out;
}

std::vector<std::vector<int>> pbw_monomials_at(const CurrentAlgebraSpec& s,
                                               const std::vector<int>& beta) {
  require(beta.size() == s.rank(), ErrorCode::ContextMismatch,
          "drop coordinates do not match the rank");
  std::vector<std::vector<int>> out;
  for (int b : beta)
    if (b < 0) return out;

  std::vector<int> word;
  std::vector<int> remaining = beta;
  const int gens = static_cast<int>(s.generator_count());
  std::function<void(int)> go = [&](int min_gen) {
    bool done = std::all_of(remaining.begin(), remaining.end(),
                            [](int v) { return v == 0; });
    if (done) {
      out.push_back(word);
      return;
    }
    for (int g = min_gen; g < gens; ++g) {
      const auto& c = s.positive_roots()[s.gen_root(g)].coords;
      bool fits = true;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (c[i] > remaining[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] -= c[i];
      word.push_back(g);
      go(g);
      word.pop_back();
      for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] += c[i];
    }
  };
  go(0);
  return out;
}

Rational gram_pair(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                   const PBWVector& u, const PBWVector& w) {
  require_compatible(s, psi);
  ActCtx ctx{s, psi};
  Rational out;
  for (const auto& [word, c] : u.terms()) out += c * pair_word(ctx, word, w);
  return out;
}

QMatrix shapovalov_gram(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                        const std::vector<int>& beta) {
  require_compatible(s, psi);
  ActCtx ctx{s, psi};
  auto words = pbw_monomials_at(s, beta);
  QMatrix g(words.size(), words.size());
  for (std::size_t b = 0; b < words.size(); ++b) {
    PBWVector v;
    v.add(words[b], Rational(1));
    for (std::size_t a = 0; a < words.size(); ++a)
      g.at(a, b) = pair_word(ctx, words[a], v);
  }
  return g;
}

bool is_zero_in_irreducible(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                            const PBWVector& v) {
  require_compatible(s, psi);
  if (v.is_zero()) return true;
  ActCtx ctx{s, psi};
  auto beta = s.drop_of(v.terms().begin()->first);
  for (const auto& [word, c] : v.terms())
    require(s.drop_of(word) == beta, ErrorCode::Internal,
            "quotient membership needs a homogeneous vector");
  for (const auto& u : pbw_monomials_at(s, beta))
    if (!pair_word(ctx, u, v).is_zero()) return false;
  return true;
}

GramReport gram_report(const CurrentAlgebraSpec& s, const PsiSpec& psi,
                       int depth) {
  require_compatible(s, psi);
  require(depth >= 0, ErrorCode::ContextMismatch, "depth must be non-negative");
  GramReport report;
  for (int h = 0; h <= depth; ++h)
    for (const auto& beta : drops_at_height(s.rank(), h)) {
      QMatrix g = shapovalov_gram(s, psi, beta);
      std::size_t r = rank_exact(g);
      report.entries.push_back(GramEntry{beta, std::move(g), r});
    }
  return report;
}

CharacterTable irreducible_character(const CurrentAlgebraSpec& s,
                                     const PsiSpec& psi, int depth) {
  require_compatible(s, psi);
  Weight label;
  label.pairings.assign(s.rank(), Rational(0));
  if (s.dim() > 0) {
    std::size_t one = s.algebra().index_of(
        Monomial::one(s.algebra().ring().nvars()));
    for (std::size_t i = 0; i < s.rank(); ++i)
      label.pairings[i] = psi.psi().at(i, one);
  }
  CharacterTable t(s.cartan(), label, depth);
  for (const auto& entry : gram_report(s, psi, depth).entries)
    t.set(entry.beta, static_cast<long>(entry.rank));
  return t;
}

NilpotencyProbe nilpotency_probe(const CurrentAlgebraSpec& s,
                                 const PsiSpec& psi, std::size_t p,
                                 std::size_t q, const Polynomial& a,
                                 const PBWVector& start, int max_power) {
  require(max_power >= 1, ErrorCode::ContextMismatch,
          "power bound must be positive");
  PBWVector cur = start;
  for (int k = 1; k <= max_power; ++k) {
    cur = act(s, psi, p, q, a, cur);
    if (is_zero_in_irreducible(s, psi, cur))
      return NilpotencyProbe{k, max_power};
  }
  return NilpotencyProbe{std::nullopt, max_power};
}

AnnihilatorReport annihilator_probe(const CurrentAlgebraSpec& s,
                                    const PsiSpec& psi,
                                    const std::vector<Polynomial>& candidates,
                                    int depth) {
  require_compatible(s, psi);
  require(depth >= 1, ErrorCode::ContextMismatch, "depth must be positive");

  auto scan = [&]() -> bool {
    for (const auto& a : candidates)
      for (const auto& r : s.positive_roots())
        for (int h = 0; h < depth; ++h)
          for (const auto& beta : drops_at_height(s.rank(), h))
            for (const auto& word : pbw_monomials_at(s, beta)) {
              PBWVector v;
              v.add(word, Rational(1));
              if (!is_zero_in_irreducible(s, psi, act(s, psi, r.q, r.p, a, v)))
                return false;
              if (!is_zero_in_irreducible(s, psi, act(s, psi, r.p, r.q, a, v)))
                return false;
            }
    return true;
  };
  bool annihilates = scan();

  // Depth-one recovery: a is killed on the vacuum by every simple lowering
  // direction exactly when its coordinates lie in the kernel of each simple
  // drop's pairing block.  Close the common kernel under multiplication.
  const std::size_t d = s.dim();
  QMatrix stacked(s.rank() * d, d);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    std::vector<int> alpha(s.rank(), 0);
    alpha[i] = 1;
    QMatrix g = shapovalov_gram(s, psi, alpha);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked.at(i * d + r, c) = g.at(r, c);
  }
  RowSpan span(d);
  std::vector<std::vector<Rational>> work;
  for (auto& v : kernel_basis(stacked))
    if (span.add(v)) work.push_back(std::move(v));
  while (!work.empty()) {
    auto v = std::move(work.back());
    work.pop_back();
    for (std::size_t var = 0; var < s.algebra().ring().nvars(); ++var) {
      auto img = s.algebra().mul_matrix(var).apply(v);
      if (span.add(img)) work.push_back(std::move(img));
    }
  }
  return AnnihilatorReport{annihilates, span.rows(), d - span.dim()};
}

}  // namespace ckm
