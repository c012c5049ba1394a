#include "ckm/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "ckm/errors.hpp"

namespace ckm {

Ring::Ring(std::vector<std::string> variables)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(variables))) {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    const std::string& v = (*vars_)[i];
    require(!v.empty(), ErrorCode::SchemaError, "empty variable name");
    require(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_',
            ErrorCode::SchemaError, "variable '" + v + "' must start with a letter");
    for (char c : v) {
      require(std::isalnum(static_cast<unsigned char>(c)) || c == '_',
              ErrorCode::SchemaError, "variable '" + v + "' has invalid character");
    }
    for (std::size_t j = 0; j < i; ++j) {
      require((*vars_)[j] != v, ErrorCode::SchemaError, "duplicate variable '" + v + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  require(a.ring() == b.ring(), ErrorCode::RingMismatch,
          "operands live in different rings");
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  p.add_term(Monomial::one(ring.nvars()), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  require(index < ring.nvars(), ErrorCode::Internal, "variable index out of range");
  std::vector<int> e(ring.nvars(), 0);
  e[index] = 1;
  return from_monomial(ring, Monomial(std::move(e)));
}

Polynomial Polynomial::from_monomial(const Ring& ring, const Monomial& m,
                                     const Rational& c) {
  require(m.nvars() == ring.nvars(), ErrorCode::RingMismatch,
          "monomial arity does not match ring");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  require(!terms_.empty(), ErrorCode::ZeroPolynomial, "leading monomial of zero");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  require(!terms_.empty(), ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return terms_.rbegin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial::one(ring_.nvars()));
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : leading_monomial().degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial out(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  require(point.size() == ring_.nvars(), ErrorCode::RingMismatch,
          "evaluation point arity does not match ring");
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] != 0) v *= point[i].pow(static_cast<unsigned>(m[i]));
    }
    out += v;
  }
  return out;
}

Polynomial Polynomial::monic() const {
  require(!terms_.empty(), ErrorCode::ZeroPolynomial, "monic of zero polynomial");
  Polynomial out = *this;
  out *= leading_coefficient().inverse();
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational c = it->second;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    const Rational a = c.abs();
    const std::string mono = it->first.str(ring_.vars());
    if (mono == "1") {
      out += a.str();
    } else if (a == Rational(1)) {
      out += mono;
    } else {
      out += a.str() + '*' + mono;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser over the additive grammar.  Whitespace is
// permitted between tokens; error positions are byte offsets into `text`.
class PolyParser {
public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial out(ring_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
      skip_ws();
    }
    out += term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = peek();
      if (op != '+' && op != '-') {
        fail_at("expected '+' or '-'");
      }
      take();
      skip_ws();
      out += term(op == '-');
      skip_ws();
    }
    return out;
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail_at(const std::string& what) const {
    fail(ErrorCode::ParseError,
         what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool at_name() const {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string digits() {
    if (!at_digit()) fail_at("expected digits");
    std::size_t begin = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  Rational coefficient() {
    std::string num = digits();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      std::string den = digits();
      mpq_class q{mpz_class(num), mpz_class(den)};
      if (q.get_den() == 0) fail_at("zero denominator");
      q.canonicalize();
      return Rational(q);
    }
    return Rational(mpz_class(num));
  }

  // var ('^' uint)?; accumulates into the exponent vector.
  void variable_power(std::vector<int>& exponents) {
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(begin, pos_ - begin));
    auto index = ring_.index_of(name);
    if (!index) {
      fail(ErrorCode::UnknownVariable,
           "unknown variable '" + name + "' at position " + std::to_string(begin) +
               " in '" + std::string(text_) + "'");
    }
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      std::string d = digits();
      if (d.size() > 6) fail_at("exponent too large");
      e = std::stoi(d);
    }
    exponents[*index] += e;
  }

  Polynomial term(bool negative) {
    Rational coeff(1);
    std::vector<int> exponents(ring_.nvars(), 0);
    if (at_digit()) {
      coeff = coefficient();
      skip_ws();
      while (peek() == '*') {
        take();
        skip_ws();
        if (!at_name()) fail_at("expected variable");
        variable_power(exponents);
        skip_ws();
      }
    } else if (at_name()) {
      variable_power(exponents);
      skip_ws();
      while (peek() == '*') {
        take();
        skip_ws();
        if (!at_name()) fail_at("expected variable");
        variable_power(exponents);
        skip_ws();
      }
    } else {
      fail_at("expected term");
    }
    if (negative) coeff = -coeff;
    return Polynomial::from_monomial(ring_, Monomial(std::move(exponents)), coeff);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const Ring& ring) {
  return PolyParser(text, ring).run();
}

namespace {

void check_univariate(const Polynomial& p, const char* op) {
  require(p.ring().nvars() == 1, ErrorCode::NotUnivariate,
          std::string(op) + " requires a univariate polynomial");
}

}  // namespace

Polynomial derivative(const Polynomial& p) {
  check_univariate(p, "derivative");
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    int e = m[0];
    if (e == 0) continue;
    out.add_term(Monomial(std::vector<int>{e - 1}), c * Rational(e));
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& p,
                                                    const Polynomial& d) {
  check_univariate(p, "divmod");
  check_same_ring(p, d);
  require(!d.is_zero(), ErrorCode::ZeroPolynomial, "division by zero polynomial");
  Polynomial q(p.ring());
  Polynomial r = p;
  const int dd = d.total_degree();
  const Rational lead = d.leading_coefficient();
  while (!r.is_zero() && r.total_degree() >= dd) {
    int shift = r.total_degree() - dd;
    Rational c = r.leading_coefficient() / lead;
    Monomial m{std::vector<int>{shift}};
    q.add_term(m, c);
    r -= Polynomial::from_monomial(p.ring(), m, c) * d;
  }
  return {q, r};
}

Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b) {
  check_univariate(a, "gcd");
  check_same_ring(a, b);
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod_univariate(x, y).second;
    x = y;
    y = r;
  }
  require(!x.is_zero(), ErrorCode::ZeroPolynomial, "gcd of two zero polynomials");
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  check_univariate(p, "squarefree_part");
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (p.total_degree() == 0) return Polynomial::constant(p.ring(), Rational(1));
  Polynomial g = gcd_univariate(p, derivative(p));
  auto [q, r] = divmod_univariate(p, g);
  require(r.is_zero(), ErrorCode::Internal, "gcd does not divide its argument");
  return q.monic();
}

Polynomial substitute_variable(const Polynomial& p, const Ring& ring,
                               std::size_t index) {
  check_univariate(p, "substitute_variable");
  require(index < ring.nvars(), ErrorCode::Internal, "substitution index out of range");
  Polynomial out(ring);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(ring.nvars(), 0);
    e[index] = m[0];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace ckm
