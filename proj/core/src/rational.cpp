#include "ckm/rational.hpp"

#include <cctype>
#include <ostream>

#include "ckm/errors.hpp"

namespace ckm {

Rational::Rational(long num, long den) {
  require(den != 0, ErrorCode::Internal, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
  };
  if (text.empty()) return bad();
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return bad();
  std::string num = text.substr(0, i);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return bad();
    den = text.substr(den_begin);
  }
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) {
    fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

long Rational::to_long() const {
  require(is_integer(), ErrorCode::Internal, "to_long on non-integer " + str());
  require(q_.get_num().fits_slong_p(), ErrorCode::Internal, "to_long overflow on " + str());
  return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), ErrorCode::Internal, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  require(!is_zero(), ErrorCode::Internal, "inverse of zero rational");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned e) const {
  Rational out(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ckm
