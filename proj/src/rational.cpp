#include "miquel/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "miquel/errors.hpp"

namespace miquel {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long long v) {
  // mpq_class has no long long constructor on every platform.
  value_ = mpz_class(std::to_string(v), 10);
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace miquel
