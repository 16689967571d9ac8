#include "spectral/rational.hpp"

#include <cctype>
#include <ostream>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw DomainError("division_by_zero", "rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw MalformedInput("not a rational literal: '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(s)));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw MalformedInput("not a rational literal: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division_by_zero", "division of a rational by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace spectral
