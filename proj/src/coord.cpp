#include "spectral/coord.hpp"

#include "spectral/errors.hpp"

namespace spectral {

namespace {

// Sign of a + b*sqrt(d) for a single radicand d (d = 0 means b is ignored).
int surd_sign(const Rational& a, const Rational& b, std::uint64_t d) {
  const int sa = a.sign();
  const int sb = d == 0 ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d. Equality would make sqrt(d) rational.
  const Rational lhs = a * a;
  const Rational rhs = b * b * Rational(static_cast<long>(d));
  return lhs > rhs ? sa : sb;
}

void require_same_radicand(const Coord& a, const Coord& b) {
  if (!a.is_rational() && !b.is_rational() && a.radicand() != b.radicand()) {
    throw DomainError("unrepresentable",
                      "sum of surds with radicands " + std::to_string(a.radicand()) + " and " +
                          std::to_string(b.radicand()) + " is not a single quadratic surd");
  }
}

}  // namespace

Coord Coord::surd(const Rational& p, const Rational& q, std::uint64_t d) {
  if (d == 0) throw DomainError("invalid_surd", "radicand must be positive");
  std::uint64_t square = 1, rest = d;
  for (std::uint64_t f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square *= f;
    }
  }
  Coord c(p);
  const Rational coeff = q * Rational(static_cast<long>(square));
  if (rest == 1) {
    c.rational_ += coeff;
    return c;
  }
  if (coeff.is_zero()) return c;
  c.surd_ = coeff;
  c.radicand_ = rest;
  return c;
}

const Rational& Coord::as_rational() const {
  if (!is_rational()) throw DomainError("not_rational", "coordinate " + str() + " is irrational");
  return rational_;
}

int Coord::sign() const { return surd_sign(rational_, surd_, radicand_); }

std::string Coord::str() const {
  if (is_rational()) return rational_.str();
  std::string s = rational_.is_zero() ? "" : rational_.str();
  const bool negative = surd_.sign() < 0;
  if (!s.empty()) s += negative ? "-" : "+";
  else if (negative) s += "-";
  const Rational mag = abs(surd_);
  if (!(mag == Rational(1))) s += mag.str() + "*";
  return s + "sqrt(" + std::to_string(radicand_) + ")";
}

int Coord::compare(const Coord& a, const Coord& b) {
  const Rational A = a.rational_ - b.rational_;
  if (a.is_rational() || b.is_rational() || a.radicand_ == b.radicand_) {
    const std::uint64_t d = a.is_rational() ? b.radicand_ : a.radicand_;
    const Rational B = a.is_rational() ? -b.surd_ : (b.is_rational() ? a.surd_ : a.surd_ - b.surd_);
    return surd_sign(A, B, d);
  }
  // A + B sqrt(m) + C sqrt(n) with distinct square-free m, n.
  const Rational& B = a.surd_;
  const Rational C = -b.surd_;
  const std::uint64_t m = a.radicand_, n = b.radicand_;
  const int s_alpha = surd_sign(A, B, m);
  const int s_beta = C.sign();
  if (s_alpha == 0) return s_beta;
  if (s_beta == 0 || s_alpha == s_beta) return s_alpha;
  // |alpha| vs |beta| via alpha^2 - beta^2 = (A^2 + B^2 m - C^2 n) + 2AB sqrt(m).
  const Rational rat = A * A + B * B * Rational(static_cast<long>(m)) - C * C * Rational(static_cast<long>(n));
  const Rational irr = Rational(2) * A * B;
  const int diff = surd_sign(rat, irr, m);
  if (diff > 0) return s_alpha;
  if (diff < 0) return s_beta;
  return 0;
}

Coord operator+(const Coord& a, const Coord& b) {
  require_same_radicand(a, b);
  Coord c(a.rational_ + b.rational_);
  const std::uint64_t d = a.is_rational() ? b.radicand_ : a.radicand_;
  if (d == 0) return c;
  return Coord::surd(c.rational_, a.surd_ + b.surd_, d);
}

Coord operator-(const Coord& a) {
  if (a.is_rational()) return Coord(-a.rational_);
  return Coord::surd(-a.rational_, -a.surd_, a.radicand_);
}

Coord operator-(const Coord& a, const Coord& b) { return a + (-b); }

Coord abs(const Coord& c) { return c.sign() < 0 ? -c : c; }

mpz_class floor(const Coord& c) {
  if (c.is_rational()) return c.rational_part().floor();
  // Exponential then binary search on integers with exact comparisons.
  mpz_class lo = -1, hi = 1;
  while (Coord(Rational(mpq_class(lo))) > c) lo *= 2;
  while (Coord(Rational(mpq_class(hi))) <= c) hi *= 2;
  // Invariant: lo <= c < hi.
  while (hi - lo > 1) {
    mpz_class mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(lo + hi).get_mpz_t(), 1);
    if (Coord(Rational(mpq_class(mid))) <= c) lo = mid;
    else hi = mid;
  }
  return lo;
}

Rational rational_between(const Coord& a, const Coord& b) {
  if (!(a < b)) throw DomainError("empty_range", "rational_between requires a < b");
  if (a.is_rational() && b.is_rational()) return (a.rational_part() + b.rational_part()) / Rational(2);
  Rational lo(mpq_class(floor(a)));
  Rational hi(mpq_class(floor(b) + 1));
  // Invariant: lo <= a < b < hi.
  for (;;) {
    const Rational mid = (lo + hi) / Rational(2);
    const Coord m(mid);
    if (m <= a) lo = mid;
    else if (m >= b) hi = mid;
    else return mid;
  }
}

const Coord& ExtCoord::finite() const {
  if (is_infinite()) throw DomainError("infinite_coordinate", "expected a finite coordinate");
  return *value_;
}

}  // namespace spectral
