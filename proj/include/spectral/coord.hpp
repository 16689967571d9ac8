#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "spectral/rational.hpp"

namespace spectral {

/// Exact position on the index line: p + q*sqrt(d) with p, q rational and d a
/// square-free integer >= 2, or a plain rational when q = 0 (then d is stored as 0).
///
/// Ordering is decided by sign analysis on the surd parts, never by rounding,
/// so coordinates with different radicands compare exactly.
class Coord {
 public:
  Coord() = default;
  Coord(Rational r) : rational_(std::move(r)) {}
  Coord(int n) : rational_(n) {}
  Coord(long n) : rational_(n) {}

  /// p + q*sqrt(d); d must be positive. Square factors of d are absorbed into q
  /// and a perfect-square d collapses to a rational.
  static Coord surd(const Rational& p, const Rational& q, std::uint64_t d);

  bool is_rational() const { return radicand_ == 0; }
  const Rational& rational_part() const { return rational_; }
  const Rational& surd_coefficient() const { return surd_; }
  std::uint64_t radicand() const { return radicand_; }

  /// Throws DomainError when the coordinate is irrational.
  const Rational& as_rational() const;

  int sign() const;
  std::string str() const;

  /// Sum/difference. Defined when the operands share a radicand or one is rational.
  friend Coord operator+(const Coord& a, const Coord& b);
  friend Coord operator-(const Coord& a, const Coord& b);
  friend Coord operator-(const Coord& a);

  friend bool operator==(const Coord& a, const Coord& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  static int compare(const Coord& a, const Coord& b);

 private:
  Rational rational_;
  Rational surd_;
  std::uint64_t radicand_ = 0;
};

Coord abs(const Coord& c);

/// Largest integer n with n <= c.
mpz_class floor(const Coord& c);

/// A rational strictly between a and b (requires a < b). Midpoint when both are rational.
Rational rational_between(const Coord& a, const Coord& b);

/// Coordinate or +infinity. Infinity is above every finite coordinate.
class ExtCoord {
 public:
  ExtCoord() = default;
  ExtCoord(Coord c) : value_(std::move(c)) {}
  ExtCoord(Rational r) : value_(Coord(std::move(r))) {}
  ExtCoord(int n) : value_(Coord(n)) {}

  static ExtCoord infinity() {
    ExtCoord e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws DomainError on infinity.
  const Coord& finite() const;

  std::string str() const { return is_infinite() ? "inf" : value_->str(); }

  friend bool operator==(const ExtCoord& a, const ExtCoord& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const ExtCoord& a, const ExtCoord& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<Coord> value_ = Coord();
};

}  // namespace spectral
