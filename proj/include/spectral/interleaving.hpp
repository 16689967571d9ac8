#pragma once

#include <optional>
#include <string>

#include "spectral/fp_category.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

/// M[eps](r) = M(r + eps): shifting moves interval data DOWN by eps.
FpInterval shift(const FpInterval& x, const Rational& eps);
DPoint shift(const DPoint& p, const Rational& eps);

/// Whether k_i and k_j are eps-interleaved: j[eps] <= i and i[eps] <= j as ideals.
bool is_interleaved(const IndexModel& model, const DPoint& i, const DPoint& j, const Rational& eps);

/// Finite(value) or Infinite.
struct ExtDistance {
  std::optional<Coord> value;

  static ExtDistance infinite() { return {}; }
  bool is_infinite() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "inf"; }

  friend bool operator==(const ExtDistance& a, const ExtDistance& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const ExtDistance& a, const ExtDistance& b) {
    if (a.is_infinite() || b.is_infinite()) return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return *a.value <=> *b.value;
  }
};

ExtDistance operator+(const ExtDistance& a, const ExtDistance& b);

/// Interleaving distance |x - y| of the coordinates; flavors are invisible to it.
ExtDistance distance(const IndexModel& model, const DPoint& i, const DPoint& j);

/// Open ball {q : distance(p, q) < eps} as a subset of the spectrum.
SymbolicSet ball(const IndexModel& model, const DPoint& p, const Rational& eps);

/// Bracket [lower, upper] around the infimum of interleaving eps, found by
/// scanning eps = 0, step, 2 step, ... with is_interleaved.
struct DistanceBracket {
  bool infinite = false;
  Rational lower;
  Rational upper;
};

/// The scan stops at |x - y| + 1 when both coordinates are finite and at
/// `infinite_cutoff` otherwise, reporting Infinite if nothing interleaves.
DistanceBracket brute_force_distance(const IndexModel& model, const DPoint& i, const DPoint& j, const Rational& step,
                                     const Rational& infinite_cutoff = Rational(64));

}  // namespace spectral
