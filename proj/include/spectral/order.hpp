#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "spectral/coord.hpp"

namespace spectral {

/// The totally ordered index set T.
///
/// FiniteChain(L) is {0, ..., L-1}. DenseLine is unbounded below and above; its
/// coordinates are rationals, optionally with quadratic surds. With membership
/// RationalsOnly a surd coordinate is a legal cut position but not an element of T,
/// which is how ideals of Q without a supremum are represented.
class IndexModel {
 public:
  enum class Kind { FiniteChain, DenseLine };
  enum class CoordinateField { RationalsOnly, RationalsWithSurds };
  enum class Membership { AllCoords, RationalsOnly };

  static IndexModel finite_chain(std::size_t length);
  static IndexModel dense_line(CoordinateField field, Membership membership);
  /// Rational coordinates, every coordinate an element: the model of R used throughout.
  static IndexModel real_line() { return dense_line(CoordinateField::RationalsOnly, Membership::AllCoords); }
  /// T = Q with surd cut positions: carries bounded ideals of type 3.
  static IndexModel rationals_with_cuts() {
    return dense_line(CoordinateField::RationalsWithSurds, Membership::RationalsOnly);
  }

  Kind kind() const { return kind_; }
  bool is_dense() const { return kind_ == Kind::DenseLine; }
  std::size_t length() const { return length_; }
  CoordinateField coordinate_field() const { return field_; }
  Membership membership() const { return membership_; }

  /// Whether c is admissible as a position (element or cut) in this model.
  bool is_valid_coord(const Coord& c) const;
  /// Whether c is an element of T.
  bool is_member(const Coord& c) const;

  std::string str() const;

  friend bool operator==(const IndexModel&, const IndexModel&) = default;

 private:
  Kind kind_ = Kind::DenseLine;
  std::size_t length_ = 0;
  CoordinateField field_ = CoordinateField::RationalsOnly;
  Membership membership_ = Membership::AllCoords;
};

enum class Flavor { Strict, Principal };

/// An ideal of T: (x, Strict) is {t < x}, (x, Principal) is {t <= x}, and
/// (inf, Strict) is T itself. Points are ordered lexicographically, Strict before
/// Principal, which is inclusion of ideals.
struct DPoint {
  ExtCoord coord;
  Flavor flavor = Flavor::Strict;

  static DPoint strict(Coord x) { return {ExtCoord(std::move(x)), Flavor::Strict}; }
  static DPoint principal(Coord x) { return {ExtCoord(std::move(x)), Flavor::Principal}; }
  static DPoint top() { return {ExtCoord::infinity(), Flavor::Strict}; }

  bool is_top() const { return coord.is_infinite(); }
  std::string str() const;

  friend bool operator==(const DPoint&, const DPoint&) = default;
};

/// Lexicographic order on (coordinate, flavor) with Strict < Principal.
std::strong_ordering cmp_d(const DPoint& p, const DPoint& q);

inline bool d_less(const DPoint& p, const DPoint& q) { return cmp_d(p, q) < 0; }

/// Throws DomainError unless p is a valid ideal under the model.
void validate(const IndexModel& model, const DPoint& p);

/// Rewrites p to the unique encoding of its ideal. The identity on dense lines;
/// on a finite chain every ideal is principal, so (i, Strict) becomes (i-1, Principal)
/// and (inf, Strict) becomes (L-1, Principal).
DPoint canonical_point(const IndexModel& model, const DPoint& p);

/// Order of ideals under the model (canonicalizes first, so it is inclusion on finite chains too).
std::strong_ordering cmp_d(const IndexModel& model, const DPoint& p, const DPoint& q);

/// Membership of the element t in the ideal p. t must be an element of T.
bool contains(const IndexModel& model, const DPoint& p, const Coord& t);

enum class IdealType { Type1 = 1, Type2 = 2, Type3 = 3 };

/// Type 1: principal. Type 2: non-principal with supremum in T. Type 3: neither.
IdealType classify_ideal(const IndexModel& model, const DPoint& p);

/// Intersection of all ideals {t <= y} over y > x, i.e. the infimum approached from
/// above: (x, Principal) when x is an element of T, otherwise the cut (x, Strict).
DPoint infimum_from_above(const IndexModel& model, const Coord& x);

/// Union of all ideals with coordinate below x: always (x, Strict).
inline DPoint supremum_from_below(const ExtCoord& x) { return {x, Flavor::Strict}; }

}  // namespace spectral
