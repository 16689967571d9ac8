#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectral/order.hpp"

namespace spectral {

/// A position between points of D: before every point, just below a point, or
/// just above one. Canonical: on a dense line the only point with an immediate
/// successor is (x, Strict) for x in T, so Above(x, Strict) is stored as Below(x, Principal).
struct Cut {
  enum class Side { Bottom, Below, Above };
  Side side = Side::Bottom;
  DPoint point;

  static Cut bottom() { return {}; }
  static Cut below(DPoint p) { return {Side::Below, std::move(p)}; }
  static Cut above(DPoint p) { return {Side::Above, std::move(p)}; }
  static Cut top() { return above(DPoint::top()); }

  std::string str() const;
  friend bool operator==(const Cut& a, const Cut& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b);
};

Cut canonical_cut(const IndexModel& model, Cut c);

/// A nonempty convex piece [lo, hi) of D, bounded by cuts.
struct Component {
  Cut lo;
  Cut hi;
  friend bool operator==(const Component&, const Component&) = default;
};

/// One bound of a D-interval as written in the usual interval notation.
struct DEndpoint {
  std::optional<DPoint> point;  // empty: below all points (lower bounds only)
  bool included = false;
};

struct DInterval {
  DEndpoint lo;
  DEndpoint hi;
};

/// A finite union of D-intervals, kept as sorted, disjoint, non-adjacent components.
class SymbolicSet {
 public:
  explicit SymbolicSet(IndexModel model) : model_(std::move(model)) { require_dense(model_); }
  SymbolicSet(IndexModel model, const std::vector<Component>& pieces);

  static SymbolicSet empty(const IndexModel& model) { return SymbolicSet(model); }
  static SymbolicSet full(const IndexModel& model) { return {model, {{Cut::bottom(), Cut::top()}}}; }
  static SymbolicSet point(const IndexModel& model, const DPoint& p);
  /// Builds the set from interval notation; empty intervals are dropped.
  static SymbolicSet from_intervals(const IndexModel& model, const std::vector<DInterval>& xs);

  const IndexModel& model() const { return model_; }
  const std::vector<Component>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  bool is_full() const;

  /// Components in interval notation, preferring included endpoints.
  std::vector<DInterval> intervals() const;
  std::string str() const;

  bool contains(const DPoint& p) const;
  bool subset_of(const SymbolicSet& other) const;

  friend bool operator==(const SymbolicSet& a, const SymbolicSet& b) {
    return a.model_ == b.model_ && a.components_ == b.components_;
  }

  static void require_dense(const IndexModel& model);

 private:
  IndexModel model_;
  std::vector<Component> components_;
};

SymbolicSet set_union(const SymbolicSet& a, const SymbolicSet& b);
SymbolicSet set_intersection(const SymbolicSet& a, const SymbolicSet& b);
SymbolicSet set_complement(const SymbolicSet& a);
SymbolicSet set_difference(const SymbolicSet& a, const SymbolicSet& b);

/// Window(a, b) = [(a, Principal), (b, Strict)]: the ideals I with Hom(k_[a,b), k_I) != 0.
SymbolicSet window(const IndexModel& model, const Coord& a, const ExtCoord& b);

/// A complement gap of a set together with the union of all Windows inside it.
struct RegionGap {
  Component gap;
  std::optional<Component> covered;
};

/// The Serre subcategory of intervals [a, b) whose Window fits inside one gap.
struct SerreRegion {
  IndexModel model;
  std::vector<RegionGap> gaps;

  bool contains(const Coord& a, const ExtCoord& b) const;
  /// Union of the covered pieces; two regions are equal iff these agree.
  SymbolicSet covered_union() const;
  bool subset_of(const SerreRegion& other) const;
};

SerreRegion left_orthogonal(const SymbolicSet& u);
SymbolicSet right_orthogonal(const SerreRegion& r);

enum class ClosureStrategy { DoubleOrthogonal, SupInfSaturation, OrderTopology };

SymbolicSet closure(const SymbolicSet& u, ClosureStrategy strategy);
bool is_closed(const SymbolicSet& u);
bool is_open(const SymbolicSet& u);

/// Disjoint open sets, each a finite union of Windows, the first containing p
/// and the second q.
std::pair<SymbolicSet, SymbolicSet> separate(const IndexModel& model, const DPoint& p, const DPoint& q);

/// The clopen cover {Window(n-1, n) : -depth < n <= 0} and Window(0, inf),
/// truncated to `depth` bounded members (the full cover is infinite).
std::vector<SymbolicSet> noncompact_cover(const IndexModel& model, int depth);

}  // namespace spectral
