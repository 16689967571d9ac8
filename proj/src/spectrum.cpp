#include "spectral/spectrum.hpp"

#include <algorithm>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

bool member_strict(const IndexModel& model, const DPoint& p) {
  return p.flavor == Flavor::Strict && p.coord.is_finite() && model.is_member(p.coord.finite());
}

bool has_predecessor(const IndexModel& model, const DPoint& p) {
  return p.flavor == Flavor::Principal && model.is_member(p.coord.finite());
}

bool has_successor(const IndexModel& model, const DPoint& p) { return member_strict(model, p); }

void validate_cut(const IndexModel& model, const Cut& c) {
  if (c.side != Cut::Side::Bottom) validate(model, c.point);
}

// Canonical, merged components from arbitrary (possibly empty, overlapping) pieces.
std::vector<Component> normalize(const IndexModel& model, std::vector<Component> pieces) {
  std::vector<Component> live;
  for (auto& c : pieces) {
    c.lo = canonical_cut(model, c.lo);
    c.hi = canonical_cut(model, c.hi);
    if (c.lo < c.hi) live.push_back(std::move(c));
  }
  std::sort(live.begin(), live.end(), [](const Component& a, const Component& b) { return a.lo < b.lo; });
  std::vector<Component> out;
  for (auto& c : live) {
    if (!out.empty() && c.lo <= out.back().hi) {
      if (out.back().hi < c.hi) out.back().hi = c.hi;
    } else {
      out.push_back(std::move(c));
    }
  }
  return out;
}

Cut lower_cut(const DEndpoint& e) {
  if (!e.point) {
    if (e.included) throw DomainError("invalid_endpoint", "below_all cannot be an included endpoint");
    return Cut::bottom();
  }
  return e.included ? Cut::below(*e.point) : Cut::above(*e.point);
}

Cut upper_cut(const DEndpoint& e) {
  if (!e.point) throw DomainError("invalid_endpoint", "below_all is only allowed as a lower endpoint");
  return e.included ? Cut::above(*e.point) : Cut::below(*e.point);
}

// Smallest cut from which Windows inside a gap starting at `lo` can begin.
std::optional<Cut> covered_lo(const IndexModel& model, const Cut& lo) {
  if (lo.side == Cut::Side::Bottom) return lo;
  const DPoint& p = lo.point;
  if (p.is_top()) return std::nullopt;
  if (p.flavor == Flavor::Principal) return lo;
  if (lo.side == Cut::Side::Above) return lo;  // only for cuts at non-elements
  const Coord& x = p.coord.finite();
  if (model.is_member(x)) return Cut::below(DPoint::principal(x));
  return Cut::above(p);
}

// Largest cut up to which Windows inside a gap ending at `hi` can reach.
Cut covered_hi(const Cut& hi) {
  if (hi == Cut::top()) return hi;
  const DPoint& p = hi.point;
  if (p.flavor == Flavor::Principal) return Cut::below(p);
  return Cut::below(DPoint{p.coord, Flavor::Strict});
}

std::vector<Component> gaps_of(const SymbolicSet& u) { return set_complement(u).components(); }

SymbolicSet closure_double_orthogonal(const SymbolicSet& u) { return right_orthogonal(left_orthogonal(u)); }

SymbolicSet closure_supinf(const SymbolicSet& u) {
  const IndexModel& model = u.model();
  SymbolicSet current = u;
  for (;;) {
    std::vector<Component> added;
    for (const auto& c : current.components()) {
      // Supremum of a run of ideals approaching (x, Strict) from below.
      if (c.hi.side == Cut::Side::Below && c.hi.point.flavor == Flavor::Strict) {
        const DPoint s = supremum_from_below(c.hi.point.coord);
        added.push_back({Cut::below(s), Cut::above(s)});
      }
      // Infimum (intersection) of a run approaching its lower end from above.
      if (c.lo.side == Cut::Side::Above) {
        const DPoint i = infimum_from_above(model, c.lo.point.coord.finite());
        added.push_back({Cut::below(i), Cut::above(i)});
      }
    }
    std::vector<Component> all = current.components();
    all.insert(all.end(), added.begin(), added.end());
    SymbolicSet next(model, all);
    if (next == current) return current;
    current = std::move(next);
  }
}

SymbolicSet closure_order(const SymbolicSet& u) {
  const IndexModel& model = u.model();
  std::vector<Component> all = u.components();
  for (const auto& c : u.components()) {
    // p is a limit from the left iff it has no immediate predecessor.
    if (c.hi.side == Cut::Side::Below && !has_predecessor(model, c.hi.point)) {
      all.push_back({c.hi, Cut::above(c.hi.point)});
    }
    if (c.lo.side == Cut::Side::Above && !has_successor(model, c.lo.point)) {
      all.push_back({Cut::below(c.lo.point), c.lo});
    }
  }
  return {model, all};
}

Rational rational_below(const Coord& x) {
  if (x.is_rational()) return x.as_rational() - Rational(1);
  return Rational(mpq_class(floor(x)));
}

Rational rational_above(const Coord& x) {
  if (x.is_rational()) return x.as_rational() + Rational(1);
  return Rational(mpq_class(floor(x) + 1));
}

}  // namespace

std::string Cut::str() const {
  switch (side) {
    case Side::Bottom: return "bottom";
    case Side::Below: return "below" + point.str();
    case Side::Above: return "above" + point.str();
  }
  return {};
}

std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
  const bool ab = a.side == Cut::Side::Bottom, bb = b.side == Cut::Side::Bottom;
  if (ab || bb) return static_cast<int>(!ab) <=> static_cast<int>(!bb);
  if (const auto c = cmp_d(a.point, b.point); c != 0) return c;
  return static_cast<int>(a.side) <=> static_cast<int>(b.side);
}

Cut canonical_cut(const IndexModel& model, Cut c) {
  validate_cut(model, c);
  if (c.side == Cut::Side::Above && member_strict(model, c.point)) {
    return Cut::below(DPoint::principal(c.point.coord.finite()));
  }
  return c;
}

void SymbolicSet::require_dense(const IndexModel& model) {
  if (!model.is_dense()) {
    throw DomainError("unsupported_model", "spectrum topology is implemented for dense line models, not " + model.str());
  }
}

SymbolicSet::SymbolicSet(IndexModel model, const std::vector<Component>& pieces) : model_(std::move(model)) {
  require_dense(model_);
  components_ = normalize(model_, pieces);
}

SymbolicSet SymbolicSet::point(const IndexModel& model, const DPoint& p) {
  return {model, {{Cut::below(p), Cut::above(p)}}};
}

SymbolicSet SymbolicSet::from_intervals(const IndexModel& model, const std::vector<DInterval>& xs) {
  std::vector<Component> pieces;
  for (const auto& x : xs) pieces.push_back({lower_cut(x.lo), upper_cut(x.hi)});
  return {model, pieces};
}

bool SymbolicSet::is_full() const {
  return components_.size() == 1 && components_[0].lo == Cut::bottom() && components_[0].hi == Cut::top();
}

std::vector<DInterval> SymbolicSet::intervals() const {
  std::vector<DInterval> out;
  for (const auto& c : components_) {
    DInterval d;
    if (c.lo.side != Cut::Side::Bottom) d.lo = {c.lo.point, c.lo.side == Cut::Side::Below};
    if (c.hi.side == Cut::Side::Above) {
      d.hi = {c.hi.point, true};
    } else if (has_predecessor(model_, c.hi.point)) {
      d.hi = {DPoint::strict(c.hi.point.coord.finite()), true};
    } else {
      d.hi = {c.hi.point, false};
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string SymbolicSet::str() const {
  if (components_.empty()) return "{}";
  std::string s;
  for (const auto& d : intervals()) {
    if (!s.empty()) s += " u ";
    s += d.lo.point ? (d.lo.included ? "[" : "(") + d.lo.point->str() : "(-inf";
    s += ", " + d.hi.point->str() + (d.hi.included ? "]" : ")");
  }
  return s;
}

bool SymbolicSet::contains(const DPoint& p) const {
  validate(model_, p);
  const Cut at = canonical_cut(model_, Cut::below(p));
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Component& c) { return c.lo <= at && at < c.hi; });
}

bool SymbolicSet::subset_of(const SymbolicSet& other) const { return set_difference(*this, other).is_empty(); }

SymbolicSet set_union(const SymbolicSet& a, const SymbolicSet& b) {
  if (!(a.model() == b.model())) throw DomainError("model_mismatch", "sets live in different models");
  std::vector<Component> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return {a.model(), all};
}

SymbolicSet set_complement(const SymbolicSet& a) {
  std::vector<Component> out;
  Cut from = Cut::bottom();
  for (const auto& c : a.components()) {
    out.push_back({from, c.lo});
    from = c.hi;
  }
  out.push_back({from, Cut::top()});
  return {a.model(), out};
}

SymbolicSet set_intersection(const SymbolicSet& a, const SymbolicSet& b) {
  return set_complement(set_union(set_complement(a), set_complement(b)));
}

SymbolicSet set_difference(const SymbolicSet& a, const SymbolicSet& b) {
  return set_intersection(a, set_complement(b));
}

SymbolicSet window(const IndexModel& model, const Coord& a, const ExtCoord& b) {
  if (!(ExtCoord(a) < b)) throw DomainError("empty_interval", "window needs a < b");
  return {model, {{Cut::below(DPoint::principal(a)), Cut::above(DPoint{b, Flavor::Strict})}}};
}

bool SerreRegion::contains(const Coord& a, const ExtCoord& b) const {
  const SymbolicSet w = window(model, a, b);
  return std::any_of(gaps.begin(), gaps.end(), [&](const RegionGap& g) {
    return g.covered && w.subset_of(SymbolicSet(model, {*g.covered}));
  });
}

SymbolicSet SerreRegion::covered_union() const {
  std::vector<Component> pieces;
  for (const auto& g : gaps)
    if (g.covered) pieces.push_back(*g.covered);
  return {model, pieces};
}

bool SerreRegion::subset_of(const SerreRegion& other) const {
  return covered_union().subset_of(other.covered_union());
}

SerreRegion left_orthogonal(const SymbolicSet& u) {
  SerreRegion r{u.model(), {}};
  for (const auto& gap : gaps_of(u)) {
    RegionGap g{gap, std::nullopt};
    const auto lo = covered_lo(u.model(), gap.lo);
    if (lo) {
      const Cut hi = covered_hi(gap.hi);
      const Cut clo = canonical_cut(u.model(), *lo), chi = canonical_cut(u.model(), hi);
      if (clo < chi) g.covered = Component{clo, chi};
    }
    r.gaps.push_back(std::move(g));
  }
  return r;
}

SymbolicSet right_orthogonal(const SerreRegion& r) { return set_complement(r.covered_union()); }

SymbolicSet closure(const SymbolicSet& u, ClosureStrategy strategy) {
  switch (strategy) {
    case ClosureStrategy::DoubleOrthogonal: return closure_double_orthogonal(u);
    case ClosureStrategy::SupInfSaturation: return closure_supinf(u);
    case ClosureStrategy::OrderTopology: return closure_order(u);
  }
  throw std::logic_error("unknown closure strategy");
}

bool is_closed(const SymbolicSet& u) { return closure(u, ClosureStrategy::DoubleOrthogonal) == u; }

bool is_open(const SymbolicSet& u) { return is_closed(set_complement(u)); }

std::pair<SymbolicSet, SymbolicSet> separate(const IndexModel& model, const DPoint& p, const DPoint& q) {
  SymbolicSet::require_dense(model);
  validate(model, p);
  validate(model, q);
  const auto order = cmp_d(p, q);
  if (order == 0) throw DomainError("equal_points", "cannot separate " + p.str() + " from itself");
  if (order > 0) {
    auto [v, u] = separate(model, q, p);
    return {std::move(u), std::move(v)};
  }
  const Coord& x = p.coord.finite();
  const Coord start = p.flavor == Flavor::Principal ? x : Coord(rational_below(x));
  if (q.is_top()) {
    const Coord split(rational_above(x));
    return {window(model, start, split), window(model, split + Coord(1), ExtCoord::infinity())};
  }
  const Coord& y = q.coord.finite();
  const Coord split = q.flavor == Flavor::Principal ? y : Coord(rational_between(x, y));
  return {window(model, start, split), window(model, split, ExtCoord::infinity())};
}

std::vector<SymbolicSet> noncompact_cover(const IndexModel& model, int depth) {
  std::vector<SymbolicSet> out;
  for (int n = -depth + 1; n <= 0; ++n) out.push_back(window(model, Coord(n - 1), Coord(n)));
  out.push_back(window(model, Coord(0), ExtCoord::infinity()));
  return out;
}

}  // namespace spectral
