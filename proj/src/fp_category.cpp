#include "spectral/fp_category.hpp"

namespace spectral {

void validate(const IndexModel& model, const FpInterval& x) {
  if (!model.is_member(x.start)) {
    throw DomainError("not_a_member", "interval start " + x.start.str() + " is not an element of T");
  }
  if (x.end.is_finite() && !model.is_member(x.end.finite())) {
    throw DomainError("not_a_member", "interval end " + x.end.str() + " is not an element of T");
  }
  if (!(ExtCoord(x.start) < x.end)) throw DomainError("empty_interval", "interval " + x.str() + " is empty");
}

int hom_dim(const FpInterval& x, const FpInterval& y) {
  return (y.start <= x.start && ExtCoord(x.start) < y.end && y.end <= x.end) ? 1 : 0;
}

int hom_to_injective(const FpInterval& x, const DPoint& ideal) {
  const bool above = d_less(DPoint::principal(x.start), ideal) || DPoint::principal(x.start) == ideal;
  const DPoint top{x.end, Flavor::Strict};
  const bool below = d_less(ideal, top) || ideal == top;
  return above && below ? 1 : 0;
}

std::vector<Index> canonical_order(const std::vector<FpInterval>& xs) {
  std::vector<Index> idx(xs.size());
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) {
    return xs[static_cast<std::size_t>(a)] < xs[static_cast<std::size_t>(b)];
  });
  return idx;
}

FpModule::FpModule(std::vector<FpInterval> summands) : summands_(std::move(summands)) {
  for (const auto& s : summands_) {
    if (!(ExtCoord(s.start) < s.end)) throw DomainError("empty_interval", "interval " + s.str() + " is empty");
  }
  std::stable_sort(summands_.begin(), summands_.end());
}

std::vector<Index> FpModule::alive_at(const Coord& t) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < summands_.size(); ++i)
    if (summands_[i].alive_at(t)) out.push_back(static_cast<Index>(i));
  return out;
}

bool FpModule::projective() const {
  return std::all_of(summands_.begin(), summands_.end(), [](const FpInterval& s) { return s.end.is_infinite(); });
}

std::vector<SamplePoint> critical_samples(std::span<const FpModule* const> modules, std::span<const Coord> extra) {
  std::vector<std::pair<Coord, bool>> points;  // (position, is an endpoint)
  for (const FpModule* m : modules) {
    for (const auto& s : m->summands()) {
      points.emplace_back(s.start, true);
      if (s.end.is_finite()) points.emplace_back(s.end.finite(), true);
    }
  }
  if (points.empty()) return {};
  for (const auto& c : extra) points.emplace_back(c, false);
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    if (const auto c = a.first <=> b.first; c != 0) return c < 0;
    return a.second > b.second;
  });
  std::vector<SamplePoint> out;
  for (const auto& [at, endpoint] : points) {
    if (!out.empty() && out.back().at == at) continue;
    if (!out.empty() && out.back().kind == SamplePoint::Kind::Endpoint && endpoint) {
      out.push_back({Coord(rational_between(out.back().at, at)), SamplePoint::Kind::Interior});
    }
    out.push_back({at, endpoint ? SamplePoint::Kind::Endpoint : SamplePoint::Kind::Interior});
  }
  out.push_back({out.back().at + Coord(1), SamplePoint::Kind::Beyond});
  return out;
}

}  // namespace spectral
