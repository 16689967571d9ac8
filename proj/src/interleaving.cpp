#include "spectral/interleaving.hpp"

#include "spectral/errors.hpp"

namespace spectral {

namespace {

void require_eps(const Rational& eps) {
  if (eps.sign() < 0) throw DomainError("negative_epsilon", "epsilon must be non-negative, got " + eps.str());
}

}  // namespace

FpInterval shift(const FpInterval& x, const Rational& eps) {
  require_eps(eps);
  const Coord e(eps);
  return {x.start - e, x.end.is_infinite() ? x.end : ExtCoord(x.end.finite() - e)};
}

DPoint shift(const DPoint& p, const Rational& eps) {
  require_eps(eps);
  if (p.is_top()) return p;
  return {ExtCoord(p.coord.finite() - Coord(eps)), p.flavor};
}

bool is_interleaved(const IndexModel& model, const DPoint& i, const DPoint& j, const Rational& eps) {
  SymbolicSet::require_dense(model);
  validate(model, i);
  validate(model, j);
  return cmp_d(shift(j, eps), i) <= 0 && cmp_d(shift(i, eps), j) <= 0;
}

ExtDistance operator+(const ExtDistance& a, const ExtDistance& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtDistance::infinite();
  return {*a.value + *b.value};
}

ExtDistance distance(const IndexModel& model, const DPoint& i, const DPoint& j) {
  SymbolicSet::require_dense(model);
  validate(model, i);
  validate(model, j);
  if (i.is_top() && j.is_top()) return {Coord(0)};
  if (i.is_top() || j.is_top()) return ExtDistance::infinite();
  return {abs(i.coord.finite() - j.coord.finite())};
}

SymbolicSet ball(const IndexModel& model, const DPoint& p, const Rational& eps) {
  SymbolicSet::require_dense(model);
  validate(model, p);
  if (eps.sign() <= 0) throw DomainError("nonpositive_epsilon", "ball radius must be positive, got " + eps.str());
  if (p.is_top()) return SymbolicSet::point(model, p);
  const Coord lo = p.coord.finite() - Coord(eps), hi = p.coord.finite() + Coord(eps);
  const DPoint below = model.is_member(lo) ? DPoint::principal(lo) : DPoint::strict(lo);
  return {model, {{Cut::above(below), Cut::below(DPoint::strict(hi))}}};
}

DistanceBracket brute_force_distance(const IndexModel& model, const DPoint& i, const DPoint& j, const Rational& step,
                                     const Rational& infinite_cutoff) {
  if (step.sign() <= 0) throw DomainError("nonpositive_step", "scan step must be positive");
  SymbolicSet::require_dense(model);
  validate(model, i);
  validate(model, j);
  Rational cutoff = infinite_cutoff;
  if (i.coord.is_finite() && j.coord.is_finite()) {
    const Coord gap = abs(i.coord.finite() - j.coord.finite());
    cutoff = Rational(mpq_class(floor(gap) + 1)) + Rational(1);
  }
  for (Rational eps(0); eps <= cutoff; eps = eps + step) {
    if (!is_interleaved(model, i, j, eps)) continue;
    if (eps.is_zero()) return {false, eps, eps};
    return {false, eps - step, eps};
  }
  return {true, Rational(0), Rational(0)};
}

}  // namespace spectral
