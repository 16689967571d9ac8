#include "spectral/order.hpp"

#include "spectral/errors.hpp"

namespace spectral {

IndexModel IndexModel::finite_chain(std::size_t length) {
  if (length == 0) throw DomainError("invalid_model", "a finite chain needs at least one element");
  IndexModel m;
  m.kind_ = Kind::FiniteChain;
  m.length_ = length;
  return m;
}

IndexModel IndexModel::dense_line(CoordinateField field, Membership membership) {
  IndexModel m;
  m.kind_ = Kind::DenseLine;
  m.field_ = field;
  m.membership_ = membership;
  return m;
}

bool IndexModel::is_valid_coord(const Coord& c) const {
  if (kind_ == Kind::FiniteChain) {
    if (!c.is_rational() || !c.rational_part().is_integer()) return false;
    return c.rational_part().sign() >= 0 && c.rational_part() < Rational(static_cast<long>(length_));
  }
  return c.is_rational() || field_ == CoordinateField::RationalsWithSurds;
}

bool IndexModel::is_member(const Coord& c) const {
  if (!is_valid_coord(c)) return false;
  if (kind_ == Kind::FiniteChain) return true;
  return membership_ == Membership::AllCoords || c.is_rational();
}

std::string IndexModel::str() const {
  if (kind_ == Kind::FiniteChain) return "chain:" + std::to_string(length_);
  if (field_ == CoordinateField::RationalsWithSurds && membership_ == Membership::RationalsOnly) return "dense-surd";
  if (field_ == CoordinateField::RationalsOnly) return "dense";
  return "dense-surd-all";
}

std::string DPoint::str() const {
  return "(" + coord.str() + "," + (flavor == Flavor::Strict ? "S" : "P") + ")";
}

std::strong_ordering cmp_d(const DPoint& p, const DPoint& q) {
  if (const auto c = p.coord <=> q.coord; c != 0) return c;
  return static_cast<int>(p.flavor) <=> static_cast<int>(q.flavor);
}

void validate(const IndexModel& model, const DPoint& p) {
  if (p.coord.is_infinite()) {
    if (p.flavor != Flavor::Strict) throw DomainError("invalid_point", "(inf, Principal) is not an ideal");
    return;
  }
  const Coord& x = p.coord.finite();
  if (!model.is_valid_coord(x)) {
    throw DomainError("invalid_coordinate", "coordinate " + x.str() + " is not valid in model " + model.str());
  }
  if (p.flavor == Flavor::Principal && !model.is_member(x)) {
    throw DomainError("not_a_member", "principal ideal generated by " + x.str() + ", which is not an element of T");
  }
  if (model.kind() == IndexModel::Kind::FiniteChain && p.flavor == Flavor::Strict && x.sign() == 0) {
    throw DomainError("invalid_point", "(0, Strict) is empty in a finite chain and not an ideal");
  }
}

DPoint canonical_point(const IndexModel& model, const DPoint& p) {
  validate(model, p);
  if (model.kind() != IndexModel::Kind::FiniteChain || p.flavor == Flavor::Principal) return p;
  if (p.is_top()) return DPoint::principal(Coord(static_cast<long>(model.length() - 1)));
  return DPoint::principal(p.coord.finite() - Coord(1));
}

std::strong_ordering cmp_d(const IndexModel& model, const DPoint& p, const DPoint& q) {
  return cmp_d(canonical_point(model, p), canonical_point(model, q));
}

bool contains(const IndexModel& model, const DPoint& p, const Coord& t) {
  validate(model, p);
  if (!model.is_member(t)) {
    throw DomainError("not_a_member", t.str() + " is not an element of T in model " + model.str());
  }
  if (p.is_top()) return true;
  const Coord& x = p.coord.finite();
  return t < x || (t == x && p.flavor == Flavor::Principal);
}

IdealType classify_ideal(const IndexModel& model, const DPoint& p) {
  const DPoint c = canonical_point(model, p);
  if (c.flavor == Flavor::Principal) return IdealType::Type1;
  if (c.is_top()) return IdealType::Type3;
  return model.is_member(c.coord.finite()) ? IdealType::Type2 : IdealType::Type3;
}

DPoint infimum_from_above(const IndexModel& model, const Coord& x) {
  return model.is_member(x) ? DPoint::principal(x) : DPoint::strict(x);
}

}  // namespace spectral
