#include "spectral/json_io.hpp"

#include <cctype>

namespace spectral::json_io {

namespace detail {

void malformed(const std::string& what) { throw MalformedInput(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Json flavor_json(Flavor f) { return f == Flavor::Strict ? "strict" : "principal"; }

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Coord& c) {
  if (c.is_rational()) return c.as_rational().str();
  return {{"rat", c.rational_part().str()},
          {"surd", {{"q", c.surd_coefficient().str()}, {"d", c.radicand()}}}};
}

Json to_json(const ExtCoord& c) { return c.is_infinite() ? Json("inf") : to_json(c.finite()); }

Json to_json(const DPoint& p) { return {{"coord", to_json(p.coord)}, {"flavor", flavor_json(p.flavor)}}; }

Json to_json(const FpInterval& x) { return {{"start", to_json(x.start)}, {"end", to_json(x.end)}}; }

Json to_json(const FpModule& m) {
  Json s = Json::array();
  for (const auto& x : m.summands()) s.push_back(to_json(x));
  return {{"summands", s}};
}

Json to_json(const Barcode& b) {
  Json bars = Json::array();
  for (const auto& bar : b.bars()) bars.push_back({{"start", bar.start}, {"end", bar.end}, {"mult", bar.multiplicity}});
  return {{"bars", bars}};
}

Json to_json(const DEndpoint& e) {
  return {{"point", e.point ? to_json(*e.point) : Json("below_all")}, {"included", e.included}};
}

Json to_json(const DInterval& d) { return {{"lo", to_json(d.lo)}, {"hi", to_json(d.hi)}}; }

Json to_json(const SymbolicSet& s) {
  Json cs = Json::array();
  for (const auto& d : s.intervals()) cs.push_back(to_json(d));
  return {{"components", cs}};
}

Json to_json(const SerreRegion& r) {
  Json gaps = Json::array();
  for (const auto& g : r.gaps) {
    const auto as_interval = [&](const Component& c) { return to_json(SymbolicSet(r.model, {c}).intervals().at(0)); };
    gaps.push_back({{"gap", as_interval(g.gap)}, {"covered", g.covered ? as_interval(*g.covered) : Json(nullptr)}});
  }
  return {{"gaps", gaps}};
}

Json to_json(const ExtDistance& d) {
  if (d.is_infinite()) return {{"infinite", true}};
  return {{"finite", to_json(*d.value)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(detail::string_of(j, "rational value"));
}

Coord coord_from_json(const Json& j) {
  if (j.is_object()) {
    const Json& surd = detail::field(j, "surd");
    const Json& d = detail::field(surd, "d");
    if (!d.is_number_integer() || d.get<long long>() <= 0) detail::malformed("surd radicand must be a positive integer");
    return Coord::surd(rational_from_json(detail::field(j, "rat")), rational_from_json(detail::field(surd, "q")),
                       d.get<std::uint64_t>());
  }
  if (j.is_string() && j.get<std::string>() == "inf") detail::malformed("\"inf\" is not a finite coordinate");
  return Coord(rational_from_json(j));
}

ExtCoord ext_coord_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtCoord::infinity();
  return ExtCoord(coord_from_json(j));
}

DPoint dpoint_from_json(const Json& j) {
  const std::string flavor = detail::string_of(detail::field(j, "flavor"), "flavor");
  if (flavor != "strict" && flavor != "principal") detail::malformed("flavor must be \"strict\" or \"principal\"");
  return {ext_coord_from_json(detail::field(j, "coord")), flavor == "strict" ? Flavor::Strict : Flavor::Principal};
}

FpInterval interval_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = trim(j.get<std::string>());
    const auto comma = s.find(',');
    if (s.size() < 5 || s.front() != '[' || s.back() != ')' || comma == std::string::npos) {
      detail::malformed("interval shorthand must look like \"[a,b)\", got \"" + s + "\"");
    }
    const std::string a = trim(s.substr(1, comma - 1)), b = trim(s.substr(comma + 1, s.size() - comma - 2));
    FpInterval x{Coord(Rational::parse(a)), b == "inf" ? ExtCoord::infinity() : ExtCoord(Rational::parse(b))};
    if (!(ExtCoord(x.start) < x.end)) throw DomainError("empty_interval", "interval " + s + " is empty");
    return x;
  }
  FpInterval x{coord_from_json(detail::field(j, "start")), ext_coord_from_json(detail::field(j, "end"))};
  if (!(ExtCoord(x.start) < x.end)) throw DomainError("empty_interval", "interval " + x.str() + " is empty");
  return x;
}

std::vector<FpInterval> summands_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : detail::field(j, "summands");
  if (!list.is_array()) detail::malformed("\"summands\" must be an array");
  std::vector<FpInterval> out;
  for (const auto& x : list) out.push_back(interval_from_json(x));
  return out;
}

FpModule module_from_json(const Json& j) { return FpModule(summands_from_json(j)); }

Barcode barcode_from_json(const Json& j) {
  const Json& list = detail::field(j, "bars");
  if (!list.is_array()) detail::malformed("\"bars\" must be an array");
  std::vector<Bar> bars;
  for (const auto& b : list) {
    const Json &s = detail::field(b, "start"), &e = detail::field(b, "end");
    if (!s.is_number_integer() || !e.is_number_integer()) detail::malformed("bar ends must be integers");
    Index mult = 1;
    if (b.contains("mult")) {
      if (!b["mult"].is_number_integer()) detail::malformed("bar multiplicity must be an integer");
      mult = b["mult"].get<Index>();
    }
    if (s.get<Index>() < 0 || s.get<Index>() >= e.get<Index>()) {
      throw DomainError("invalid_barcode", "bar needs 0 <= start < end");
    }
    bars.push_back({s.get<Index>(), e.get<Index>(), mult});
  }
  return Barcode(std::move(bars));
}

DEndpoint endpoint_from_json(const Json& j) {
  const Json& point = detail::field(j, "point");
  const Json& included = detail::field(j, "included");
  if (!included.is_boolean()) detail::malformed("\"included\" must be a boolean");
  DEndpoint e;
  e.included = included.get<bool>();
  if (point.is_string() && point.get<std::string>() == "below_all") return e;
  e.point = dpoint_from_json(point);
  return e;
}

namespace {

DInterval dinterval_from_json(const Json& j) {
  return {endpoint_from_json(detail::field(j, "lo")), endpoint_from_json(detail::field(j, "hi"))};
}

}  // namespace

SymbolicSet set_from_json(const IndexModel& model, const Json& j) {
  const Json& list = j.is_array() ? j : detail::field(j, "components");
  if (!list.is_array()) detail::malformed("\"components\" must be an array");
  std::vector<DInterval> xs;
  for (const auto& c : list) xs.push_back(dinterval_from_json(c));
  return SymbolicSet::from_intervals(model, xs);
}

SerreRegion region_from_json(const IndexModel& model, const Json& j) {
  const Json& list = detail::field(j, "gaps");
  if (!list.is_array()) detail::malformed("\"gaps\" must be an array");
  SerreRegion r{model, {}};
  const auto component = [&](const Json& x) {
    const SymbolicSet s = SymbolicSet::from_intervals(model, {dinterval_from_json(x)});
    if (s.components().size() != 1) throw DomainError("invalid_region", "region pieces must be nonempty intervals");
    return s.components()[0];
  };
  for (const auto& g : list) {
    RegionGap rg{component(detail::field(g, "gap")), std::nullopt};
    const Json& covered = detail::field(g, "covered");
    if (!covered.is_null()) rg.covered = component(covered);
    r.gaps.push_back(std::move(rg));
  }
  return r;
}

}  // namespace spectral::json_io
