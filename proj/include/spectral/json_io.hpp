#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "spectral/barcode.hpp"
#include "spectral/errors.hpp"
#include "spectral/fp_category.hpp"
#include "spectral/interleaving.hpp"
#include "spectral/scalar.hpp"
#include "spectral/spectrum.hpp"

namespace spectral::json_io {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become MalformedInput.
Json parse_text(const std::string& text);

Json to_json(const Coord& c);
Json to_json(const ExtCoord& c);
Json to_json(const DPoint& p);
Json to_json(const FpInterval& x);
Json to_json(const FpModule& m);
Json to_json(const Barcode& b);
Json to_json(const DEndpoint& e);
Json to_json(const DInterval& d);
Json to_json(const SymbolicSet& s);
Json to_json(const SerreRegion& r);
Json to_json(const ExtDistance& d);

Rational rational_from_json(const Json& j);
Coord coord_from_json(const Json& j);
ExtCoord ext_coord_from_json(const Json& j);
DPoint dpoint_from_json(const Json& j);
/// Accepts {"start":..,"end":..} or the shorthand strings "[a,b)" and "[a,inf)".
FpInterval interval_from_json(const Json& j);
std::vector<FpInterval> summands_from_json(const Json& j);
FpModule module_from_json(const Json& j);
Barcode barcode_from_json(const Json& j);
DEndpoint endpoint_from_json(const Json& j);
SymbolicSet set_from_json(const IndexModel& model, const Json& j);
SerreRegion region_from_json(const IndexModel& model, const Json& j);

namespace detail {

[[noreturn]] void malformed(const std::string& what);
const Json& field(const Json& j, const char* key);
std::string string_of(const Json& j, const char* what);

}  // namespace detail

template <class S>
Json scalar_json(const S& x) {
  return scalar_string(x);
}

template <class S>
S scalar_from_json(const Json& j, const ScalarField& field) {
  return make_scalar<S>(rational_from_json(j), field);
}

template <class S>
Json to_json(const FpMorphism<S>& f) {
  Json entries = Json::array();
  for (const auto& e : spectral::entries(f)) {
    entries.push_back({{"from", e.from}, {"to", e.to}, {"value", scalar_json(e.value)}});
  }
  return {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"entries", entries}};
}

template <class S>
FpMorphism<S> morphism_from_json(const Json& j, const ScalarField& field) {
  if (!j.is_object()) detail::malformed("morphism must be an object");
  std::vector<MatrixEntry<S>> es;
  const Json& list = detail::field(j, "entries");
  if (!list.is_array()) detail::malformed("\"entries\" must be an array");
  for (const auto& e : list) {
    const Json& from = detail::field(e, "from");
    const Json& to = detail::field(e, "to");
    if (!from.is_number_integer() || !to.is_number_integer()) detail::malformed("entry indices must be integers");
    es.push_back({from.get<Index>(), to.get<Index>(), scalar_from_json<S>(detail::field(e, "value"), field)});
  }
  return make_morphism<S>(summands_from_json(detail::field(j, "source")), summands_from_json(detail::field(j, "target")),
                          es);
}

template <class S>
Json to_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j, Index rows, Index cols, const ScalarField& field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    detail::malformed("matrix must have " + std::to_string(rows) + " rows");
  }
  Matrix<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      detail::malformed("matrix rows must have " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json<S>(row[static_cast<std::size_t>(c)], field);
  }
  return m;
}

template <class S>
Json to_json(const ChainModule<S>& m) {
  Json maps = Json::array();
  for (const auto& map : m.maps) maps.push_back(to_json(map));
  return {{"dims", m.dims}, {"maps", maps}};
}

template <class S>
ChainModule<S> chain_from_json(const Json& j, const ScalarField& field) {
  if (!j.is_object()) detail::malformed("chain module must be an object");
  const Json& dims = detail::field(j, "dims");
  const Json& maps = detail::field(j, "maps");
  if (!dims.is_array() || !maps.is_array()) detail::malformed("\"dims\" and \"maps\" must be arrays");
  ChainModule<S> m;
  for (const auto& d : dims) {
    if (!d.is_number_integer() || d.get<long long>() < 0) detail::malformed("dims must be non-negative integers");
    m.dims.push_back(d.get<Index>());
  }
  if (m.dims.empty() || maps.size() + 1 != m.dims.size()) {
    detail::malformed("a chain module of length L needs L >= 1 dims and L - 1 maps");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    m.maps.push_back(matrix_from_json<S>(maps[i], m.dims[i + 1], m.dims[i], field));
  }
  return m;
}

template <class S>
struct GeneratorSet {
  FpModule ambient;
  std::vector<Generator<S>> generators;
};

template <class S>
GeneratorSet<S> generators_from_json(const Json& j, const ScalarField& field) {
  if (!j.is_object()) detail::malformed("generator set must be an object");
  // Coefficients follow the ambient summands as listed; re-index them canonically.
  const auto listed = summands_from_json(detail::field(j, "ambient"));
  const auto order = canonical_order(listed);
  GeneratorSet<S> g{FpModule(listed), {}};
  const Json& list = detail::field(j, "generators");
  if (!list.is_array()) detail::malformed("\"generators\" must be an array");
  for (const auto& x : list) {
    const Json& cs = detail::field(x, "coefficients");
    if (!cs.is_array()) detail::malformed("\"coefficients\" must be an array");
    if (cs.size() != listed.size()) detail::malformed("each generator needs one coefficient per ambient summand");
    Vector<S> v(static_cast<Index>(cs.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
      v(static_cast<Index>(k)) = scalar_from_json<S>(cs[static_cast<std::size_t>(order[k])], field);
    }
    g.generators.push_back({coord_from_json(detail::field(x, "position")), std::move(v)});
  }
  return g;
}

}  // namespace spectral::json_io
