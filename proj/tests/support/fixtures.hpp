#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "spectral/barcode.hpp"
#include "spectral/fp_category.hpp"
#include "spectral/spectrum.hpp"

namespace fixtures {

using namespace spectral;

/// Seed for all randomized fixtures; SPECTRAL_SEED overrides it.
inline std::uint64_t seed() {
  if (const char* env = std::getenv("SPECTRAL_SEED"); env && *env) return std::stoull(env);
  return 20240611;
}

class Rng {
 public:
  explicit Rng(std::uint64_t salt = 0) : gen_(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  /// Multiple of 1/den in [lo, hi].
  Rational grid(long lo, long hi, long den) { return Rational(integer(lo * den, hi * den), den); }

  /// Rational in [lo, hi] with a random denominator from {1, 2, 3, 4}.
  Rational rational(long lo, long hi) { return grid(lo, hi, integer(1, 4)); }

  Flavor flavor() { return chance(0.5) ? Flavor::Strict : Flavor::Principal; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline IndexModel real_line() { return IndexModel::real_line(); }

/// Random ideal with coordinate in [-range, range]; (inf, Strict) with probability p_top.
inline DPoint random_point(Rng& rng, long range, double p_top = 0.05) {
  if (rng.chance(p_top)) return DPoint::top();
  return {ExtCoord(rng.rational(-range, range)), rng.flavor()};
}

/// Random canonical set with at most `max_components` D-intervals, finite
/// endpoints in [-range, range]; unbounded ends appear now and then.
inline SymbolicSet random_set(Rng& rng, const IndexModel& model, std::size_t max_components = 5, long range = 10) {
  const auto n = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_components)));
  std::vector<DPoint> ends;
  for (std::size_t k = 0; k < 2 * n; ++k) ends.push_back({ExtCoord(rng.rational(-range, range)), rng.flavor()});
  std::sort(ends.begin(), ends.end(), [](const DPoint& a, const DPoint& b) { return d_less(a, b); });
  std::vector<DInterval> xs;
  for (std::size_t k = 0; k < n; ++k) {
    DInterval d{{ends[2 * k], rng.chance(0.5)}, {ends[2 * k + 1], rng.chance(0.5)}};
    if (k == 0 && rng.chance(0.15)) d.lo = {std::nullopt, false};
    if (k + 1 == n && rng.chance(0.15)) d.hi = {DPoint::top(), rng.chance(0.5)};
    xs.push_back(d);
  }
  return SymbolicSet::from_intervals(model, xs);
}

/// Random interval [a, b) with endpoints in {lo, ..., hi} or b = inf.
inline FpInterval random_interval(Rng& rng, long lo, long hi, double p_inf = 0.2) {
  const long a = rng.integer(lo, hi - 1);
  if (rng.chance(p_inf)) return {Coord(a), ExtCoord::infinity()};
  return {Coord(a), ExtCoord(Coord(rng.integer(a + 1, hi)))};
}

inline std::vector<FpInterval> random_summands(Rng& rng, std::size_t max_count, long lo, long hi) {
  std::vector<FpInterval> out;
  const auto n = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_count)));
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_interval(rng, lo, hi));
  return out;
}

/// Random morphism: every admissible entry is a random small integer (often zero).
template <class S>
FpMorphism<S> random_morphism(Rng& rng, std::size_t max_summands = 4, long lo = 0, long hi = 8) {
  const auto src = random_summands(rng, max_summands, lo, hi);
  const auto tgt = random_summands(rng, max_summands, lo, hi);
  std::vector<MatrixEntry<S>> es;
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      if (hom_dim(src[i], tgt[j]) == 0 || rng.chance(0.3)) continue;
      es.push_back({static_cast<Index>(i), static_cast<Index>(j), S(static_cast<int>(rng.integer(-3, 3)))});
    }
  }
  return make_morphism<S>(src, tgt, es);
}

template <class S>
Matrix<S> random_matrix(Rng& rng, Index rows, Index cols, long range = 2, double p_zero = 0.3) {
  Matrix<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = rng.chance(p_zero) ? S(0) : S(static_cast<int>(rng.integer(-range, range)));
  return m;
}

/// Random invertible matrix: product of a unit lower and a unit upper triangular matrix.
template <class S>
Matrix<S> random_invertible(Rng& rng, Index n) {
  Matrix<S> l = Matrix<S>::Identity(n, n), u = Matrix<S>::Identity(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < r; ++c) l(r, c) = S(static_cast<int>(rng.integer(-2, 2)));
    for (Index c = r + 1; c < n; ++c) u(r, c) = S(static_cast<int>(rng.integer(-2, 2)));
  }
  return l * u;
}

template <class S>
ChainModule<S> random_chain(Rng& rng, Index max_length, Index max_dim, double p_zero = 0.3) {
  ChainModule<S> m;
  const Index L = rng.integer(1, max_length);
  for (Index t = 0; t < L; ++t) m.dims.push_back(rng.integer(0, max_dim));
  for (Index t = 0; t + 1 < L; ++t) {
    m.maps.push_back(random_matrix<S>(rng, m.dims[static_cast<std::size_t>(t + 1)], m.dims[static_cast<std::size_t>(t)], 2,
                                      p_zero));
  }
  return m;
}

inline Barcode random_barcode(Rng& rng, std::size_t max_bars, Index length) {
  std::vector<Bar> bars;
  const auto n = static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_bars)));
  for (std::size_t k = 0; k < n; ++k) {
    const Index s = rng.integer(0, length - 1);
    bars.push_back({s, rng.integer(s + 1, length), 1});
  }
  return Barcode(std::move(bars));
}

}  // namespace fixtures
