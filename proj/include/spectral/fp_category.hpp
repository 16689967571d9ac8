#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "spectral/barcode.hpp"
#include "spectral/coord.hpp"
#include "spectral/errors.hpp"
#include "spectral/linalg.hpp"
#include "spectral/order.hpp"

namespace spectral {

/// The interval module k_[start, end); end = inf gives the projective k_[start, inf).
struct FpInterval {
  Coord start;
  ExtCoord end;

  bool alive_at(const Coord& t) const { return start <= t && ExtCoord(t) < end; }
  std::string str() const { return "[" + start.str() + "," + end.str() + ")"; }

  friend bool operator==(const FpInterval&, const FpInterval&) = default;
  friend std::strong_ordering operator<=>(const FpInterval& a, const FpInterval& b) {
    if (const auto c = a.start <=> b.start; c != 0) return c;
    return a.end <=> b.end;
  }
};

/// Throws DomainError unless start < end and both endpoints are elements of T.
void validate(const IndexModel& model, const FpInterval& x);

/// dim Hom(k_[a,b), k_[c,d)) = 1 iff c <= a < d <= b, else 0.
int hom_dim(const FpInterval& x, const FpInterval& y);

/// dim Hom(k_[a,b), k_I) = 1 iff (a, Principal) <= I <= (b, Strict), else 0.
int hom_to_injective(const FpInterval& x, const DPoint& ideal);

/// Finite direct sum of interval modules, summands sorted by (start, end).
class FpModule {
 public:
  FpModule() = default;
  explicit FpModule(std::vector<FpInterval> summands);

  const std::vector<FpInterval>& summands() const { return summands_; }
  Index size() const { return static_cast<Index>(summands_.size()); }
  const FpInterval& operator[](Index i) const { return summands_[static_cast<std::size_t>(i)]; }

  /// Summand indices alive at t, ascending.
  std::vector<Index> alive_at(const Coord& t) const;
  bool projective() const;

  friend bool operator==(const FpModule&, const FpModule&) = default;

 private:
  std::vector<FpInterval> summands_;
};

/// Permutation sorting `xs` canonically: result[k] is the original index of the k-th summand.
std::vector<Index> canonical_order(const std::vector<FpInterval>& xs);

/// Morphism of fp modules as a scalar matrix: matrix(j, i) is the scalar from
/// source summand i to target summand j, nonzero only where hom_dim = 1.
template <class S>
struct FpMorphism {
  FpModule source;
  FpModule target;
  Matrix<S> matrix;
};

template <class S>
struct MatrixEntry {
  Index from = 0;
  Index to = 0;
  S value;
};

template <class S>
void validate(const FpMorphism<S>& f) {
  if (f.matrix.rows() != f.target.size() || f.matrix.cols() != f.source.size()) {
    throw DomainError("shape_mismatch", "morphism matrix does not match source and target");
  }
  for (Index j = 0; j < f.matrix.rows(); ++j) {
    for (Index i = 0; i < f.matrix.cols(); ++i) {
      if (!is_zero(f.matrix(j, i)) && hom_dim(f.source[i], f.target[j]) == 0) {
        throw DomainError("not_natural", "nonzero entry from " + f.source[i].str() + " to " + f.target[j].str() +
                                             ", where Hom vanishes");
      }
    }
  }
}

/// Builds a morphism from unsorted summand lists and sparse entries (indices
/// refer to the given order), re-indexing everything into canonical order.
template <class S>
FpMorphism<S> make_morphism(const std::vector<FpInterval>& source, const std::vector<FpInterval>& target,
                            const std::vector<MatrixEntry<S>>& entries) {
  const auto ps = canonical_order(source);
  const auto pt = canonical_order(target);
  std::vector<Index> pos_s(ps.size()), pos_t(pt.size());
  for (std::size_t k = 0; k < ps.size(); ++k) pos_s[static_cast<std::size_t>(ps[k])] = static_cast<Index>(k);
  for (std::size_t k = 0; k < pt.size(); ++k) pos_t[static_cast<std::size_t>(pt[k])] = static_cast<Index>(k);
  FpMorphism<S> f{FpModule(source), FpModule(target),
                  Matrix<S>::Zero(static_cast<Index>(target.size()), static_cast<Index>(source.size()))};
  for (const auto& e : entries) {
    if (e.from < 0 || e.to < 0 || e.from >= f.source.size() || e.to >= f.target.size()) {
      throw DomainError("shape_mismatch", "matrix entry index out of range");
    }
    f.matrix(pos_t[static_cast<std::size_t>(e.to)], pos_s[static_cast<std::size_t>(e.from)]) += e.value;
  }
  validate(f);
  return f;
}

template <class S>
std::vector<MatrixEntry<S>> entries(const FpMorphism<S>& f) {
  std::vector<MatrixEntry<S>> out;
  for (Index i = 0; i < f.matrix.cols(); ++i)
    for (Index j = 0; j < f.matrix.rows(); ++j)
      if (!is_zero(f.matrix(j, i))) out.push_back({i, j, f.matrix(j, i)});
  return out;
}

template <class S>
FpMorphism<S> identity(const FpModule& m) {
  return {m, m, Matrix<S>::Identity(m.size(), m.size())};
}

template <class S>
FpMorphism<S> zero_morphism(const FpModule& source, const FpModule& target) {
  return {source, target, Matrix<S>::Zero(target.size(), source.size())};
}

/// f after g. Entries of the product at pairs with vanishing Hom are dropped:
/// any natural transformation between such summands is zero.
template <class S>
FpMorphism<S> compose(const FpMorphism<S>& f, const FpMorphism<S>& g) {
  if (!(g.target == f.source)) throw DomainError("shape_mismatch", "compose: target(g) differs from source(f)");
  FpMorphism<S> h{g.source, f.target, f.matrix * g.matrix};
  for (Index j = 0; j < h.matrix.rows(); ++j)
    for (Index i = 0; i < h.matrix.cols(); ++i)
      if (hom_dim(h.source[i], h.target[j]) == 0) h.matrix(j, i) = S(0);
  return h;
}

/// f_t : M_t -> N_t in the bases of summands alive at t.
template <class S>
Matrix<S> evaluate(const FpMorphism<S>& f, const Coord& t) {
  const auto src = f.source.alive_at(t);
  const auto tgt = f.target.alive_at(t);
  Matrix<S> m(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));
  for (std::size_t j = 0; j < tgt.size(); ++j)
    for (std::size_t i = 0; i < src.size(); ++i) m(static_cast<Index>(j), static_cast<Index>(i)) = f.matrix(tgt[j], src[i]);
  return m;
}

/// Structure map M(s <= t): identity on summands alive at both, zero otherwise.
template <class S>
Matrix<S> structure_map(const FpModule& m, const Coord& s, const Coord& t) {
  const auto from = m.alive_at(s);
  const auto to = m.alive_at(t);
  Matrix<S> out = Matrix<S>::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
  for (std::size_t c = 0; c < from.size(); ++c) {
    const auto it = std::find(to.begin(), to.end(), from[c]);
    if (it != to.end()) out(static_cast<Index>(it - to.begin()), static_cast<Index>(c)) = S(1);
  }
  return out;
}

/// Sample of the critical grid: the finite endpoints, one midpoint per open
/// cell, and one point beyond the largest endpoint.
struct SamplePoint {
  enum class Kind { Endpoint, Interior, Beyond };
  Coord at;
  Kind kind = Kind::Endpoint;
};

/// Critical grid of the given modules, refined by any `extra` points.
std::vector<SamplePoint> critical_samples(std::span<const FpModule* const> modules, std::span<const Coord> extra = {});

namespace detail {

// Lifts chain bars over the sample grid back to T-intervals. Interval modules are
// constant on grid cells, so a bar must be born at an endpoint sample and must
// die at one; anything else means the sampled data is not an fp module.
inline FpInterval lift_bar(const std::vector<SamplePoint>& samples, const Bar& bar) {
  const auto& s = samples[static_cast<std::size_t>(bar.start)];
  if (s.kind != SamplePoint::Kind::Endpoint) {
    throw std::logic_error("bar born at a non-endpoint sample " + s.at.str() + ": module not constant on cells");
  }
  if (bar.end == static_cast<Index>(samples.size())) return {s.at, ExtCoord::infinity()};
  const auto& e = samples[static_cast<std::size_t>(bar.end)];
  if (e.kind != SamplePoint::Kind::Endpoint) {
    throw std::logic_error("bar dies at a non-endpoint sample " + e.at.str() + ": module not constant on cells");
  }
  return {s.at, ExtCoord(e.at)};
}

// Columns sorted by the canonical order of their lifted intervals.
inline std::vector<std::size_t> sorted_by_interval(const std::vector<FpInterval>& xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  return idx;
}

}  // namespace detail

template <class S>
struct KernelResult {
  FpModule module;
  FpMorphism<S> inclusion;  // module -> source(f)
};

template <class S>
struct CokernelResult {
  FpModule module;
  FpMorphism<S> projection;  // target(f) -> module
};

/// Kernel of f with its embedding, via exact pointwise kernels on the critical
/// grid, an explicit interval decomposition of the sampled chain, and lifting
/// of the bars back to T.
template <class S>
KernelResult<S> kernel(const FpMorphism<S>& f, std::span<const Coord> extra_samples = {}) {
  validate(f);
  const FpModule* mods[] = {&f.source, &f.target};
  const auto samples = critical_samples(mods, extra_samples);
  const std::size_t L = samples.size();
  if (L == 0) return {FpModule(), zero_morphism<S>(FpModule(), f.source)};

  std::vector<Matrix<S>> bases;  // ker f_t, columns in alive-source coordinates
  ChainModule<S> chain;
  for (const auto& s : samples) {
    bases.push_back(linalg::nullspace<S>(evaluate(f, s.at)));
    chain.dims.push_back(bases.back().cols());
  }
  for (std::size_t i = 0; i + 1 < L; ++i) {
    const Matrix<S> moved = structure_map<S>(f.source, samples[i].at, samples[i + 1].at) * bases[i];
    auto coords = linalg::solve<S>(bases[i + 1], moved);
    if (!coords) throw std::logic_error("kernel: structure map does not preserve pointwise kernels");
    chain.maps.push_back(std::move(*coords));
  }
  const IntervalBasis<S> ib = interval_basis(chain);

  std::vector<FpInterval> lifted;
  std::vector<Vector<S>> columns;  // generators in full source coordinates
  for (std::size_t k = 0; k < ib.bars.size(); ++k) {
    const Bar& bar = ib.bars[k];
    lifted.push_back(detail::lift_bar(samples, bar));
    const Coord& at = samples[static_cast<std::size_t>(bar.start)].at;
    const Vector<S> local = bases[static_cast<std::size_t>(bar.start)] * ib.generators[k];
    Vector<S> full = Vector<S>::Zero(f.source.size());
    const auto alive = f.source.alive_at(at);
    for (std::size_t r = 0; r < alive.size(); ++r) full(alive[r]) = local(static_cast<Index>(r));
    columns.push_back(std::move(full));
  }
  const auto order = detail::sorted_by_interval(lifted);
  std::vector<FpInterval> sorted;
  Matrix<S> iota(f.source.size(), static_cast<Index>(order.size()));
  for (std::size_t c = 0; c < order.size(); ++c) {
    sorted.push_back(lifted[order[c]]);
    iota.col(static_cast<Index>(c)) = columns[order[c]];
  }
  KernelResult<S> out{FpModule(sorted), {FpModule(sorted), f.source, std::move(iota)}};
  validate(out.inclusion);
  return out;
}

/// Cokernel of f with its projection, built like `kernel` from pointwise quotients.
template <class S>
CokernelResult<S> cokernel(const FpMorphism<S>& f, std::span<const Coord> extra_samples = {}) {
  validate(f);
  const FpModule* mods[] = {&f.source, &f.target};
  const auto samples = critical_samples(mods, extra_samples);
  const std::size_t L = samples.size();
  if (L == 0) return {FpModule(), zero_morphism<S>(f.target, FpModule())};

  // At each sample: a complement of im f_t spanned by standard vectors, and the
  // quotient map onto it (last rows of [image | complement]^{-1}).
  std::vector<Matrix<S>> complements, quotients;
  ChainModule<S> chain;
  for (const auto& s : samples) {
    const Matrix<S> ft = evaluate(f, s.at);
    const Index n = ft.rows();
    std::vector<Index> img_cols = linalg::independent_columns<S>(ft);
    Matrix<S> aug(n, static_cast<Index>(img_cols.size()) + n);
    for (std::size_t c = 0; c < img_cols.size(); ++c) aug.col(static_cast<Index>(c)) = ft.col(img_cols[c]);
    aug.rightCols(n) = Matrix<S>::Identity(n, n);
    const std::vector<Index> chosen = linalg::independent_columns<S>(aug);
    Matrix<S> square(n, n), comp(n, n - static_cast<Index>(img_cols.size()));
    Index cc = 0;
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      square.col(static_cast<Index>(c)) = aug.col(chosen[c]);
      if (chosen[c] >= static_cast<Index>(img_cols.size())) comp.col(cc++) = aug.col(chosen[c]);
    }
    const auto inv = linalg::inverse<S>(square);
    if (!inv) throw std::logic_error("cokernel: failed to complete the image to a basis");
    quotients.push_back(inv->bottomRows(comp.cols()));
    complements.push_back(std::move(comp));
    chain.dims.push_back(complements.back().cols());
  }
  for (std::size_t i = 0; i + 1 < L; ++i) {
    chain.maps.push_back(quotients[i + 1] * structure_map<S>(f.target, samples[i].at, samples[i + 1].at) *
                         complements[i]);
  }
  const IntervalBasis<S> ib = interval_basis(chain);

  std::vector<FpInterval> lifted;
  for (const Bar& bar : ib.bars) lifted.push_back(detail::lift_bar(samples, bar));
  const auto order = detail::sorted_by_interval(lifted);
  std::vector<Index> column_of(order.size());
  std::vector<FpInterval> sorted;
  for (std::size_t c = 0; c < order.size(); ++c) {
    sorted.push_back(lifted[order[c]]);
    column_of[order[c]] = static_cast<Index>(c);
  }

  // Each target summand [c, d) is determined by its generator at c: express the
  // class of that generator in the adapted basis of the cokernel at c.
  Matrix<S> pi = Matrix<S>::Zero(static_cast<Index>(sorted.size()), f.target.size());
  for (Index j = 0; j < f.target.size(); ++j) {
    const Coord& c = f.target[j].start;
    const auto at = std::find_if(samples.begin(), samples.end(), [&](const SamplePoint& s) { return s.at == c; });
    const auto t = static_cast<std::size_t>(at - samples.begin());
    const auto alive = f.target.alive_at(c);
    Vector<S> y = Vector<S>::Zero(static_cast<Index>(alive.size()));
    y(static_cast<Index>(std::find(alive.begin(), alive.end(), j) - alive.begin())) = S(1);
    const Vector<S> q = quotients[t] * y;
    auto coeffs = linalg::solve<S>(ib.basis[t], Matrix<S>(q));
    if (!coeffs) throw std::logic_error("cokernel: adapted basis does not span the quotient");
    for (std::size_t c = 0; c < ib.alive[t].size(); ++c) {
      pi(column_of[ib.alive[t][c]], j) = (*coeffs)(static_cast<Index>(c), 0);
    }
  }
  CokernelResult<S> out{FpModule(sorted), {f.target, FpModule(sorted), std::move(pi)}};
  validate(out.projection);
  return out;
}

/// An element of a projective ambient module, living at `position`.
template <class S>
struct Generator {
  Coord position;
  Vector<S> coefficients;  // one scalar per ambient summand
};

/// Thins a generating set of a submodule of a projective module to a linearly
/// independent one: while a relation exists, drop the generator of maximal
/// position among those with nonzero coefficient (ties: largest index).
/// Returns the retained indices in ascending order.
template <class S>
std::vector<std::size_t> reduce_generators(const FpModule& ambient, const std::vector<Generator<S>>& gens) {
  if (!ambient.projective()) throw DomainError("not_projective", "reduce_generators needs every summand end = inf");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].coefficients.size() != ambient.size()) {
      throw DomainError("shape_mismatch", "generator " + std::to_string(k) + " has the wrong number of coefficients");
    }
    for (Index i = 0; i < ambient.size(); ++i) {
      if (!is_zero(gens[k].coefficients(i)) && !ambient[i].alive_at(gens[k].position)) {
        throw DomainError("dead_summand", "generator " + std::to_string(k) + " at " + gens[k].position.str() +
                                              " uses summand " + ambient[i].str() + ", not yet alive there");
      }
    }
  }
  std::vector<std::size_t> active(gens.size());
  std::iota(active.begin(), active.end(), std::size_t{0});
  for (;;) {
    Matrix<S> g(ambient.size(), static_cast<Index>(active.size()));
    for (std::size_t c = 0; c < active.size(); ++c) g.col(static_cast<Index>(c)) = gens[active[c]].coefficients;
    // Structure maps of a projective are injective, so a relation at any point
    // is a relation between the coefficient vectors.
    const Matrix<S> relations = linalg::nullspace<S>(g);
    if (relations.cols() == 0) break;
    std::size_t victim = active.size();
    for (std::size_t c = 0; c < active.size(); ++c) {
      if (is_zero(relations(static_cast<Index>(c), 0))) continue;
      if (victim == active.size() || gens[active[c]].position >= gens[active[victim]].position) victim = c;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  return active;
}

/// Flat iff every structure map is injective.
template <class S>
bool is_flat(const ChainModule<S>& m) {
  m.validate();
  for (const auto& map : m.maps) {
    if (linalg::rank<S>(map) != map.cols()) return false;
  }
  return true;
}

}  // namespace spectral
