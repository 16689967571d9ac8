#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/linalg.hpp"

namespace spectral {

/// Pointwise finite-dimensional module over the chain 0 < 1 < ... < L-1.
/// maps[i] : k^dims[i] -> k^dims[i+1], stored as a dims[i+1] x dims[i] matrix.
template <class S>
struct ChainModule {
  std::vector<Index> dims;
  std::vector<Matrix<S>> maps;

  Index length() const { return static_cast<Index>(dims.size()); }

  void validate() const {
    if (dims.empty()) throw DomainError("shape_mismatch", "chain module needs length >= 1");
    if (maps.size() + 1 != dims.size()) {
      throw DomainError("shape_mismatch", "chain module of length " + std::to_string(dims.size()) + " needs " +
                                              std::to_string(dims.size() - 1) + " maps");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (dims[i] < 0 || maps[i].rows() != dims[i + 1] || maps[i].cols() != dims[i]) {
        throw DomainError("shape_mismatch", "map " + std::to_string(i) + " has the wrong shape");
      }
    }
    if (dims.back() < 0) throw DomainError("shape_mismatch", "negative dimension");
  }
};

/// Grid bar [start, end) with 0 <= start < end <= L; end = L means alive to the end.
struct Bar {
  Index start = 0;
  Index end = 0;
  Index multiplicity = 1;

  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Multiset of bars in canonical form: sorted by (start, end), one entry per
/// distinct bar, positive multiplicities.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Bar> bars) {
    for (const Bar& b : bars) {
      if (b.multiplicity < 0) throw DomainError("invalid_barcode", "negative multiplicity");
      if (b.multiplicity == 0) continue;
      auto it = std::find_if(bars_.begin(), bars_.end(),
                             [&](const Bar& c) { return c.start == b.start && c.end == b.end; });
      if (it != bars_.end()) it->multiplicity += b.multiplicity;
      else bars_.push_back(b);
    }
    std::sort(bars_.begin(), bars_.end(),
              [](const Bar& a, const Bar& b) { return std::tie(a.start, a.end) < std::tie(b.start, b.end); });
  }

  const std::vector<Bar>& bars() const { return bars_; }
  bool empty() const { return bars_.empty(); }

  /// Sum of multiplicities of bars alive at t.
  Index dimension_at(Index t) const {
    Index d = 0;
    for (const Bar& b : bars_)
      if (b.start <= t && t < b.end) d += b.multiplicity;
    return d;
  }

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

/// Composite structure map from vertex i to vertex j (i <= j).
template <class S>
Matrix<S> transition(const ChainModule<S>& m, Index i, Index j) {
  Matrix<S> p = Matrix<S>::Identity(m.dims[static_cast<std::size_t>(i)], m.dims[static_cast<std::size_t>(i)]);
  for (Index k = i; k < j; ++k) p = (m.maps[static_cast<std::size_t>(k)] * p).eval();
  return p;
}

/// Rank of the composite m(i <= j).
template <class S>
Index rank_invariant(const ChainModule<S>& m, Index i, Index j) {
  m.validate();
  if (i < 0 || j < i || j >= m.length()) {
    throw DomainError("index_out_of_range", "rank_invariant needs 0 <= i <= j < L");
  }
  return linalg::rank<S>(transition(m, i, j));
}

/// r[i][j] = rank m(i <= j) for i <= j (entries with j < i are unused).
template <class S>
std::vector<std::vector<Index>> rank_table(const ChainModule<S>& m) {
  m.validate();
  const auto L = static_cast<std::size_t>(m.length());
  std::vector<std::vector<Index>> r(L, std::vector<Index>(L, 0));
  for (std::size_t i = 0; i < L; ++i) {
    Matrix<S> p = Matrix<S>::Identity(m.dims[i], m.dims[i]);
    r[i][i] = m.dims[i];
    for (std::size_t j = i + 1; j < L; ++j) {
      p = (m.maps[j - 1] * p).eval();
      r[i][j] = linalg::rank<S>(p);
      if (r[i][j] == 0) break;  // ranks only decrease along j
    }
  }
  return r;
}

/// Interval decomposition by inclusion-exclusion on the rank invariant:
/// mult[i, j) = r(i, j-1) - r(i, j) - r(i-1, j-1) + r(i-1, j),
/// with r(-1, .) = 0 and r(., L) = 0.
template <class S>
Barcode decompose(const ChainModule<S>& m) {
  const auto r = rank_table(m);
  const Index L = m.length();
  const auto rank = [&](Index i, Index j) -> Index {
    if (i < 0 || j >= L) return 0;
    return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  std::vector<Bar> bars;
  for (Index i = 0; i < L; ++i) {
    for (Index j = i + 1; j <= L; ++j) {
      const Index mult = rank(i, j - 1) - rank(i, j) - rank(i - 1, j - 1) + rank(i - 1, j);
      if (mult < 0) throw std::logic_error("negative bar multiplicity: rank invariant is inconsistent");
      if (mult > 0) bars.push_back({i, j, mult});
    }
  }
  return Barcode(std::move(bars));
}

/// Block-diagonal module with one copy of k per bar and identity maps along each bar.
template <class S>
ChainModule<S> realize(const Barcode& b, Index length) {
  if (length <= 0) throw DomainError("bar_out_of_range", "realize needs length >= 1");
  std::vector<Index> order;  // bar index per summand, in canonical order
  for (std::size_t k = 0; k < b.bars().size(); ++k) {
    const Bar& bar = b.bars()[k];
    if (bar.start < 0 || bar.end <= bar.start || bar.end > length) {
      throw DomainError("bar_out_of_range", "bar [" + std::to_string(bar.start) + "," + std::to_string(bar.end) +
                                                ") does not fit a chain of length " + std::to_string(length));
    }
    for (Index c = 0; c < bar.multiplicity; ++c) order.push_back(static_cast<Index>(k));
  }
  const auto alive = [&](Index t) {
    std::vector<std::size_t> ids;
    for (std::size_t s = 0; s < order.size(); ++s) {
      const Bar& bar = b.bars()[static_cast<std::size_t>(order[s])];
      if (bar.start <= t && t < bar.end) ids.push_back(s);
    }
    return ids;
  };
  ChainModule<S> m;
  std::vector<std::vector<std::size_t>> live;
  for (Index t = 0; t < length; ++t) {
    live.push_back(alive(t));
    m.dims.push_back(static_cast<Index>(live.back().size()));
  }
  for (Index t = 0; t + 1 < length; ++t) {
    const auto& from = live[static_cast<std::size_t>(t)];
    const auto& to = live[static_cast<std::size_t>(t + 1)];
    Matrix<S> map = Matrix<S>::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
    for (std::size_t c = 0; c < from.size(); ++c) {
      const auto it = std::find(to.begin(), to.end(), from[c]);
      if (it != to.end()) map(static_cast<Index>(it - to.begin()), static_cast<Index>(c)) = S(1);
    }
    m.maps.push_back(std::move(map));
  }
  return m;
}

/// Explicit interval decomposition: a basis of every vertex made of the
/// transported generators of single bars.
template <class S>
struct IntervalBasis {
  std::vector<Bar> bars;                       // multiplicity 1 each, in birth order
  std::vector<Vector<S>> generators;           // generator of bars[k] at vertex bars[k].start
  std::vector<Matrix<S>> basis;                // basis[t] columns: elements of the bars alive at t
  std::vector<std::vector<std::size_t>> alive; // alive[t][c]: bar carried by column c of basis[t]
};

/// Left-to-right construction. At vertex t the transported basis of the image of
/// the previous vertex is extended, kernel stage by kernel stage, with vectors
/// from ker m(t <= u); the basis stays adapted to the kernel filtration, so
/// transported generators remain independent until their bars end.
template <class S>
IntervalBasis<S> interval_basis(const ChainModule<S>& m) {
  m.validate();
  const Index L = m.length();
  IntervalBasis<S> out;
  Matrix<S> prev_basis(0, 0);
  std::vector<std::size_t> prev_alive;
  for (Index t = 0; t < L; ++t) {
    const Index dim = m.dims[static_cast<std::size_t>(t)];
    std::vector<Vector<S>> cols;
    std::vector<std::size_t> ids;
    if (t > 0) {
      const Matrix<S> moved = m.maps[static_cast<std::size_t>(t - 1)] * prev_basis;
      for (Index c = 0; c < moved.cols(); ++c) {
        const std::size_t id = prev_alive[static_cast<std::size_t>(c)];
        const bool dies = out.bars[id].end == t;
        const bool vanished = linalg::is_zero_matrix<S>(Matrix<S>(moved.col(c)));
        if (dies != vanished) throw std::logic_error("interval_basis: transported generator died off schedule");
        if (dies) continue;
        cols.push_back(moved.col(c));
        ids.push_back(id);
      }
    }
    const auto current = [&]() {
      Matrix<S> b(dim, static_cast<Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) b.col(static_cast<Index>(c)) = cols[c];
      return b;
    };
    Matrix<S> composite = Matrix<S>::Identity(dim, dim);
    for (Index u = t + 1; u <= L && static_cast<Index>(cols.size()) < dim; ++u) {
      Matrix<S> kernel;
      if (u < L) {
        composite = (m.maps[static_cast<std::size_t>(u - 1)] * composite).eval();
        kernel = linalg::nullspace<S>(composite);
      } else {
        kernel = Matrix<S>::Identity(dim, dim);
      }
      for (Index k = 0; k < kernel.cols(); ++k) {
        const Vector<S> v = kernel.col(k);
        if (!cols.empty() && linalg::in_column_span<S>(current(), v)) continue;
        out.bars.push_back({t, u, 1});
        out.generators.push_back(v);
        cols.push_back(v);
        ids.push_back(out.bars.size() - 1);
      }
    }
    prev_basis = current();
    prev_alive = ids;
    out.basis.push_back(prev_basis);
    out.alive.push_back(ids);
  }
  return out;
}

/// Collapses an explicit decomposition to its barcode.
template <class S>
Barcode barcode_of(const IntervalBasis<S>& ib) {
  return Barcode(ib.bars);
}

}  // namespace spectral
