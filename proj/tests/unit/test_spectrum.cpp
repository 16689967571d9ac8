#include <doctest.h>

#include "spectral/fp_category.hpp"
#include "spectral/spectrum.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/sets.hpp"

using namespace spectral;
using namespace sets;

namespace {

const IndexModel line = IndexModel::real_line();
const IndexModel cuts = IndexModel::rationals_with_cuts();
const Coord sqrt2 = Coord::surd(Rational(0), Rational(1), 2);

constexpr ClosureStrategy strategies[] = {ClosureStrategy::DoubleOrthogonal, ClosureStrategy::SupInfSaturation,
                                          ClosureStrategy::OrderTopology};

SymbolicSet pt(const IndexModel& m, const DPoint& p) { return SymbolicSet::point(m, p); }

void check_against_oracle(const SymbolicSet& u, const SymbolicSet& cl, const std::vector<DPoint>& ps) {
  for (const auto& p : ps) {
    INFO("set " << u.str() << ", point " << p.str());
    CHECK(cl.contains(p) == oracle::in_closure(u, p, Rational(1, 100000), Rational(11)));
  }
}

}  // namespace

TEST_CASE("windows are exactly the supports of Hom from intervals") {
  std::vector<DPoint> ps{top()};
  for (long x = -3; x <= 3; ++x) {
    ps.push_back(S(Coord(x)));
    ps.push_back(P(Coord(x)));
  }
  for (long a = -3; a <= 3; ++a) {
    for (long b = a + 1; b <= 4; ++b) {
      const bool infinite = b == 4;
      const ExtCoord end = infinite ? ExtCoord::infinity() : ExtCoord(Coord(b));
      const SymbolicSet w = window(line, Coord(a), end);
      for (const auto& p : ps) CHECK(w.contains(p) == (hom_to_injective({Coord(a), end}, p) == 1));
    }
  }
}

TEST_CASE("set algebra examples") {
  const auto w = interval(line, incl(P(Coord(0))), incl(S(Coord(1))));
  CHECK(w.contains(S(Coord(1))));
  CHECK_FALSE(w.contains(P(Coord(1))));
  CHECK(set_complement(SymbolicSet::full(line)).is_empty());
  CHECK(set_complement(SymbolicSet::empty(line)).is_full());
  // Adjacent pieces merge: [(0,P),(1,S)] u [(1,P),(2,S)] is one component.
  const auto v = interval(line, incl(P(Coord(1))), incl(S(Coord(2))));
  CHECK(set_union(w, v).components().size() == 1);
  CHECK(set_union(w, v) == interval(line, incl(P(Coord(0))), excl(P(Coord(2)))));
  // (x,S) excluded as an upper end equals the open end below (x,P)'s predecessor.
  CHECK(interval(line, incl(P(Coord(0))), excl(P(Coord(1)))) == w);
  CHECK(interval(line, incl(P(Coord(1))), incl(S(Coord(1)))).is_empty());
}

TEST_CASE("set algebra agrees with pointwise membership") {
  fixtures::Rng rng(61);
  for (int n = 0; n < 300; ++n) {
    const auto a = fixtures::random_set(rng, line), b = fixtures::random_set(rng, line);
    auto coords = endpoint_coords(a);
    const auto more = endpoint_coords(b);
    coords.insert(coords.end(), more.begin(), more.end());
    coords.push_back(Coord(-20));
    const auto u = set_union(a, b), i = set_intersection(a, b), c = set_complement(a);
    for (const auto& p : probes(line, coords, Rational(1, 48))) {
      CHECK(u.contains(p) == (a.contains(p) || b.contains(p)));
      CHECK(i.contains(p) == (a.contains(p) && b.contains(p)));
      CHECK(c.contains(p) == !a.contains(p));
    }
    CHECK(SymbolicSet::from_intervals(line, a.intervals()) == a);
    CHECK(set_complement(c) == a);
  }
}

TEST_CASE("left orthogonal examples") {
  const Coord x(Rational(3, 2));
  const auto up = left_orthogonal(interval(line, incl(P(x)), incl(top())));
  const auto down = left_orthogonal(interval(line, below_all(), incl(S(x))));
  for (long a2 = -6; a2 <= 6; ++a2) {
    for (long b2 = a2 + 1; b2 <= 7; ++b2) {
      const Coord a(Rational(a2, 2));
      const ExtCoord b = b2 == 7 ? ExtCoord::infinity() : ExtCoord(Coord(Rational(b2, 2)));
      CHECK(up.contains(a, b) == (b <= ExtCoord(x)));
      CHECK(down.contains(a, b) == (x <= a));
    }
  }
  const auto none = left_orthogonal(SymbolicSet::full(line));
  CHECK(none.covered_union().is_empty());
  CHECK_FALSE(none.contains(Coord(0), ExtCoord::infinity()));
}

TEST_CASE("right orthogonal examples") {
  const Coord x(2);
  const auto up = interval(line, incl(P(x)), incl(top()));
  const auto down = interval(line, below_all(), incl(S(x)));
  CHECK(right_orthogonal(left_orthogonal(up)) == up);
  CHECK(right_orthogonal(left_orthogonal(down)) == down);
  CHECK(right_orthogonal(left_orthogonal(SymbolicSet::empty(line))).is_empty());
  CHECK(right_orthogonal(SerreRegion{line, {}}).is_full());
}

TEST_CASE("closure examples") {
  const Coord q(Rational(5, 7));
  for (const auto s : strategies) {
    CHECK(closure(pt(line, P(q)), s) == pt(line, P(q)));
    CHECK(closure(interval(line, excl(P(Coord(0))), excl(P(Coord(1)))), s) ==
          interval(line, incl(P(Coord(0))), incl(S(Coord(1)))));
    const auto ray = interval(line, incl(P(q)), incl(top()));
    CHECK(closure(ray, s) == ray);
  }
  CHECK(is_closed(interval(line, below_all(), incl(S(q)))));
  CHECK_FALSE(is_closed(interval(line, excl(P(Coord(0))), excl(P(Coord(1))))));
  CHECK(is_closed(SymbolicSet::empty(line)));
  CHECK(is_closed(SymbolicSet::full(line)));
}

TEST_CASE("closure strategies agree with each other and with the neighbourhood oracle") {
  fixtures::Rng rng(62);
  for (int n = 0; n < 300; ++n) {
    const auto u = fixtures::random_set(rng, line);
    const auto cl = closure(u, ClosureStrategy::DoubleOrthogonal);
    CHECK(closure(u, ClosureStrategy::SupInfSaturation) == cl);
    CHECK(closure(u, ClosureStrategy::OrderTopology) == cl);
    check_against_oracle(u, cl, probes(line, endpoint_coords(u), Rational(1, 48)));
  }
}

TEST_CASE("Kuratowski axioms for each strategy") {
  fixtures::Rng rng(63);
  for (const auto s : strategies) CHECK(closure(SymbolicSet::empty(line), s).is_empty());
  for (int n = 0; n < 200; ++n) {
    const auto a = fixtures::random_set(rng, line), b = fixtures::random_set(rng, line);
    for (const auto s : strategies) {
      const auto ca = closure(a, s);
      CHECK(a.subset_of(ca));
      CHECK(closure(ca, s) == ca);
      CHECK(closure(set_union(a, b), s) == set_union(ca, closure(b, s)));
    }
  }
}

TEST_CASE("orthogonals form a Galois connection") {
  fixtures::Rng rng(64);
  for (int n = 0; n < 200; ++n) {
    const auto a = fixtures::random_set(rng, line), b = fixtures::random_set(rng, line);
    const auto ab = set_union(a, b);
    // Antitone in both directions.
    CHECK(left_orthogonal(ab).subset_of(left_orthogonal(a)));
    const auto ra = left_orthogonal(a), rab = left_orthogonal(ab);
    CHECK(right_orthogonal(ra).subset_of(right_orthogonal(rab)));
    // u is contained in right(left(u)); left(right(left)) = left.
    CHECK(a.subset_of(right_orthogonal(ra)));
    CHECK(left_orthogonal(right_orthogonal(ra)).covered_union() == ra.covered_union());
    const auto r = right_orthogonal(ra);
    CHECK(right_orthogonal(left_orthogonal(r)) == r);
  }
}

TEST_CASE("closed sets and open complements of the standard table") {
  fixtures::Rng rng(65);
  for (int n = 0; n < 20; ++n) {
    const Coord x(rng.rational(-10, 10));
    const DPoint j = fixtures::random_point(rng, 10, 0.1);
    const std::vector<std::pair<SymbolicSet, SymbolicSet>> rows{
        {interval(line, below_all(), incl(S(x))), interval(line, incl(P(x)), incl(top()))},
        {interval(line, incl(P(x)), incl(top())), interval(line, below_all(), incl(S(x)))},
        {pt(line, j), set_complement(pt(line, j))},
        {interval(line, below_all(), incl(P(x))), interval(line, excl(P(x)), incl(top()))},
        {interval(line, incl(S(x)), incl(top())), interval(line, below_all(), excl(S(x)))},
        {interval(line, below_all(), incl(top())), SymbolicSet::empty(line)},
        {pt(line, top()), interval(line, below_all(), excl(top()))},
    };
    for (const auto& [closed_set, open_set] : rows) {
      for (const auto s : strategies) CHECK(closure(closed_set, s) == closed_set);
      CHECK(set_complement(closed_set) == open_set);
    }
    // Type 3 cuts inside the rationals.
    const Coord c = x + Coord::surd(Rational(0), Rational(1), 2);
    const DPoint i = S(c);
    const auto row6 = interval(cuts, below_all(), incl(i)), row7 = interval(cuts, incl(i), incl(top()));
    for (const auto s : strategies) {
      CHECK(closure(row6, s) == row6);
      CHECK(closure(row7, s) == row7);
    }
    CHECK(set_complement(row6) == interval(cuts, excl(i), incl(top())));
    CHECK(set_complement(row7) == interval(cuts, below_all(), excl(i)));
  }
}

TEST_CASE("closed sets contain suprema and infima of their subfamilies") {
  fixtures::Rng rng(66);
  for (int n = 0; n < 200; ++n) {
    const auto u = closure(fixtures::random_set(rng, line), ClosureStrategy::DoubleOrthogonal);
    if (u.is_empty()) continue;
    std::vector<DPoint> members;
    for (const auto& p : probes(line, endpoint_coords(u), Rational(1, 48)))
      if (u.contains(p)) members.push_back(p);
    if (members.empty()) continue;
    for (int k = 0; k < 50; ++k) {
      std::vector<DPoint> v;
      const long size = rng.integer(1, 4);
      for (long m = 0; m < size; ++m) v.push_back(members[rng.index(members.size())]);
      const auto [lo, hi] = std::minmax_element(v.begin(), v.end(), d_less);
      CHECK(u.contains(*hi));
      CHECK(u.contains(*lo));
    }
  }
}

TEST_CASE("closure in the rationals with irrational cuts") {
  fixtures::Rng rng(67);
  const Coord r3 = Coord::surd(Rational(0), Rational(1), 3);
  // An open run ending at a type 3 cut gains the cut, which is the supremum.
  const auto open_run = interval(cuts, excl(P(Coord(0))), excl(S(sqrt2)));
  const auto expected = interval(cuts, incl(P(Coord(0))), incl(S(sqrt2)));
  for (const auto s : strategies) CHECK(closure(open_run, s) == expected);
  const auto above = interval(cuts, excl(S(sqrt2)), excl(P(Coord(2))));
  for (const auto s : strategies) CHECK(closure(above, s) == interval(cuts, incl(S(sqrt2)), incl(S(Coord(2)))));
  for (int n = 0; n < 200; ++n) {
    std::vector<DInterval> xs;
    std::vector<DPoint> ends;
    for (int k = 0; k < 4; ++k) {
      const Coord base(rng.rational(-5, 5));
      const Coord c = rng.chance(0.5) ? base : base + (rng.chance(0.5) ? sqrt2 : sqrt2 + sqrt2);
      ends.push_back(c.is_rational() ? DPoint{ExtCoord(c), rng.flavor()} : S(c));
    }
    std::sort(ends.begin(), ends.end(), d_less);
    xs.push_back({{ends[0], rng.chance(0.5)}, {ends[1], rng.chance(0.5)}});
    xs.push_back({{ends[2], rng.chance(0.5)}, {ends[3], rng.chance(0.5)}});
    const auto u = SymbolicSet::from_intervals(cuts, xs);
    const auto cl = closure(u, ClosureStrategy::DoubleOrthogonal);
    CHECK(closure(u, ClosureStrategy::SupInfSaturation) == cl);
    CHECK(closure(u, ClosureStrategy::OrderTopology) == cl);
    check_against_oracle(u, cl, probes(cuts, endpoint_coords(u), Rational(1, 1000)));
  }
  (void)r3;
}

TEST_CASE("separation of distinct points") {
  const auto [u1, v1] = separate(line, P(Coord(0)), P(Coord(1)));
  CHECK(u1 == window(line, Coord(0), ExtCoord(Coord(1))));
  CHECK(v1 == window(line, Coord(1), ExtCoord::infinity()));
  const Coord x(Rational(3, 4));
  const auto [u2, v2] = separate(line, S(x), P(x));
  CHECK(u2 == window(line, x - Coord(1), ExtCoord(x)));
  CHECK(v2 == window(line, x, ExtCoord::infinity()));
  const auto [u3, v3] = separate(line, P(Coord(0)), top());
  CHECK(u3 == window(line, Coord(0), ExtCoord(Coord(1))));
  CHECK(v3 == window(line, Coord(2), ExtCoord::infinity()));
  CHECK_THROWS_AS(separate(line, P(x), P(x)), DomainError);

  fixtures::Rng rng(68);
  for (int n = 0; n < 200; ++n) {
    DPoint p = fixtures::random_point(rng, 5), q = fixtures::random_point(rng, 5);
    if (n % 3 == 0 && !p.is_top()) q = DPoint{p.coord, p.flavor == Flavor::Strict ? Flavor::Principal : Flavor::Strict};
    if (p == q) continue;
    const auto [u, v] = separate(line, p, q);
    CHECK(u.contains(p));
    CHECK(v.contains(q));
    CHECK(set_intersection(u, v).is_empty());
    CHECK(is_open(u));
    CHECK(is_open(v));
  }
  // Irrational cuts in the rationals.
  const auto [a, b] = separate(cuts, S(sqrt2), P(Coord(2)));
  CHECK(a.contains(S(sqrt2)));
  CHECK(b.contains(P(Coord(2))));
  CHECK(set_intersection(a, b).is_empty());
}

TEST_CASE("the integer cover witnesses non-compactness") {
  const int depth = 12;
  const auto cover = noncompact_cover(line, depth);
  // Everything below the truncation is covered by the remaining members Window(n-1, n), n <= -depth.
  const auto tail = interval(line, below_all(), incl(S(Coord(-depth))));
  SymbolicSet all = tail;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    all = set_union(all, cover[i]);
    CHECK(is_closed(cover[i]));
    CHECK(is_open(cover[i]));
    CHECK(set_intersection(cover[i], tail).is_empty());
    for (std::size_t j = i + 1; j < cover.size(); ++j) CHECK(set_intersection(cover[i], cover[j]).is_empty());
    // No member is removable: the others miss its points.
    SymbolicSet others = tail;
    for (std::size_t j = 0; j < cover.size(); ++j)
      if (j != i) others = set_union(others, cover[j]);
    CHECK_FALSE(cover[i].subset_of(others));
  }
  CHECK(all.is_full());
}

TEST_CASE("the full line is a closed point that is not open") {
  const auto t = pt(line, top());
  CHECK(is_closed(t));
  const auto rest = set_complement(t);
  CHECK(rest == interval(line, below_all(), excl(top())));
  for (const auto s : strategies) CHECK(closure(rest, s).is_full());
  CHECK_FALSE(is_open(t));
}

TEST_CASE("finite chains are rejected by the spectrum engine") {
  CHECK_THROWS_AS(SymbolicSet::full(IndexModel::finite_chain(3)), DomainError);
  CHECK_THROWS_AS(separate(IndexModel::finite_chain(3), P(Coord(0)), P(Coord(1))), DomainError);
}
