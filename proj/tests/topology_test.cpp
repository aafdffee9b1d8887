#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paratop/generate.hpp"
#include "paratop/topology.hpp"

using namespace paratop;

namespace {

FiniteTopology c3() {
  return FiniteTopology::from_opens(
      3, {PointSet{}, PointSet{0}, PointSet{0, 1}, PointSet{0, 1, 2}});
}

// Independent oracles: interior as the union of contained opens, closure as
// the intersection of containing closed sets.
PointSet interior_oracle(const FiniteTopology& t, PointSet x) {
  PointSet out;
  for (PointSet o : t.opens())
    if (o.subset_of(x)) out = out | o;
  return out;
}

PointSet closure_oracle(const FiniteTopology& t, PointSet x) {
  PointSet out = PointSet::full_set(t.point_count());
  for (PointSet c : t.closeds())
    if (x.subset_of(c)) out = out & c;
  return out;
}

}  // namespace

TEST_CASE("point sets: algebra and canonical order") {
  PointSet a{0, 2};
  PointSet b{1, 2};
  CHECK((a | b) == PointSet{0, 1, 2});
  CHECK((a & b) == PointSet{2});
  CHECK((a - b) == PointSet{0});
  CHECK(a.complement(3) == PointSet{1});
  CHECK(a.to_string() == "{0,2}");
  CHECK(PointSet{2}.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  // Cardinality first, then lexicographic on ascending members.
  CHECK(PointSet::canonical_less(PointSet{2}, PointSet{0, 1}));
  CHECK(PointSet::canonical_less(PointSet{0, 2}, PointSet{1, 2}));
  CHECK_FALSE(PointSet::canonical_less(PointSet{1}, PointSet{1}));
}

TEST_CASE("from_opens validates the topology axioms") {
  CHECK_NOTHROW(c3());
  // Missing whole space.
  CHECK_THROWS_AS(FiniteTopology::from_opens(2, {PointSet{}, PointSet{0}}),
                  MissingExtremes);
  // Missing empty set.
  CHECK_THROWS_AS(FiniteTopology::from_opens(2, {PointSet{0}, PointSet{0, 1}}),
                  MissingExtremes);
  // {0} and {1} present but their union {0,1} missing on 3 points.
  CHECK_THROWS_AS(
      FiniteTopology::from_opens(
          3, {PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1, 2}}),
      NotClosedUnderOps);
  // Intersection violation: {0,1} and {1,2} without {1}.
  CHECK_THROWS_AS(
      FiniteTopology::from_opens(
          3, {PointSet{}, PointSet{0, 1}, PointSet{1, 2}, PointSet{0, 1, 2}}),
      NotClosedUnderOps);
  // Duplicates are tolerated, out-of-range points are not.
  CHECK_NOTHROW(FiniteTopology::from_opens(
      1, {PointSet{}, PointSet{}, PointSet{0}}));
  CHECK_THROWS(FiniteTopology::from_opens(2, {PointSet{}, PointSet{2},
                                              PointSet{0, 1}}));
}

TEST_CASE("interior, closure, boundary on the chain") {
  FiniteTopology t = c3();
  CHECK(t.interior(PointSet{1, 2}) == PointSet{});
  CHECK(t.closure(PointSet{1}) == PointSet{1, 2});
  CHECK(t.closure(PointSet{0}) == PointSet{0, 1, 2});
  CHECK(t.boundary(PointSet{0}) == PointSet{1, 2});
  CHECK(t.boundary(PointSet{1, 2}) == PointSet{1, 2});
  CHECK(t.is_open(PointSet{0, 1}));
  CHECK_FALSE(t.is_closed(PointSet{0, 1}));
  CHECK(t.is_closed(PointSet{2}));
}

TEST_CASE("operators agree with brute-force oracles on random topologies") {
  Rng rng(20260826);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rng.below(5);
    FiniteTopology t = random_topology(rng, n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      PointSet x(bits);
      CHECK(t.interior(x) == interior_oracle(t, x));
      CHECK(t.closure(x) == closure_oracle(t, x));
      CHECK(t.boundary(x) == (closure_oracle(t, x) - interior_oracle(t, x)));
      // Duality of the operators.
      CHECK(t.closure(x) == t.interior(x.complement(n)).complement(n));
      // Idempotence and monotonicity at the fixed points.
      CHECK(t.interior(t.interior(x)) == t.interior(x));
      CHECK(t.closure(t.closure(x)) == t.closure(x));
      CHECK(t.boundary(x) == t.boundary(x.complement(n)));
    }
  }
}

TEST_CASE("finite spaces and preorders are two views of one structure") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + rng.below(4);
    FiniteTopology t = random_topology(rng, n);
    Preorder p = t.specialization_preorder();
    // x below y iff x lies in the closure of {y}.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        CHECK(p.leq(x, y) == t.closure(PointSet::singleton(y)).contains(x));
    // Opens are exactly the up-sets: the round trip is the identity.
    CHECK(FiniteTopology::from_preorder(p) == t);
  }
}

TEST_CASE("generate_from_subbase closes under unions and intersections") {
  FiniteTopology t = FiniteTopology::generate_from_subbase(
      3, {PointSet{0, 1}, PointSet{1, 2}});
  CHECK(t.is_open(PointSet{1}));
  CHECK(t.is_open(PointSet{0, 1, 2}));
  CHECK(t.is_open(PointSet{}));
  // {}, {1}, {0,1}, {1,2}, {0,1,2}
  CHECK(t.opens().size() == 5);
}

TEST_CASE("components partition the space; connectedness") {
  FiniteTopology t = c3();
  CHECK(t.is_connected());
  CHECK(t.connected_components().size() == 1);

  FiniteTopology disc = FiniteTopology::discrete(3);
  auto comps = disc.connected_components();
  CHECK(comps.size() == 3);
  PointSet covered;
  for (PointSet c : comps) {
    CHECK((covered & c).empty());
    covered = covered | c;
  }
  CHECK(covered == PointSet::full_set(3));

  CHECK(FiniteTopology::indiscrete(4).is_connected());
}

TEST_CASE("in connected spaces only the trivial subsets have empty boundary") {
  Rng rng(7);
  int connected_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng.below(5);
    FiniteTopology t = random_topology(rng, n);
    if (!t.is_connected()) continue;
    ++connected_seen;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      PointSet x(bits);
      bool trivial = x.empty() || x == PointSet::full_set(n);
      CHECK(t.boundary(x).empty() == trivial);
    }
  }
  CHECK(connected_seen > 20);
}

TEST_CASE("subspace restricts opens and relabels points") {
  FiniteTopology t = c3();
  auto sub = t.subspace(PointSet{1, 2});
  CHECK(sub.original_ids == std::vector<int>{1, 2});
  // Restricted opens: {} (from {} and {0}), {0} (from {0,1}), {0,1}.
  CHECK(sub.topology.opens().size() == 3);
  CHECK(sub.topology.is_open(PointSet{0}));
  CHECK(sub.topology.is_connected());
  CHECK_THROWS_AS(t.subspace(PointSet{}), EmptyCarrier);
}

TEST_CASE("dual space swaps opens and closeds and is involutive") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    FiniteTopology t = random_topology(rng, 1 + rng.below(5));
    FiniteTopology d = t.dual();
    CHECK(d.opens() == t.closeds());
    CHECK(d.dual() == t);
  }
}

TEST_CASE("boundary family of opens equals boundary family of closeds") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteTopology t = random_topology(rng, 1 + rng.below(5));
    std::set<std::uint32_t> from_opens, from_closeds;
    for (PointSet o : t.opens()) from_opens.insert(t.boundary(o).bits());
    for (PointSet c : t.closeds()) from_closeds.insert(t.boundary(c).bits());
    CHECK(from_opens == from_closeds);
  }
}

TEST_CASE("preorder closure helper and validation") {
  Preorder p = Preorder::closure_of(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(0, 0));
  CHECK_FALSE(p.leq(2, 0));
  FiniteTopology t = FiniteTopology::from_preorder(p);
  CHECK(t.opens().size() == 4);  // a 3-chain: {}, {2}, {1,2}, {0,1,2}
  CHECK(t.is_open(PointSet{2}));
}
