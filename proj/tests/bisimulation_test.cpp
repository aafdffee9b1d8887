#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paratop/bisimulation.hpp"
#include "paratop/generate.hpp"

using namespace paratop;

namespace {

FiniteTopology c3() {
  return FiniteTopology::from_opens(
      3, {PointSet{}, PointSet{0}, PointSet{0, 1}, PointSet{0, 1, 2}});
}

}  // namespace

TEST_CASE("identity is a topo-bisimulation between a model and itself") {
  TopoModel m(c3(), Mode::Classical, {{"p", PointSet{1, 2}}});
  PointRelation id(3, 3);
  for (int w = 0; w < 3; ++w) id.add(w, w);
  CHECK(is_topo_bisimulation(m, m, id));
}

TEST_CASE("atom-disagreeing pairs never pass the bisimulation clauses") {
  TopoModel m(c3(), Mode::Classical, {{"p", PointSet{1, 2}}});
  PointRelation bad(3, 3);
  bad.add(0, 1);  // p differs between 0 and 1
  CHECK_FALSE(is_topo_bisimulation(m, m, bad));
}

TEST_CASE("greatest topo-bisimulation contains the diagonal and is maximal") {
  Rng rng(31);
  GenConfig cfg;
  cfg.max_points = 4;
  for (int trial = 0; trial < 60; ++trial) {
    TopoModel m = random_model(cfg, rng, Mode::Classical);
    PointRelation z = greatest_topo_bisimulation(m, m);
    CHECK(z.contains_diagonal());
    CHECK(is_topo_bisimulation(m, m, z));
    // Maximality: adding any absent pair breaks the relation or the atoms.
    for (int w = 0; w < m.point_count(); ++w)
      for (int w2 = 0; w2 < m.point_count(); ++w2) {
        if (z.related(w, w2)) continue;
        PointRelation extended = z;
        extended.add(w, w2);
        CHECK_FALSE(is_topo_bisimulation(m, m, extended));
      }
  }
}

TEST_CASE("mode mismatch between the two models is rejected") {
  TopoModel a(c3(), Mode::Classical, {{"p", PointSet{1, 2}}});
  TopoModel b(c3(), Mode::Paraconsistent, {{"p", PointSet{1, 2}}});
  CHECK_THROWS_AS(greatest_topo_bisimulation(a, b), ModeMismatch);
}

TEST_CASE("bisimilar pairs satisfy the same enumerated formulas") {
  Rng rng(32);
  GenConfig cfg;
  cfg.max_points = 4;
  auto formulas = enumerate_formulas({"p", "q"}, 3, 200, Mode::Classical);
  for (int trial = 0; trial < 40; ++trial) {
    TopoModel m = random_model(cfg, rng, Mode::Classical);
    TopoModel m2 = random_model(cfg, rng, Mode::Classical);
    PointRelation z = greatest_topo_bisimulation(m, m2);
    for (auto [w, w2] : z.pairs())
      for (const Formula& phi : formulas)
        CHECK(m.satisfies(w, phi) == m2.satisfies(w2, phi));
  }
}

TEST_CASE("extension-pair family mirrors one-formula definability in both models") {
  Rng rng(33);
  GenConfig cfg;
  cfg.max_points = 3;
  for (int trial = 0; trial < 20; ++trial) {
    TopoModel m = random_model(cfg, rng, Mode::Classical);
    TopoModel m2 = random_model(cfg, rng, Mode::Classical);
    ExtensionPairFamily fam = extension_pair_family(m, m2, 16, 1 << 16);
    REQUIRE(fam.pairs.size() == fam.witnesses.size());
    for (std::size_t i = 0; i < fam.pairs.size(); ++i) {
      CHECK(m.extension(fam.witnesses[i]) == fam.pairs[i].first);
      CHECK(m2.extension(fam.witnesses[i]) == fam.pairs[i].second);
    }
  }
}

TEST_CASE("logical equivalence coincides with the greatest bisimulation") {
  Rng rng(34);
  GenConfig cfg;
  cfg.max_points = 4;
  for (int trial = 0; trial < 60; ++trial) {
    TopoModel m = random_model(cfg, rng, Mode::Classical);
    TopoModel m2 = random_model(cfg, rng, Mode::Classical);
    HennessyMilnerReport r = hennessy_milner_check(m, m2);
    CHECK(r.coincide);
    CHECK(r.bisimulation == r.equivalence);
  }
}

TEST_CASE("a distinguishing formula is produced for separated pairs") {
  // Two singleton models disagreeing on p: the only cross pair separates.
  FiniteTopology pt = FiniteTopology::discrete(1);
  TopoModel yes(pt, Mode::Classical, {{"p", PointSet{0}}});
  TopoModel no(pt, Mode::Classical, {{"p", PointSet{}}});
  PointRelation z = greatest_topo_bisimulation(yes, no);
  CHECK(z.pairs().empty());
  ExtensionPairFamily fam = extension_pair_family(yes, no, 8, 1 << 12);
  bool found = false;
  for (std::size_t i = 0; i < fam.pairs.size(); ++i)
    if (fam.pairs[i].first.contains(0) != fam.pairs[i].second.contains(0)) {
      found = true;
      CHECK(yes.satisfies(0, fam.witnesses[i]) != no.satisfies(0, fam.witnesses[i]));
    }
  CHECK(found);
}

TEST_CASE("continuous topo-bisimulation along an identity pushforward") {
  TopoModel m(c3(), Mode::Classical, {{"p", PointSet{1, 2}}});
  PointRelation graph(3, 3);
  for (int w = 0; w < 3; ++w) graph.add(w, w);
  CHECK(is_continuous_topo_bisimulation(m, m, graph, PointMap::identity(3)));
  // A non-homeomorphic map fails the continuity side.
  PointMap fold(3, 3, {0, 0, 2});
  PointRelation fold_graph(3, 3);
  for (int w = 0; w < 3; ++w) fold_graph.add(w, fold(w));
  CHECK_FALSE(is_continuous_topo_bisimulation(m, m, fold_graph, fold));
}

TEST_CASE("closed-set variant of the bisimulation clauses") {
  TopoModel m(c3(), Mode::Paraconsistent, {{"p", PointSet{1, 2}}});
  PointRelation id(3, 3);
  for (int w = 0; w < 3; ++w) id.add(w, w);
  CHECK(is_topo_bisimulation(m, m, id, /*use_closed_sets=*/true));
}
