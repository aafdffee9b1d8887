#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paratop/maps.hpp"
#include "paratop/model.hpp"

namespace paratop {

/// Deterministic splitmix64 stream; self-contained so that reports are
/// byte-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  int below(int bound) { return int(next() % std::uint64_t(bound)); }

  bool coin() { return next() & 1u; }

private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 7;
  int min_points = 1;
  int max_points = 4;
  int proposition_count = 2;
  int depth_cap = 3;
  std::size_t formula_cap = 300;
  int run_count = 100;

  void validate() const {
    if (min_points < 1 || max_points < min_points || max_points > kMaxPoints)
      throw Error("point count range invalid");
    if (proposition_count < 0) throw Error("proposition count invalid");
    if (depth_cap < 1 || formula_cap < 1 || run_count < 1)
      throw Error("all caps must be >= 1");
  }

  std::vector<std::string> proposition_names() const {
    std::vector<std::string> names;
    for (int i = 0; i < proposition_count; ++i)
      names.push_back(i == 0 ? "p" : i == 1 ? "q" : "r" + std::to_string(i));
    return names;
  }
};

inline PointSet random_subset(Rng& rng, int n) {
  return PointSet(std::uint32_t(rng.next()) & PointSet::full_set(n).bits());
}

/// Sample a relation, take its reflexive-transitive closure, and emit the
/// Alexandrov topology of up-sets.  An empty sample yields the discrete
/// space; a dense one collapses towards the indiscrete space.
inline FiniteTopology random_topology(Rng& rng, int n) {
  std::vector<std::pair<int, int>> pairs;
  int edge_budget = rng.below(n * n + 1);
  for (int i = 0; i < edge_budget; ++i)
    pairs.emplace_back(rng.below(n), rng.below(n));
  return FiniteTopology::from_preorder(Preorder::closure_of(n, pairs));
}

inline FiniteTopology random_topology(const GenConfig& cfg, Rng& rng) {
  int n = cfg.min_points + rng.below(cfg.max_points - cfg.min_points + 1);
  return random_topology(rng, n);
}

/// Valuations are sampled freely then coerced onto the mode invariant:
/// closures in paraconsistent mode, interiors in paracomplete mode.
inline TopoModel random_model(const GenConfig& cfg, Rng& rng, Mode mode) {
  FiniteTopology space = random_topology(cfg, rng);
  const int n = space.point_count();
  std::map<std::string, PointSet> valuation;
  for (const std::string& name : cfg.proposition_names()) {
    PointSet sample = random_subset(rng, n);
    if (mode == Mode::Paraconsistent) sample = space.closure(sample);
    if (mode == Mode::Paracomplete) sample = space.interior(sample);
    valuation[name] = sample;
  }
  return TopoModel(std::move(space), mode, std::move(valuation));
}

inline TopoModel random_model_on(const FiniteTopology& space, Rng& rng, Mode mode,
                                 const std::vector<std::string>& props) {
  std::map<std::string, PointSet> valuation;
  for (const std::string& name : props) {
    PointSet sample = random_subset(rng, space.point_count());
    if (mode == Mode::Paraconsistent) sample = space.closure(sample);
    if (mode == Mode::Paracomplete) sample = space.interior(sample);
    valuation[name] = sample;
  }
  return TopoModel(space, mode, std::move(valuation));
}

/// Rejection-sampled continuous map; falls back to a constant map (always
/// continuous) when sampling keeps missing.
inline PointMap random_continuous_map(Rng& rng, const FiniteTopology& t,
                                      const FiniteTopology& t2, int tries = 64) {
  const int n = t.point_count(), n2 = t2.point_count();
  for (int attempt = 0; attempt < tries; ++attempt) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = rng.below(n2);
    PointMap f(n, n2, std::move(image));
    if (is_continuous(f, t, t2)) return f;
  }
  return PointMap::constant(n, n2, rng.below(n2));
}

/// Rejection-sampled open map, with the same constant-map fallback (a
/// constant map to a point whose singleton is open when one exists).
inline PointMap random_open_map(Rng& rng, const FiniteTopology& t,
                                const FiniteTopology& t2, int tries = 64) {
  const int n = t.point_count(), n2 = t2.point_count();
  for (int attempt = 0; attempt < tries; ++attempt) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = rng.below(n2);
    PointMap f(n, n2, std::move(image));
    if (is_open_map(f, t, t2)) return f;
  }
  for (int v = 0; v < n2; ++v)
    if (t2.is_open(PointSet::singleton(v))) return PointMap::constant(n, n2, v);
  // Identity is open when the spaces coincide; otherwise give up on
  // openness and return something well-typed for the caller to filter.
  if (n == n2 && t.opens() == t2.opens()) return PointMap::identity(n);
  return PointMap::constant(n, n2, 0);
}

inline PointMap random_permutation(Rng& rng, int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(image[i], image[rng.below(i + 1)]);
  return PointMap(n, n, std::move(image));
}

}  // namespace paratop
