#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paratop/model.hpp"
#include "paratop/topology.hpp"

namespace paratop {

inline constexpr std::size_t kDefaultMapSpaceCap = 200000;

/// Total function between the ground sets of two spaces; image[i] = f(i).
class PointMap {
public:
  PointMap(int domain_size, int codomain_size, std::vector<int> image)
      : domain_(domain_size), codomain_(codomain_size), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != domain_)
      throw SizeMismatch("map image length != domain size");
    for (int v : image_)
      if (v < 0 || v >= codomain_) throw SizeMismatch("map image entry out of range");
  }

  static PointMap identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return PointMap(n, n, std::move(img));
  }

  static PointMap constant(int domain_size, int codomain_size, int target) {
    return PointMap(domain_size, codomain_size,
                    std::vector<int>(domain_size, target));
  }

  int domain_size() const { return domain_; }
  int codomain_size() const { return codomain_; }
  int operator()(int p) const { return image_[p]; }
  const std::vector<int>& image_table() const { return image_; }

  PointSet image(PointSet x) const {
    PointSet out;
    for (int p : x.members()) out = out | PointSet::singleton(image_[p]);
    return out;
  }

  PointSet preimage(PointSet y) const {
    PointSet out;
    for (int p = 0; p < domain_; ++p)
      if (y.contains(image_[p])) out = out | PointSet::singleton(p);
    return out;
  }

  bool is_bijective() const {
    if (domain_ != codomain_) return false;
    std::vector<bool> hit(codomain_, false);
    for (int v : image_) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  PointMap inverse() const {
    if (!is_bijective()) throw Error("inverse of a non-bijective map");
    std::vector<int> inv(domain_);
    for (int i = 0; i < domain_; ++i) inv[image_[i]] = i;
    return PointMap(codomain_, domain_, std::move(inv));
  }

  bool operator==(const PointMap&) const = default;

private:
  int domain_, codomain_;
  std::vector<int> image_;
};

inline void check_sizes(const PointMap& f, const FiniteTopology& t,
                        const FiniteTopology& t2) {
  if (f.domain_size() != t.point_count() || f.codomain_size() != t2.point_count())
    throw SizeMismatch("map sizes do not match the spaces");
}

/// Preimage of every open of t2 is open in t.
inline bool is_continuous(const PointMap& f, const FiniteTopology& t,
                          const FiniteTopology& t2) {
  check_sizes(f, t, t2);
  for (PointSet o : t2.opens())
    if (!t.is_open(f.preimage(o))) return false;
  return true;
}

inline bool is_open_map(const PointMap& f, const FiniteTopology& t,
                        const FiniteTopology& t2) {
  check_sizes(f, t, t2);
  for (PointSet o : t.opens())
    if (!t2.is_open(f.image(o))) return false;
  return true;
}

inline bool is_closed_map(const PointMap& f, const FiniteTopology& t,
                          const FiniteTopology& t2) {
  check_sizes(f, t, t2);
  for (PointSet c : t.closeds())
    if (!t2.is_closed(f.image(c))) return false;
  return true;
}

inline bool is_homeomorphism(const PointMap& f, const FiniteTopology& t,
                             const FiniteTopology& t2) {
  if (f.domain_size() != t.point_count() || f.codomain_size() != t2.point_count())
    return false;
  if (!f.is_bijective()) return false;
  return is_continuous(f, t, t2) && is_continuous(f.inverse(), t2, t);
}

/// Homeomorphisms of finite spaces are exactly the isomorphisms of their
/// specialization preorders; enumerated by lexicographic backtracking over
/// the image table, truncated at cap.
inline std::vector<PointMap> enumerate_homeomorphisms(const FiniteTopology& t,
                                                      const FiniteTopology& t2,
                                                      std::size_t cap) {
  std::vector<PointMap> out;
  if (t.point_count() != t2.point_count()) return out;
  if (t.opens().size() != t2.opens().size()) return out;
  const int n = t.point_count();
  Preorder p = t.specialization_preorder();
  Preorder q = t2.specialization_preorder();
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  std::function<void(int)> assign = [&](int i) {
    if (out.size() >= cap) return;
    if (i == n) {
      out.emplace_back(n, n, image);
      return;
    }
    for (int v = 0; v < n && out.size() < cap; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (p.leq(i, j) != q.leq(v, image[j]) || p.leq(j, i) != q.leq(image[j], v)) {
          ok = false;
          break;
        }
      if (p.leq(i, i) != q.leq(v, v)) ok = false;
      if (!ok) continue;
      image[i] = v;
      used[v] = true;
      assign(i + 1);
      used[v] = false;
      image[i] = -1;
    }
  };
  assign(0);
  return out;
}

/// Model on t2 with the same mode and V'(p) = f(V(p)).  Throws when an
/// image set breaks t2's mode invariant.
inline TopoModel pushforward_model(const TopoModel& m, const PointMap& f,
                                   const FiniteTopology& t2) {
  check_sizes(f, m.space(), t2);
  std::map<std::string, PointSet> valuation;
  for (const auto& [name, set] : m.valuation()) valuation[name] = f.image(set);
  return TopoModel(t2, m.mode(), std::move(valuation));
}

/// Fragment constants for the truth-preservation corollaries.
///
/// Forward preservation through a merely continuous map is sound exactly
/// for the operators whose semantics commute forward with images:
/// conjunction, disjunction and Clo.  The closed-complement negation does
/// not commute (complements of images misbehave under non-injective maps),
/// so the ~-inclusive reading is checked in report-only fashion.
inline const std::vector<FormulaKind> kContinuousForwardSound = {
    FormulaKind::And, FormulaKind::Or, FormulaKind::Diamond};
inline const std::vector<FormulaKind> kContinuousForwardStated = {
    FormulaKind::And, FormulaKind::Or, FormulaKind::Diamond, FormulaKind::ParaNeg};
/// Open maps commute forward with Int; the backward reading with the
/// open-complement negation is likewise report-only.
inline const std::vector<FormulaKind> kOpenForwardSound = {
    FormulaKind::And, FormulaKind::Or, FormulaKind::Box};
inline const std::vector<FormulaKind> kOpenBackwardStated = {
    FormulaKind::And, FormulaKind::Or, FormulaKind::Box, FormulaKind::CompNeg};

struct FormulaTransferVerdict {
  Formula formula;
  enum class Status { Holds, Fails, OutOfFragment } status;
  std::string detail;  // counterexample point(s) when failing
};

struct TruthPreservationReport {
  bool continuous = false;
  bool open = false;
  bool homeomorphic = false;
  std::vector<FormulaTransferVerdict> verdicts;

  bool all_hold() const {
    for (const auto& v : verdicts)
      if (v.status == FormulaTransferVerdict::Status::Fails) return false;
    return true;
  }
};

/// Per-formula truth transfer along f, with m2 required to be the
/// pushforward of m.  Homeomorphisms get the pointwise biconditional on
/// every formula; merely continuous maps get forward checks on the
/// {and,or,diamond,~}-fragment; merely open maps get backward checks on
/// the {and,or,box,-}-fragment.  Anything else is flagged out-of-fragment.
inline TruthPreservationReport check_truth_preservation(
    const TopoModel& m, const TopoModel& m2, const PointMap& f,
    const std::vector<Formula>& formulas) {
  check_sizes(f, m.space(), m2.space());
  for (const auto& [name, set] : m.valuation())
    if (!(m2.valuation_of(name) == f.image(set)))
      throw PreconditionFailed("m2 is not the pushforward of m under f (at '" +
                               name + "')");

  TruthPreservationReport report;
  report.continuous = is_continuous(f, m.space(), m2.space());
  report.open = is_open_map(f, m.space(), m2.space());
  report.homeomorphic = is_homeomorphism(f, m.space(), m2.space());

  for (const Formula& phi : formulas) {
    FormulaTransferVerdict v{phi, FormulaTransferVerdict::Status::Holds, ""};
    auto record_fail = [&](int w, const std::string& dir) {
      v.status = FormulaTransferVerdict::Status::Fails;
      v.detail = dir + " fails at point " + std::to_string(w);
    };
    if (report.homeomorphic) {
      for (int w = 0; w < m.point_count(); ++w)
        if (m.satisfies(w, phi) != m2.satisfies(f(w), phi)) {
          record_fail(w, "biconditional");
          break;
        }
    } else if (report.continuous && phi.in_fragment(kContinuousForwardStated)) {
      for (int w = 0; w < m.point_count(); ++w)
        if (m.satisfies(w, phi) && !m2.satisfies(f(w), phi)) {
          record_fail(w, "forward preservation");
          break;
        }
    } else if (report.open && phi.in_fragment(kOpenBackwardStated)) {
      for (int w = 0; w < m.point_count(); ++w)
        if (m2.satisfies(f(w), phi) && !m.satisfies(w, phi)) {
          record_fail(w, "backward preservation");
          break;
        }
    } else {
      v.status = FormulaTransferVerdict::Status::OutOfFragment;
      v.detail = "skipped: formula outside the checked fragment for this map";
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

/// All continuous maps from t to t2, i.e. the specialization-preorder
/// preserving maps, in lexicographic image order.  Throws when their count
/// would exceed the cap.
inline std::vector<PointMap> enumerate_continuous_maps(const FiniteTopology& t,
                                                       const FiniteTopology& t2,
                                                       std::size_t cap) {
  const int n = t.point_count();
  const int n2 = t2.point_count();
  Preorder p = t.specialization_preorder();
  Preorder q = t2.specialization_preorder();
  std::vector<PointMap> out;
  std::vector<int> image(n, -1);
  bool overflow = false;
  std::function<void(int)> assign = [&](int i) {
    if (overflow) return;
    if (i == n) {
      if (out.size() >= cap) {
        overflow = true;
        return;
      }
      out.emplace_back(n, n2, image);
      return;
    }
    for (int v = 0; v < n2 && !overflow; ++v) {
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        if (p.leq(i, j) && !q.leq(v, image[j])) ok = false;
        if (p.leq(j, i) && !q.leq(image[j], v)) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      image[i] = v;
      assign(i + 1);
      image[i] = -1;
    }
  };
  assign(0);
  if (overflow)
    throw MapSpaceOverflow("continuous map space exceeds cap of " +
                           std::to_string(cap));
  return out;
}

/// Finite-space homotopy witness: a chain of continuous maps whose
/// consecutive members are pointwise comparable (one fixed direction per
/// step) in the codomain's specialization preorder.
struct HomotopyFence {
  std::vector<PointMap> maps;
};

/// Breadth-first search over the continuous map space; a returned fence is
/// minimal in length.  Comparability: h <= h' iff for all s, h(s) lies in
/// the closure of {h'(s)}.
inline std::optional<HomotopyFence> are_homotopic(const PointMap& f,
                                                  const PointMap& g,
                                                  const FiniteTopology& t,
                                                  const FiniteTopology& t2,
                                                  std::size_t cap = kDefaultMapSpaceCap) {
  if (!is_continuous(f, t, t2) || !is_continuous(g, t, t2))
    throw PreconditionFailed("homotopy endpoints must be continuous");
  std::vector<PointMap> maps = enumerate_continuous_maps(t, t2, cap);
  Preorder q = t2.specialization_preorder();
  // leq(a,b) in the spatial sense: a in Clo({b}), i.e. b in every open
  // around a -- which is q.leq as built from minimal neighborhoods.
  auto pointwise_leq = [&](const PointMap& a, const PointMap& b) {
    for (int s = 0; s < a.domain_size(); ++s)
      if (!q.leq(a(s), b(s))) return false;
    return true;
  };
  auto comparable = [&](const PointMap& a, const PointMap& b) {
    return pointwise_leq(a, b) || pointwise_leq(b, a);
  };

  auto index_of = [&](const PointMap& h) -> int {
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (maps[i] == h) return int(i);
    return -1;
  };
  int start = index_of(f), goal = index_of(g);
  if (start < 0 || goal < 0) return std::nullopt;

  std::vector<int> parent(maps.size(), -2);
  std::deque<int> frontier = {start};
  parent[start] = -1;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    if (cur == goal) break;
    for (std::size_t next = 0; next < maps.size(); ++next)
      if (parent[next] == -2 && comparable(maps[cur], maps[next])) {
        parent[next] = cur;
        frontier.push_back(int(next));
      }
  }
  if (parent[goal] == -2) return std::nullopt;
  std::vector<PointMap> chain;
  for (int cur = goal; cur != -1; cur = parent[cur]) chain.push_back(maps[cur]);
  std::reverse(chain.begin(), chain.end());
  return HomotopyFence{std::move(chain)};
}

/// The model family M_t with V_t = f_t(V) on the target space.  Every map
/// must be a homeomorphism; the relaxed continuous-fence variant lives in
/// the harness as a report-only probe.
inline std::vector<TopoModel> homotopic_models(const TopoModel& m,
                                               const HomotopyFence& fence,
                                               const FiniteTopology& target) {
  std::vector<TopoModel> family;
  for (std::size_t i = 0; i < fence.maps.size(); ++i) {
    if (!is_homeomorphism(fence.maps[i], m.space(), target))
      throw NotHomeomorphism("fence map at index " + std::to_string(i) +
                             " is not a homeomorphism");
    family.push_back(pushforward_model(m, fence.maps[i], target));
  }
  return family;
}

inline std::vector<TopoModel> homotopic_models(const TopoModel& m,
                                               const HomotopyFence& fence) {
  return homotopic_models(m, fence, m.space());
}

}  // namespace paratop
