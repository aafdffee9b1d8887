#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paratop/model.hpp"

namespace paratop {

/// Worlds, an accessibility relation, and a valuation.  Used with the
/// paraconsistent language where '~' is the modal negation: ~phi holds at w
/// when phi fails at some R-successor (not-box).
class KripkeModel {
public:
  KripkeModel(int world_count, const std::vector<std::pair<int, int>>& edges,
              std::map<std::string, PointSet> valuation)
      : n_(world_count), succ_(world_count), valuation_(std::move(valuation)) {
    if (n_ < 1 || n_ > kMaxPoints)
      throw Error("world count must be in 1.." + std::to_string(kMaxPoints));
    for (auto [a, b] : edges) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw Error("edge index out of range");
      succ_[a] = succ_[a] | PointSet::singleton(b);
    }
    for (const auto& [name, set] : valuation_)
      if (!set.within_bounds(n_))
        throw Error("valuation of '" + name + "' exceeds world count");
  }

  int world_count() const { return n_; }
  PointSet successors(int w) const { return succ_[w]; }
  const std::map<std::string, PointSet>& valuation() const { return valuation_; }

  PointSet valuation_of(const std::string& p) const {
    auto it = valuation_.find(p);
    return it == valuation_.end() ? PointSet::empty_set() : it->second;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
      for (int b : succ_[a].members()) out.emplace_back(a, b);
    return out;
  }

  bool relation_is_preorder() const {
    for (int a = 0; a < n_; ++a) {
      if (!succ_[a].contains(a)) return false;
      for (int b : succ_[a].members())
        if (!succ_[b].subset_of(succ_[a])) return false;
    }
    return true;
  }

  KripkeModel reflexive_transitive_closure() const {
    std::vector<PointSet> closed = succ_;
    for (int a = 0; a < n_; ++a) closed[a] = closed[a] | PointSet::singleton(a);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a) {
        PointSet next = closed[a];
        for (int b : closed[a].members()) next = next | closed[b];
        if (!(next == closed[a])) {
          closed[a] = next;
          changed = true;
        }
      }
    }
    KripkeModel out(n_, {}, valuation_);
    out.succ_ = std::move(closed);
    return out;
  }

  bool operator==(const KripkeModel&) const = default;

private:
  int n_;
  std::vector<PointSet> succ_;
  std::map<std::string, PointSet> valuation_;
};

/// Kripke satisfaction for the paraconsistent language.  Box quantifies
/// over all successors, diamond over some, and ~phi is the negation of
/// box phi: some successor falsifies phi.
inline bool eval_kripke(const KripkeModel& k, int w, const Formula& f) {
  if (w < 0 || w >= k.world_count()) throw Error("world out of range");
  switch (f.kind()) {
    case FormulaKind::Prop: return k.valuation_of(f.name()).contains(w);
    case FormulaKind::Top: return true;
    case FormulaKind::Bot: return false;
    case FormulaKind::And:
      return eval_kripke(k, w, f.left()) && eval_kripke(k, w, f.right());
    case FormulaKind::Or:
      return eval_kripke(k, w, f.left()) || eval_kripke(k, w, f.right());
    case FormulaKind::Box:
      for (int v : k.successors(w).members())
        if (!eval_kripke(k, v, f.child())) return false;
      return true;
    case FormulaKind::Diamond:
      for (int v : k.successors(w).members())
        if (eval_kripke(k, v, f.child())) return true;
      return false;
    case FormulaKind::ParaNeg:
      for (int v : k.successors(w).members())
        if (!eval_kripke(k, v, f.child())) return true;
      return false;
    case FormulaKind::ClassNeg:
      throw ModeMismatch("'!' is not part of the paraconsistent Kripke language");
    case FormulaKind::CompNeg:
      throw ModeMismatch("'-' is not part of the paraconsistent Kripke language");
  }
  throw Error("unreachable formula kind");
}

/// R_sigma translation: wRv iff w lies in the closure of {v}.  On finite
/// spaces the successor set of w is exactly its minimal neighborhood.
inline KripkeModel topo_to_kripke(const TopoModel& m) {
  if (m.mode() != Mode::Paraconsistent)
    throw WrongMode("topo_to_kripke expects a paraconsistent model");
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < m.point_count(); ++w)
    for (int v = 0; v < m.point_count(); ++v)
      if (m.space().closure(PointSet::singleton(v)).contains(w))
        edges.emplace_back(w, v);
  return KripkeModel(m.point_count(), edges, m.valuation());
}

struct KripkeToTopoResult {
  TopoModel model;
  bool relation_was_preorder;  // false when closure was applied first
};

/// Closed sets are the R-downward-closed subsets (predecessors of members
/// are members); opens are their complements.  Non-preorder relations are
/// reflexively-transitively closed first, with that fact surfaced in the
/// result.  Valuations must already be downward closed.
inline KripkeToTopoResult kripke_to_topo(const KripkeModel& k) {
  bool was_preorder = k.relation_is_preorder();
  KripkeModel pre = was_preorder ? k : k.reflexive_transitive_closure();
  const int n = pre.world_count();

  auto downward_closed = [&](PointSet d) {
    for (int w = 0; w < n; ++w)
      if (!d.contains(w) && pre.successors(w).intersects(d)) return false;
    return true;
  };

  std::vector<PointSet> opens;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (downward_closed(PointSet(bits).complement(n))) opens.push_back(PointSet(bits));
  FiniteTopology space = FiniteTopology::from_opens(n, std::move(opens));

  for (const auto& [name, set] : pre.valuation())
    if (!downward_closed(set))
      throw ValuationNotClosed("valuation of '" + name +
                               "' is not downward closed: " + set.to_string());
  return {TopoModel(std::move(space), Mode::Paraconsistent, pre.valuation()),
          was_preorder};
}

struct TranslationVerdict {
  Formula formula;
  bool forward_holds;        // topo satisfaction implies Kripke satisfaction
  bool biconditional_holds;  // and conversely
  std::string counterexample;
};

struct TranslationReport {
  KripkeModel kripke;
  std::vector<TranslationVerdict> verdicts;

  bool all_biconditional() const {
    for (const auto& v : verdicts)
      if (!v.biconditional_holds) return false;
    return true;
  }
};

/// Compares topological and Kripke satisfaction at every world for each
/// formula.  The stated claim is one-directional; on finite spaces the two
/// semantics coincide, so the biconditional is recorded as well.
inline TranslationReport check_translation(const TopoModel& m,
                                           const std::vector<Formula>& formulas) {
  TranslationReport report{topo_to_kripke(m), {}};
  for (const Formula& phi : formulas) {
    TranslationVerdict v{phi, true, true, ""};
    for (int w = 0; w < m.point_count(); ++w) {
      bool topo = m.satisfies(w, phi);
      bool kripke = eval_kripke(report.kripke, w, phi);
      if (topo && !kripke) {
        v.forward_holds = false;
        v.biconditional_holds = false;
        v.counterexample = "world " + std::to_string(w);
        break;
      }
      if (topo != kripke) {
        v.biconditional_holds = false;
        v.counterexample = "world " + std::to_string(w);
      }
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace paratop
