#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paratop/maps.hpp"
#include "paratop/model.hpp"

namespace paratop {

/// Relation between the points of two models; rows indexed by the first
/// model's points.
class PointRelation {
public:
  PointRelation(int left_size, int right_size)
      : left_(left_size), right_(right_size), rows_(left_size) {}

  int left_size() const { return left_; }
  int right_size() const { return right_; }

  bool related(int a, int b) const { return rows_[a].contains(b); }
  void add(int a, int b) { rows_[a] = rows_[a] | PointSet::singleton(b); }
  void remove(int a, int b) { rows_[a] = rows_[a] - PointSet::singleton(b); }
  PointSet row(int a) const { return rows_[a]; }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < left_; ++a)
      for (int b : rows_[a].members()) out.emplace_back(a, b);
    return out;
  }

  bool contains_diagonal() const {
    for (int a = 0; a < std::min(left_, right_); ++a)
      if (!related(a, a)) return false;
    return true;
  }

  bool operator==(const PointRelation&) const = default;

private:
  int left_, right_;
  std::vector<PointSet> rows_;
};

namespace detail {
inline std::set<std::string> atom_names(const TopoModel& m, const TopoModel& m2) {
  std::set<std::string> names;
  for (const auto& [name, set] : m.valuation()) names.insert(name);
  for (const auto& [name, set] : m2.valuation()) names.insert(name);
  return names;
}

inline bool atoms_agree(const TopoModel& m, const TopoModel& m2, int s, int s2,
                        const std::set<std::string>& names) {
  for (const std::string& p : names)
    if (m.valuation_of(p).contains(s) != m2.valuation_of(p).contains(s2))
      return false;
  return true;
}
}  // namespace detail

/// Checks the three topo-bisimulation clauses directly on a given relation.
/// On Alexandrov spaces the open-set quantifiers collapse to minimal
/// neighborhoods: every open around s contains U(s), and U(s') is the
/// hardest witness candidate.  When use_closed_sets is set the dual
/// closed-set clauses are checked instead (experimental; the
/// standard definition quantifies over opens).
inline bool is_topo_bisimulation(const TopoModel& m, const TopoModel& m2,
                                 const PointRelation& z,
                                 bool use_closed_sets = false) {
  auto names = detail::atom_names(m, m2);
  auto nbhd = [&](const TopoModel& mm, int p) {
    return use_closed_sets ? mm.space().closure(PointSet::singleton(p))
                           : mm.space().minimal_neighborhood(p);
  };
  for (auto [s, s2] : z.pairs()) {
    if (!detail::atoms_agree(m, m2, s, s2, names)) return false;
    // forth
    for (int t2 : nbhd(m2, s2).members()) {
      bool matched = false;
      for (int t : nbhd(m, s).members())
        if (z.related(t, t2)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    // back
    for (int t : nbhd(m, s).members()) {
      bool matched = false;
      for (int t2 : nbhd(m2, s2).members())
        if (z.related(t, t2)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
  }
  return true;
}

/// Greatest fixpoint: start from atom-agreeing pairs and delete violators
/// of the forth/back clauses until stable.  The result is the union of all
/// topo-bisimulations between the two models.
inline PointRelation greatest_topo_bisimulation(const TopoModel& m,
                                                const TopoModel& m2,
                                                bool use_closed_sets = false) {
  if (m.mode() != m2.mode())
    throw ModeMismatch("bisimulation requires models of the same mode");
  auto names = detail::atom_names(m, m2);
  PointRelation z(m.point_count(), m2.point_count());
  for (int s = 0; s < m.point_count(); ++s)
    for (int s2 = 0; s2 < m2.point_count(); ++s2)
      if (detail::atoms_agree(m, m2, s, s2, names)) z.add(s, s2);

  auto nbhd = [&](const TopoModel& mm, int p) {
    return use_closed_sets ? mm.space().closure(PointSet::singleton(p))
                           : mm.space().minimal_neighborhood(p);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [s, s2] : z.pairs()) {
      bool ok = true;
      for (int t2 : nbhd(m2, s2).members()) {
        bool matched = false;
        for (int t : nbhd(m, s).members())
          if (z.related(t, t2)) {
            matched = true;
            break;
          }
        if (!matched) {
          ok = false;
          break;
        }
      }
      if (ok)
        for (int t : nbhd(m, s).members()) {
          bool matched = false;
          for (int t2 : nbhd(m2, s2).members())
            if (z.related(t, t2)) {
              matched = true;
              break;
            }
          if (!matched) {
            ok = false;
            break;
          }
        }
      if (!ok) {
        z.remove(s, s2);
        changed = true;
      }
    }
  }
  return z;
}

/// Continuous topo-bisimulation: a topo-bisimulation together with a
/// homeomorphism f with V' = f(V).
inline bool is_continuous_topo_bisimulation(const TopoModel& m, const TopoModel& m2,
                                            const PointRelation& z,
                                            const PointMap& f) {
  if (!is_topo_bisimulation(m, m2, z)) return false;
  if (!is_homeomorphism(f, m.space(), m2.space())) return false;
  for (const auto& [name, set] : m.valuation())
    if (!(m2.valuation_of(name) == f.image(set))) return false;
  for (const auto& [name, set] : m2.valuation())
    if (!(f.image(m.valuation_of(name)) == set)) return false;
  return true;
}

/// All pairs of extensions ([phi] in m, [phi] in m2) realizable by a single
/// well-moded formula, with one representative formula per pair.  Closed
/// under the mode's full operation set, so point pairs agreeing on every
/// entry are logically equivalent (for the whole language, not just an
/// enumerated sample).
struct ExtensionPairFamily {
  std::vector<std::pair<PointSet, PointSet>> pairs;
  std::vector<Formula> witnesses;  // parallel to pairs
};

inline ExtensionPairFamily extension_pair_family(const TopoModel& m,
                                                 const TopoModel& m2,
                                                 int depth_cap,
                                                 std::size_t count_cap) {
  ExtensionPairFamily fam;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  auto push = [&](PointSet a, PointSet b, const Formula& w) {
    if (fam.pairs.size() >= count_cap) return false;
    if (seen.insert({a.bits(), b.bits()}).second) {
      fam.pairs.emplace_back(a, b);
      fam.witnesses.push_back(w);
      return true;
    }
    return false;
  };

  push(PointSet::full_set(m.point_count()), PointSet::full_set(m2.point_count()),
       Formula::top());
  push(PointSet::empty_set(), PointSet::empty_set(), Formula::bot());
  for (const std::string& p : detail::atom_names(m, m2))
    push(m.valuation_of(p), m2.valuation_of(p), Formula::prop(p));

  auto boolean_close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      std::size_t count = fam.pairs.size();
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          grew |= push(fam.pairs[i].first & fam.pairs[j].first,
                       fam.pairs[i].second & fam.pairs[j].second,
                       Formula::conj(fam.witnesses[i], fam.witnesses[j]));
          grew |= push(fam.pairs[i].first | fam.pairs[j].first,
                       fam.pairs[i].second | fam.pairs[j].second,
                       Formula::disj(fam.witnesses[i], fam.witnesses[j]));
        }
    }
  };

  boolean_close();
  for (int round = 0; round < depth_cap; ++round) {
    std::size_t before = fam.pairs.size();
    for (std::size_t i = 0; i < before; ++i) {
      auto [a, b] = fam.pairs[i];
      const Formula& w = fam.witnesses[i];
      push(m.space().interior(a), m2.space().interior(b), Formula::box(w));
      push(m.space().closure(a), m2.space().closure(b), Formula::diamond(w));
      if (m.mode() != Mode::Classical || m2.mode() != Mode::Classical) {
        if (m.mode() == Mode::Paraconsistent)
          push(m.negation_of(a), m2.negation_of(b), Formula::para_neg(w));
        else if (m.mode() == Mode::Paracomplete)
          push(m.negation_of(a), m2.negation_of(b), Formula::comp_neg(w));
      } else {
        push(m.negation_of(a), m2.negation_of(b), Formula::class_neg(w));
      }
    }
    boolean_close();
    if (fam.pairs.size() == before) break;  // fixpoint: all extensions reached
  }
  return fam;
}

/// Pairs of points agreeing on the extension of every formula reachable
/// within the caps, computed by the extension-pair fixpoint rather than
/// any bisimulation machinery.
inline PointRelation logical_equivalence(const TopoModel& m, const TopoModel& m2,
                                         int depth_cap, std::size_t count_cap) {
  if (m.mode() != m2.mode())
    throw ModeMismatch("logical equivalence requires models of the same mode");
  ExtensionPairFamily fam = extension_pair_family(m, m2, depth_cap, count_cap);
  PointRelation rel(m.point_count(), m2.point_count());
  for (int w = 0; w < m.point_count(); ++w)
    for (int w2 = 0; w2 < m2.point_count(); ++w2) {
      bool agree = true;
      for (const auto& [a, b] : fam.pairs)
        if (a.contains(w) != b.contains(w2)) {
          agree = false;
          break;
        }
      if (agree) rel.add(w, w2);
    }
  return rel;
}

struct HennessyMilnerReport {
  bool coincide;
  PointRelation bisimulation;
  PointRelation equivalence;
  // Filled when the relations differ on some pair.
  std::optional<std::pair<int, int>> separating_pair;
  std::optional<Formula> distinguishing_formula;
  bool distinguishing_formula_verified = false;
};

/// Finite-space Hennessy-Milner comparison: the greatest topo-bisimulation
/// against full logical equivalence, with a distinguishing formula pulled
/// from the extension-pair family when they disagree.
inline HennessyMilnerReport hennessy_milner_check(const TopoModel& m,
                                                  const TopoModel& m2,
                                                  int depth_cap = 32,
                                                  std::size_t count_cap = 1 << 20) {
  HennessyMilnerReport report{true, greatest_topo_bisimulation(m, m2),
                              logical_equivalence(m, m2, depth_cap, count_cap),
                              std::nullopt, std::nullopt};
  if (report.bisimulation == report.equivalence) return report;
  report.coincide = false;
  ExtensionPairFamily fam = extension_pair_family(m, m2, depth_cap, count_cap);
  for (int w = 0; w < m.point_count() && !report.separating_pair; ++w)
    for (int w2 = 0; w2 < m2.point_count(); ++w2) {
      if (report.bisimulation.related(w, w2) == report.equivalence.related(w, w2))
        continue;
      report.separating_pair = {w, w2};
      for (std::size_t i = 0; i < fam.pairs.size(); ++i)
        if (fam.pairs[i].first.contains(w) != fam.pairs[i].second.contains(w2)) {
          report.distinguishing_formula = fam.witnesses[i];
          report.distinguishing_formula_verified =
              m.satisfies(w, fam.witnesses[i]) != m2.satisfies(w2, fam.witnesses[i]);
          break;
        }
      break;
    }
  return report;
}

}  // namespace paratop
