#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "paratop/errors.hpp"
#include "paratop/point_set.hpp"

namespace paratop {

/// Reflexive-transitive relation on {0,...,n-1}.  ups[i] is the up-set
/// {j : i <= j}; on finite spaces this is exactly the minimal open
/// neighborhood of i in the induced Alexandrov topology.
class Preorder {
public:
  Preorder(int n, std::vector<PointSet> ups) : n_(n), ups_(std::move(ups)) {
    if (static_cast<int>(ups_.size()) != n_)
      throw Error("preorder: up-set table size != point count");
    for (int i = 0; i < n_; ++i) {
      if (!ups_[i].within_bounds(n_))
        throw Error("preorder: up-set out of bounds");
      if (!ups_[i].contains(i)) throw Error("preorder: not reflexive");
    }
    for (int i = 0; i < n_; ++i)
      for (int j : ups_[i].members())
        if (!ups_[j].subset_of(ups_[i])) throw Error("preorder: not transitive");
  }

  /// Reflexive-transitive closure of an arbitrary pair list.
  static Preorder closure_of(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<PointSet> ups(n);
    for (int i = 0; i < n; ++i) ups[i] = PointSet::singleton(i);
    for (auto [a, b] : pairs) ups[a] = ups[a] | PointSet::singleton(b);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        PointSet next = ups[i];
        for (int j : ups[i].members()) next = next | ups[j];
        if (!(next == ups[i])) {
          ups[i] = next;
          changed = true;
        }
      }
    }
    return Preorder(n, std::move(ups));
  }

  int point_count() const { return n_; }
  bool leq(int a, int b) const { return ups_[a].contains(b); }
  PointSet up_set(int a) const { return ups_[a]; }

  bool operator==(const Preorder&) const = default;

private:
  int n_;
  std::vector<PointSet> ups_;
};

/// A finite topological space: ground set {0,...,n-1} and its open-set
/// family.  Closed-set ("tau") spaces are the same object viewed through
/// closeds(); see dual() for swapping the two.  Immutable once built.
class FiniteTopology {
public:
  /// Validates a family as a topology.  The family must contain the empty
  /// and full sets and be closed under pairwise union and intersection
  /// (finite, so this implies arbitrary closure).  Duplicates are dropped
  /// and the family is stored in canonical order.
  static FiniteTopology from_opens(int n, std::vector<PointSet> family) {
    check_point_count(n);
    for (const PointSet& s : family)
      if (!s.within_bounds(n))
        throw Error("from_opens: set " + s.to_string() + " exceeds point count");
    std::sort(family.begin(), family.end(), PointSet::canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());

    std::vector<bool> table(std::size_t(1) << n, false);
    for (const PointSet& s : family) table[s.bits()] = true;
    auto listed = [&](PointSet s) { return table[s.bits()]; };
    if (!listed(PointSet::empty_set()) || !listed(PointSet::full_set(n)))
      throw MissingExtremes("opens family must contain {} and the full set");
    for (const PointSet& a : family)
      for (const PointSet& b : family) {
        if (!listed(a | b))
          throw NotClosedUnderOps("missing union of " + a.to_string() + " and " +
                                  b.to_string());
        if (!listed(a & b))
          throw NotClosedUnderOps("missing intersection of " + a.to_string() +
                                  " and " + b.to_string());
      }
    return FiniteTopology(n, std::move(family));
  }

  /// Closes an arbitrary family (plus the extremes) under union and
  /// intersection.  Harness convenience; from_opens never completes.
  static FiniteTopology generate_from_subbase(int n, std::vector<PointSet> family) {
    check_point_count(n);
    for (const PointSet& s : family)
      if (!s.within_bounds(n)) throw Error("subbase set exceeds point count");
    family.push_back(PointSet::empty_set());
    family.push_back(PointSet::full_set(n));
    std::vector<bool> present(std::size_t(1) << n, false);
    std::vector<PointSet> work;
    for (PointSet s : family)
      if (!present[s.bits()]) {
        present[s.bits()] = true;
        work.push_back(s);
      }
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        for (PointSet c : {work[i] | work[j], work[i] & work[j]})
          if (!present[c.bits()]) {
            present[c.bits()] = true;
            work.push_back(c);
          }
    std::sort(work.begin(), work.end(), PointSet::canonical_less);
    return FiniteTopology(n, std::move(work));
  }

  /// Alexandrov topology of a preorder: opens are the up-closed sets.
  static FiniteTopology from_preorder(const Preorder& p) {
    const int n = p.point_count();
    check_point_count(n);
    std::vector<PointSet> opens;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      PointSet s(bits);
      bool up_closed = true;
      for (int i : s.members())
        if (!p.up_set(i).subset_of(s)) {
          up_closed = false;
          break;
        }
      if (up_closed) opens.push_back(s);
    }
    std::sort(opens.begin(), opens.end(), PointSet::canonical_less);
    return FiniteTopology(n, std::move(opens));
  }

  static FiniteTopology discrete(int n) {
    check_point_count(n);
    std::vector<PointSet> opens;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      opens.push_back(PointSet(bits));
    std::sort(opens.begin(), opens.end(), PointSet::canonical_less);
    return FiniteTopology(n, std::move(opens));
  }

  static FiniteTopology indiscrete(int n) {
    check_point_count(n);
    std::vector<PointSet> opens = {PointSet::empty_set(), PointSet::full_set(n)};
    std::sort(opens.begin(), opens.end(), PointSet::canonical_less);
    return FiniteTopology(n, std::move(opens));
  }

  int point_count() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }

  std::vector<PointSet> closeds() const {
    std::vector<PointSet> cs;
    cs.reserve(opens_.size());
    for (PointSet o : opens_) cs.push_back(o.complement(n_));
    std::sort(cs.begin(), cs.end(), PointSet::canonical_less);
    return cs;
  }

  bool is_open(PointSet x) const { return open_table_[x.bits()]; }
  bool is_closed(PointSet x) const { return open_table_[x.complement(n_).bits()]; }

  /// Intersection of all opens containing s; open itself (Alexandrov).
  PointSet minimal_neighborhood(int s) const { return min_nbhd_[s]; }

  /// Largest open subset of x.  Computed via minimal neighborhoods:
  /// x is in the interior iff its whole minimal neighborhood fits in x.
  PointSet interior(PointSet x) const {
    PointSet out;
    for (int p : x.members())
      if (min_nbhd_[p].subset_of(x)) out = out | PointSet::singleton(p);
    return out;
  }

  /// Smallest closed superset of x: points whose every neighborhood meets x.
  PointSet closure(PointSet x) const {
    PointSet out;
    for (int p = 0; p < n_; ++p)
      if (min_nbhd_[p].intersects(x)) out = out | PointSet::singleton(p);
    return out;
  }

  PointSet boundary(PointSet x) const { return closure(x) - interior(x); }

  /// Specialization preorder: a <= b iff a is in the closure of {b}
  /// (equivalently b lies in every open containing a).
  Preorder specialization_preorder() const {
    std::vector<PointSet> ups(n_);
    for (int i = 0; i < n_; ++i) ups[i] = min_nbhd_[i];
    return Preorder(n_, std::move(ups));
  }

  /// Maximal connected subspaces; returned as disjoint point sets covering
  /// the ground set, canonically ordered.  Components of a finite space are
  /// the components of its specialization comparability graph.
  std::vector<PointSet> connected_components() const {
    std::vector<int> repr(n_);
    std::iota(repr.begin(), repr.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (repr[x] != x) x = repr[x] = repr[repr[x]];
      return x;
    };
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (min_nbhd_[a].contains(b) || min_nbhd_[b].contains(a))
          repr[find(a)] = find(b);
    std::vector<PointSet> comps;
    for (int root = 0; root < n_; ++root) {
      if (find(root) != root) continue;
      PointSet c;
      for (int x = 0; x < n_; ++x)
        if (find(x) == root) c = c | PointSet::singleton(x);
      comps.push_back(c);
    }
    std::sort(comps.begin(), comps.end(), PointSet::canonical_less);
    return comps;
  }

  bool is_connected() const { return connected_components().size() == 1; }

  /// Induced topology on a non-empty subset, points relabeled ascending.
  /// Defined after the class (the result carries a topology by value).
  struct Subspace;
  Subspace subspace(PointSet carrier) const;

  /// Space whose opens are this space's closed sets.  Involutive.
  FiniteTopology dual() const { return FiniteTopology(n_, closeds()); }

  bool operator==(const FiniteTopology& o) const {
    return n_ == o.n_ && opens_ == o.opens_;
  }

private:
  FiniteTopology(int n, std::vector<PointSet> opens)
      : n_(n), opens_(std::move(opens)), open_table_(std::size_t(1) << n, false) {
    for (PointSet o : opens_) open_table_[o.bits()] = true;
    min_nbhd_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      PointSet u = PointSet::full_set(n_);
      for (PointSet o : opens_)
        if (o.contains(p)) u = u & o;
      min_nbhd_[p] = u;
    }
  }

  static void check_point_count(int n) {
    if (n < 1 || n > kMaxPoints)
      throw Error("point count must be in 1.." + std::to_string(kMaxPoints));
  }

  int n_;
  std::vector<PointSet> opens_;       // canonical order, deduplicated
  std::vector<bool> open_table_;      // indexed by bit pattern
  std::vector<PointSet> min_nbhd_;
};

/// original_ids maps the relabeled subspace points back to the ambient space.
struct FiniteTopology::Subspace {
  FiniteTopology topology;
  std::vector<int> original_ids;
};

inline FiniteTopology::Subspace FiniteTopology::subspace(PointSet carrier) const {
  if (carrier.empty()) throw EmptyCarrier("subspace carrier must be non-empty");
  std::vector<int> ids = carrier.members();
  std::vector<int> relabel(n_, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) relabel[ids[i]] = int(i);
  std::vector<PointSet> opens;
  for (PointSet o : opens_) {
    PointSet restricted = o & carrier;
    PointSet out;
    for (int p : restricted.members()) out = out | PointSet::singleton(relabel[p]);
    opens.push_back(out);
  }
  std::sort(opens.begin(), opens.end(), PointSet::canonical_less);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return Subspace{FiniteTopology(int(ids.size()), std::move(opens)), std::move(ids)};
}

}  // namespace paratop
