#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paratop/formula.hpp"
#include "paratop/topology.hpp"

namespace paratop {

inline constexpr std::size_t kDefaultAlgebraCap = 4096;

/// Family of point sets generated from the valuation images and closed
/// under intersection, union, Int, Clo, and the mode's negation.  Finite
/// stand-in for "all formula extensions": every well-moded formula's
/// extension lies here.
struct DefinableAlgebra {
  std::vector<PointSet> sets;  // canonical order

  bool contains(PointSet s) const {
    for (PointSet x : sets)
      if (x == s) return true;
    return false;
  }

  /// Only the empty and full set are definable.
  bool trivial() const { return sets.size() <= 2; }
};

struct TheorySnapshot {
  int point;
  int depth;
  std::vector<Formula> formulas_true;
};

enum class PointClass { Glutty, Gappy, Classical };

/// A topological model: space, evaluation mode, and a valuation whose
/// images are closed sets (paraconsistent), open sets (paracomplete) or
/// arbitrary (classical).
class TopoModel {
public:
  TopoModel(FiniteTopology space, Mode mode, std::map<std::string, PointSet> valuation)
      : space_(std::move(space)), mode_(mode), valuation_(std::move(valuation)) {
    for (const auto& [name, set] : valuation_) {
      if (!set.within_bounds(space_.point_count()))
        throw Error("valuation of '" + name + "' exceeds point count");
      if (mode_ == Mode::Paraconsistent && !space_.is_closed(set))
        throw ValuationNotClosed("valuation of '" + name + "' is not closed: " +
                                 set.to_string());
      if (mode_ == Mode::Paracomplete && !space_.is_open(set))
        throw ValuationNotOpen("valuation of '" + name + "' is not open: " +
                               set.to_string());
    }
  }

  const FiniteTopology& space() const { return space_; }
  Mode mode() const { return mode_; }
  const std::map<std::string, PointSet>& valuation() const { return valuation_; }
  int point_count() const { return space_.point_count(); }

  PointSet valuation_of(const std::string& p) const {
    auto it = valuation_.find(p);
    return it == valuation_.end() ? PointSet::empty_set() : it->second;
  }

  /// The set of points where f holds.  Box is Int, diamond is Clo; '~' is
  /// the closure of the complement, '-' the interior of the complement.
  PointSet extension(const Formula& f) const {
    const int n = space_.point_count();
    switch (f.kind()) {
      case FormulaKind::Prop: return valuation_of(f.name());
      case FormulaKind::Top: return PointSet::full_set(n);
      case FormulaKind::Bot: return PointSet::empty_set();
      case FormulaKind::And: return extension(f.left()) & extension(f.right());
      case FormulaKind::Or: return extension(f.left()) | extension(f.right());
      case FormulaKind::Box: return space_.interior(extension(f.child()));
      case FormulaKind::Diamond: return space_.closure(extension(f.child()));
      case FormulaKind::ClassNeg:
        require_mode(Mode::Classical, "!");
        return extension(f.child()).complement(n);
      case FormulaKind::ParaNeg:
        require_mode(Mode::Paraconsistent, "~");
        return space_.closure(extension(f.child()).complement(n));
      case FormulaKind::CompNeg:
        require_mode(Mode::Paracomplete, "-");
        return space_.interior(extension(f.child()).complement(n));
    }
    throw Error("unreachable formula kind");
  }

  bool satisfies(int w, const Formula& f) const {
    if (w < 0 || w >= space_.point_count()) throw Error("point out of range");
    return extension(f).contains(w);
  }

  bool globally_true(const Formula& f) const {
    return extension(f) == PointSet::full_set(space_.point_count());
  }

  /// Points where both f and ~f hold.  When [f] is closed this is exactly
  /// the boundary of [f].
  PointSet glut_points(const Formula& f) const {
    if (mode_ != Mode::Paraconsistent)
      throw WrongMode("glut_points requires a paraconsistent model");
    PointSet ext = extension(f);
    return ext & space_.closure(ext.complement(space_.point_count()));
  }

  /// Points where neither f nor -f holds; the boundary of [f] when [f] is
  /// open.
  PointSet gap_points(const Formula& f) const {
    if (mode_ != Mode::Paracomplete)
      throw WrongMode("gap_points requires a paracomplete model");
    const int n = space_.point_count();
    PointSet ext = extension(f);
    PointSet either = ext | space_.interior(ext.complement(n));
    return either.complement(n);
  }

  DefinableAlgebra definable_algebra(std::size_t cap = kDefaultAlgebraCap) const {
    const int n = space_.point_count();
    std::vector<bool> present(std::size_t(1) << n, false);
    std::vector<PointSet> work;
    auto push = [&](PointSet s) {
      if (!present[s.bits()]) {
        present[s.bits()] = true;
        work.push_back(s);
        if (work.size() > cap)
          throw AlgebraOverflow("definable algebra exceeds cap of " +
                                std::to_string(cap));
      }
    };
    push(PointSet::empty_set());
    push(PointSet::full_set(n));
    for (const auto& [name, set] : valuation_) push(set);
    for (std::size_t i = 0; i < work.size(); ++i) {
      PointSet a = work[i];
      push(space_.interior(a));
      push(space_.closure(a));
      push(negation_of(a));
      for (std::size_t j = 0; j <= i; ++j) {
        push(a & work[j]);
        push(a | work[j]);
      }
    }
    std::sort(work.begin(), work.end(), PointSet::canonical_less);
    return DefinableAlgebra{std::move(work)};
  }

  /// The mode's negation applied to a raw set.
  PointSet negation_of(PointSet a) const {
    const int n = space_.point_count();
    switch (mode_) {
      case Mode::Classical: return a.complement(n);
      case Mode::Paraconsistent: return space_.closure(a.complement(n));
      case Mode::Paracomplete: return space_.interior(a.complement(n));
    }
    return a;
  }

  TheorySnapshot theory_at(int w, int depth, std::size_t cap) const {
    TheorySnapshot snap{w, depth, {}};
    std::vector<std::string> props;
    for (const auto& [name, set] : valuation_) props.push_back(name);
    for (const Formula& f : enumerate_formulas(props, depth, cap, mode_))
      if (satisfies(w, f)) snap.formulas_true.push_back(f);
    return snap;
  }

  /// Glutty iff some definable set has w on its boundary (paraconsistent
  /// mode), gappy dually, classical otherwise.  Discrete spaces have no
  /// boundaries, so every point classifies classical there.
  PointClass classify_point(int w, std::size_t cap = kDefaultAlgebraCap) const {
    if (mode_ == Mode::Classical) return PointClass::Classical;
    for (PointSet a : definable_algebra(cap).sets)
      if (space_.boundary(a).contains(w))
        return mode_ == Mode::Paraconsistent ? PointClass::Glutty : PointClass::Gappy;
    return PointClass::Classical;
  }

  /// The algebra members of the mode's kind: closed sets for paraconsistent
  /// models, open sets for paracomplete and classical ones (the cover
  /// definition's primary reading uses opens).
  std::vector<PointSet> definable_sets_of_kind(const DefinableAlgebra& algebra) const {
    std::vector<PointSet> out;
    for (PointSet a : algebra.sets) {
      if (mode_ == Mode::Paraconsistent && !space_.is_closed(a)) continue;
      if (mode_ != Mode::Paraconsistent && !space_.is_open(a)) continue;
      out.push_back(a);
    }
    return out;
  }

  /// A formula is connected when every cover of its extension by two
  /// non-empty definable sets of the mode's kind overlaps.
  bool is_connected_formula(const Formula& f,
                            std::size_t cap = kDefaultAlgebraCap) const {
    PointSet ext = extension(f);
    std::vector<PointSet> sets = definable_sets_of_kind(definable_algebra(cap));
    for (PointSet a : sets) {
      if (a.empty()) continue;
      for (PointSet b : sets) {
        if (b.empty()) continue;
        if ((a | b) == ext && !a.intersects(b)) return false;
      }
    }
    return true;
  }

private:
  void require_mode(Mode required, const char* symbol) const {
    if (mode_ != required)
      throw ModeMismatch(std::string("negation '") + symbol +
                         "' is not admitted in " + to_string(mode_) + " mode");
  }

  FiniteTopology space_;
  Mode mode_;
  std::map<std::string, PointSet> valuation_;
};

inline TopoModel new_model(FiniteTopology space, Mode mode,
                           std::map<std::string, PointSet> valuation) {
  return TopoModel(std::move(space), mode, std::move(valuation));
}

/// Outcome of probing a connected theory for a contradiction.
struct ConnectedTheoryVerdict {
  enum class Status { Witness, NoWitness, Vacuous };
  Status status;
  int witness_point = -1;
  // Index into the basis when the witness gluts a basis formula directly;
  // otherwise witness_set names the definable decomposition component.
  std::optional<std::size_t> basis_index;
  std::optional<PointSet> witness_set;
  std::string note;
};

/// Searches a paraconsistent model for a point x and formula phi in (or
/// decomposed from) the basis with x |= phi & ~phi.  Every non-empty
/// connected theory over a connected space with a non-trivial algebra has
/// one; the empty theory is the lone consistent case.
inline ConnectedTheoryVerdict check_connected_theory_inconsistent(
    const TopoModel& m, const std::vector<Formula>& basis,
    std::size_t cap = kDefaultAlgebraCap) {
  if (m.mode() != Mode::Paraconsistent)
    throw WrongMode("connected-theory check requires a paraconsistent model");
  for (const Formula& f : basis)
    if (!m.is_connected_formula(f, cap))
      throw PreconditionFailed("basis formula '" + f.print() + "' is not connected");

  // Direct gluts on a basis formula first.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    PointSet gluts = m.glut_points(basis[i]);
    if (!gluts.empty())
      return {ConnectedTheoryVerdict::Status::Witness, gluts.members().front(),
              i, std::nullopt, "basis formula gluts at the point"};
  }

  // Otherwise decompose: find non-empty definable closed A, B covering the
  // extension with boundary-bearing overlap (the top ~ p | ~p style split).
  DefinableAlgebra algebra = m.definable_algebra(cap);
  std::vector<PointSet> closed = m.definable_sets_of_kind(algebra);
  bool any_nonempty_basis = false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    PointSet ext = m.extension(basis[i]);
    if (ext.empty()) continue;
    any_nonempty_basis = true;
    for (PointSet a : closed) {
      if (a.empty()) continue;
      for (PointSet b : closed) {
        if (b.empty()) continue;
        if (!((a | b) == ext)) continue;
        PointSet overlap = a & b;
        PointSet bd = m.space().boundary(overlap);
        if (!bd.empty())
          return {ConnectedTheoryVerdict::Status::Witness, bd.members().front(),
                  i, overlap, "glut on a decomposition component"};
      }
    }
  }

  if (!any_nonempty_basis)
    return {ConnectedTheoryVerdict::Status::NoWitness, -1, std::nullopt,
            std::nullopt, "empty theory; consistent"};
  if (algebra.trivial())
    return {ConnectedTheoryVerdict::Status::Vacuous, -1, std::nullopt,
            std::nullopt, "trivial definable algebra"};
  return {ConnectedTheoryVerdict::Status::NoWitness, -1, std::nullopt,
          std::nullopt, "no glut witness found"};
}

/// Clause-by-clause report for the union-of-theories observation: closed
/// non-empty sets with a common point have a connected union, and when the
/// union is proper its boundary is non-empty and entirely glutty.
struct UnionTheoriesReport {
  PointSet union_set;
  bool union_connected;
  bool proper_subset;              // union != space
  bool boundary_nonempty;          // only meaningful when proper_subset
  bool boundary_all_glutty;        // only meaningful when proper_subset
  PointSet boundary;
};

inline UnionTheoriesReport check_union_theories(const TopoModel& m,
                                                const std::vector<PointSet>& sets,
                                                std::size_t cap = kDefaultAlgebraCap) {
  if (m.mode() != Mode::Paraconsistent)
    throw PreconditionFailed("union-theories check requires a paraconsistent model");
  if (sets.empty()) throw PreconditionFailed("no theory sets supplied");
  PointSet common = PointSet::full_set(m.point_count());
  PointSet unioned;
  for (PointSet s : sets) {
    if (s.empty()) throw PreconditionFailed("theory set " + s.to_string() + " is empty");
    if (!m.space().is_closed(s))
      throw PreconditionFailed("theory set " + s.to_string() + " is not closed");
    common = common & s;
    unioned = unioned | s;
  }
  if (common.empty()) throw PreconditionFailed("theory sets have empty intersection");

  UnionTheoriesReport report{};
  report.union_set = unioned;
  report.union_connected = m.space().subspace(unioned).topology.is_connected();
  report.proper_subset = !(unioned == PointSet::full_set(m.point_count()));
  report.boundary = m.space().boundary(unioned);
  report.boundary_nonempty = !report.boundary.empty();
  report.boundary_all_glutty = true;
  if (report.proper_subset)
    for (int w : report.boundary.members())
      if (m.classify_point(w, cap) != PointClass::Glutty)
        report.boundary_all_glutty = false;
  return report;
}

}  // namespace paratop
