#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace paratop {

/// Hard cap on the number of points in a space; exhaustive checks are
/// exponential in this.
inline constexpr int kMaxPoints = 16;

/// A subset of {0,...,n-1}, bit-indexed.  The owning space's point count is
/// not stored here; operations that need it (complement) take it explicitly.
class PointSet {
public:
  constexpr PointSet() : bits_(0) {}
  constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}
  PointSet(std::initializer_list<int> members) : bits_(0) {
    for (int m : members) bits_ |= (1u << m);
  }

  static constexpr PointSet empty_set() { return PointSet(0); }
  static constexpr PointSet full_set(int n) {
    return PointSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr PointSet singleton(int p) { return PointSet(1u << p); }

  static PointSet from_members(const std::vector<int>& members) {
    std::uint32_t b = 0;
    for (int m : members) b |= (1u << m);
    return PointSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }

  constexpr bool subset_of(PointSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool within_bounds(int n) const {
    return subset_of(full_set(n));
  }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet complement(int n) const {
    return PointSet(~bits_ & full_set(n).bits());
  }
  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr bool operator==(const PointSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// "{0, 2}" style rendering, members ascending.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int m : members()) {
      if (!first) s += ",";
      s += std::to_string(m);
      first = false;
    }
    return s + "}";
  }

  /// Cardinality first, then lexicographic on the ascending member sequence.
  /// This is the canonical order used when printing open-set families.
  static bool canonical_less(PointSet a, PointSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ma = a.members(), mb = b.members();
    return ma < mb;
  }

private:
  std::uint32_t bits_;
};

}  // namespace paratop
