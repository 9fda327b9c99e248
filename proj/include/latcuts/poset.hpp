#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latcuts/errors.hpp"

namespace latcuts {

// Finite posets over a carrier of named elements, stored as the full
// order relation. Carriers are immutable once built; all derived data
// (closure, covers) is computed eagerly at construction time, so a
// Poset that exists is always valid. Sizes are desk scale by design:
// construction refuses carriers above a configurable cap that guards
// the quadratic relation table and the cubic scans over it.

inline constexpr std::size_t kDefaultCarrierCap = 64;

class Poset {
 public:
  // Reflexive-transitive closure of a Hasse diagram. Each cover pair
  // (a, b) means a is covered by b. Throws duplicate_element,
  // unknown_element, cyclic_covers, carrier_too_large.
  static Poset from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers,
      std::size_t carrier_cap = kDefaultCarrierCap);

  // Builds from a full relation table (row-major, leq[a*n+b] meaning
  // a <= b). The relation must already be reflexive, antisymmetric and
  // transitive; violations throw invalid_argument.
  static Poset from_relation(std::vector<std::string> elements,
                             std::vector<bool> leq,
                             std::size_t carrier_cap = kDefaultCarrierCap);

  std::size_t size() const { return elements_.size(); }
  const std::string& name(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<int> index_of(std::string_view name) const;

  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }

  // Same carrier, transposed order.
  Poset dual() const;

  // Sub-poset induced by the given carrier indices, which must be
  // strictly ascending. Element names are kept.
  Poset restricted(std::span<const int> members) const;

  // Hasse diagram of the relation, pairs (lower, upper) in ascending
  // lexicographic order.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Greatest lower / least upper bound of a pair computed directly from
  // the relation; absent when the poset has none.
  std::optional<int> greatest_lower_bound(int a, int b) const;
  std::optional<int> least_upper_bound(int a, int b) const;

  // Index of the global minimum / maximum, if one exists.
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  bool operator==(const Poset& other) const = default;

 private:
  Poset(std::vector<std::string> elements, std::vector<bool> leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {}

  std::vector<std::string> elements_;
  std::vector<bool> leq_;  // row-major |P| x |P|
};

// A verified structure-preserving map between posets. The factory
// functions check the invariant for the requested kind and throw
// internal_invariant when it does not hold, so an OrderMap that exists
// is always valid.
//
//   isomorphism     bijective with a <= b iff map(a) <= map(b)
//   automorphism    isomorphism with source == target
//   iota_embedding  name-identical inclusion of a sub-poset into a host
//                   whose image contains the host top and is closed
//                   under host meets (all infima are preserved)
struct OrderMap {
  enum class Kind { isomorphism, automorphism, iota_embedding };

  Poset source;
  Poset target;
  std::vector<int> map;  // source index -> target index
  Kind kind = Kind::isomorphism;

  static OrderMap isomorphism(Poset source, Poset target, std::vector<int> map);
  static OrderMap automorphism(Poset poset, std::vector<int> map);
  static OrderMap iota_embedding(Poset sub, Poset host, std::vector<int> map);

  int operator()(int source_index) const {
    return map[static_cast<std::size_t>(source_index)];
  }

  // Re-runs the invariant check for this map's kind.
  bool verifies() const;
};

// One order isomorphism from p onto q if any exists. Candidates are
// tried in carrier order on both sides, so the result is deterministic
// for a fixed input ordering. Absence is a value, not an error.
std::optional<OrderMap> find_isomorphism(const Poset& p, const Poset& q);

// The full order-automorphism group of p, identity first, remainder
// sorted by image vector.
std::vector<OrderMap> automorphisms(const Poset& p);

}  // namespace latcuts
