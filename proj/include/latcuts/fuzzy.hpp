#pragma once

#include <string>
#include <vector>

#include "latcuts/lattice.hpp"

namespace latcuts {

// A finite family of distinct subsets of a named universe. Members are
// stored canonically: inside each member, ascending universe indices;
// across members, ascending size then lexicographic. Construction
// canonicalizes and validates, so equality of families is plain
// equality of the stored data.
class SetFamily {
 public:
  SetFamily(std::vector<std::string> universe,
            std::vector<std::vector<int>> members);

  static SetFamily from_names(
      std::vector<std::string> universe,
      const std::vector<std::vector<std::string>>& members);

  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_.size(); }
  const std::vector<std::vector<int>>& members() const { return members_; }
  std::size_t member_count() const { return members_.size(); }

  // Position of the given sorted index set among the members, if present.
  std::optional<int> index_of_member(const std::vector<int>& set) const;
  bool contains_universe() const;

  // Brace rendering of one member, e.g. "{a,b}" or "{}".
  std::string member_name(int i) const;

  bool operator==(const SetFamily&) const = default;

 private:
  std::vector<std::string> universe_;
  std::vector<std::vector<int>> members_;
};

// A total map from a named finite domain into a lattice carrier.
class FuzzySet {
 public:
  FuzzySet(Lattice lattice, std::vector<std::string> domain,
           std::vector<int> values);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::vector<int>& values() const { return values_; }
  int value(int x) const { return values_[static_cast<std::size_t>(x)]; }

  // Domain elements whose grade is at least p, ascending domain indices.
  std::vector<int> cut(int p) const;

  // The deduplicated family of all cuts; always contains the whole
  // domain (every grade is at least the bottom).
  SetFamily cut_family() const;

  // Meet closure of the image: every meet of a subset of the grades,
  // including the empty meet (the top). A complete lattice inside the
  // host.
  MeetClosedSet image_meet_closure() const;

  bool operator==(const FuzzySet&) const = default;

 private:
  Lattice lattice_;
  std::vector<std::string> domain_;
  std::vector<int> values_;
};

// The family ordered by reverse inclusion: A <= B iff A contains B.
// Elements take the members' brace renderings as names, in the family's
// canonical member order, so the whole universe is the bottom and the
// intersection of all members (when present) is the top.
Poset family_dual_poset(const SetFamily& f);

// The order isomorphism from the cut family under reverse inclusion
// onto the image meet closure under the lattice order: each cut goes to
// the meet of the grades attained on it (the empty cut to the top).
// Bijectivity and two-sided order preservation are verified before
// returning; a failure throws internal_invariant and signals a bug.
OrderMap cut_order_isomorphism(const FuzzySet& mu);

// mu written as its image meet closure's own fuzzy set followed by the
// inclusion of that closure into the host. factor has the same grades
// as mu, read in the sublattice; embedding maps them back. Composition
// reproduces mu pointwise, the cut families agree, and factor's image
// meet closure is the whole sublattice; all three contracts are
// verified before returning.
struct Factorization {
  FuzzySet factor;
  OrderMap embedding;
};

Factorization canonical_factorization(const FuzzySet& mu);

}  // namespace latcuts
