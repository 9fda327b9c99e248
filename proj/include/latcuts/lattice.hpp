#pragma once

#include <span>
#include <vector>

#include "latcuts/poset.hpp"

namespace latcuts {

// A subset of a host lattice's carrier that contains the top and is
// closed under host meets (so its inclusion into the host preserves
// all infima and the top element, and the subset is itself a complete
// lattice). Members are ascending host carrier indices; the host is
// the Lattice the set was obtained from.
struct MeetClosedSet {
  std::vector<int> members;

  bool operator==(const MeetClosedSet&) const = default;
};

// A finite complete lattice: a validated poset together with full
// meet/join tables and its bottom and top. For finite posets, pairwise
// meets and joins suffice for completeness, so validation checks every
// pair and names a witness pair on failure.
class Lattice {
 public:
  static Lattice validate(Poset poset);                 // throws not_a_lattice
  static std::optional<Lattice> try_validate(Poset poset);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& name(int i) const { return poset_.name(i); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int meet(int a, int b) const {
    return meet_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  int join(int a, int b) const {
    return join_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Fold of the binary operation; the empty meet is the top and the
  // empty join is the bottom. Throws unknown_element on bad indices.
  int meet_of(std::span<const int> xs) const;
  int join_of(std::span<const int> xs) const;

  // Smallest superset of seed containing the top and closed under
  // meets; equals the set of meets of all subsets of seed, including
  // the empty one.
  MeetClosedSet meet_closure(std::span<const int> seed) const;

  // True iff members contains the top and the meet of every nonempty
  // subset stays inside. Pairwise closure suffices in the finite case,
  // so that is what gets checked. members must be nonempty.
  bool is_meet_closed(std::span<const int> members) const;

  // All meet-closed subsets of the carrier with exactly the given
  // number of elements, ascending lexicographic by member indices.
  // Walks subsets containing the top, pruning any partial choice whose
  // closure grows past the target size or demands an element already
  // passed over. Throws size_out_of_range.
  std::vector<MeetClosedSet> meet_closed_subsets(std::size_t count) const;

  // The induced sub-poset re-validated as a lattice of its own.
  // Succeeds on every meet-closed subset; may throw not_a_lattice for
  // arbitrary member sets.
  Lattice sublattice(std::span<const int> members) const;

  bool operator==(const Lattice& other) const { return poset_ == other.poset_; }

 private:
  Lattice(Poset poset, std::vector<int> meet, std::vector<int> join,
          int bottom, int top)
      : poset_(std::move(poset)), meet_(std::move(meet)),
        join_(std::move(join)), bottom_(bottom), top_(top) {}

  Poset poset_;
  std::vector<int> meet_;  // row-major
  std::vector<int> join_;
  int bottom_;
  int top_;
};

}  // namespace latcuts
