#pragma once

#include <optional>

#include "latcuts/fuzzy.hpp"

namespace latcuts {

// Machinery for deciding, counting and enumerating the fuzzy sets on a
// finite domain whose cut family equals a prescribed family of subsets.
//
// The count factors: every qualifying fuzzy set factors through a
// meet-closed sublattice order-isomorphic to the family under reverse
// inclusion, and within one such sublattice the qualifying maps form a
// single orbit of the sublattice's automorphism group. So the total is
// (number of representing sublattices) x (order automorphisms of the
// family), and both factors are computed without touching the space of
// all |L|^|X| maps. brute_force_representations scans that space anyway
// and serves as the independent check.

inline constexpr long long kDefaultOracleCap = 10'000'000;

struct RepresentationReport {
  bool family_closed = false;
  bool representable = false;
  std::vector<MeetClosedSet> sublattices;  // representing sublattices, canonical order
  std::size_t automorphism_count = 0;      // order automorphisms of the family
  std::size_t total = 0;                   // = sublattices.size() * automorphism_count
  bool unique = false;                     // total == 1
  std::optional<std::vector<FuzzySet>> witnesses;
};

// True iff the family contains its universe and is closed under
// pairwise intersections (which gives closure under all intersections
// in the finite case).
bool is_closure_system(const SetFamily& f);

// All meet-closed subsets of the carrier of size |f| whose induced
// order is isomorphic to the family under reverse inclusion. Found by
// extending partial order-embeddings of the family poset into the
// lattice, with the family's top pinned to the lattice top; images are
// deduplicated and returned ascending lexicographic. Throws
// family_not_closed when f fails is_closure_system.
std::vector<MeetClosedSet> representing_sublattices(const Lattice& l,
                                                    const SetFamily& f);

// A fuzzy set over l0 whose cut family is exactly f and whose grades
// generate all of l0: each domain element goes to the image under iso
// of the smallest family member containing it. iso must map the family
// poset onto l0's poset. Both contracts are checked on the result
// before returning; failure throws witness_verification_failed.
FuzzySet construct_witness(const Lattice& l0, const SetFamily& f,
                           const OrderMap& iso);

// All fuzzy sets over l with cut family f whose image meet closure is
// exactly the given sublattice: the orbit of one witness under the
// sublattice's automorphism group, composed with the inclusion into l.
// Ascending lexicographic by grade tuples. Throws not_in_s when l0 is
// not a representing sublattice.
std::vector<FuzzySet> representations_through(const Lattice& l,
                                              const MeetClosedSet& l0,
                                              const SetFamily& f);

// Every fuzzy set over l whose cut family equals f: the disjoint union
// of representations_through over all representing sublattices,
// ascending lexicographic by grade tuples. Throws family_not_closed.
std::vector<FuzzySet> representations(const Lattice& l, const SetFamily& f);

// Scans all |l|^|X| maps and keeps exactly those whose cut family
// equals f. Independent of the counting machinery above; used to check
// it. Throws search_space_too_large past the cap.
std::vector<FuzzySet> brute_force_representations(
    const Lattice& l, const SetFamily& f, long long cap = kDefaultOracleCap);

// Full report: closure diagnostic, representing sublattices, the two
// factors, their product, and the uniqueness verdict. Never throws; a
// family that is not a closure system yields representable=false with
// the diagnostic set. Witness enumeration only runs when asked for.
RepresentationReport analyze(const Lattice& l, const SetFamily& f,
                             bool want_witnesses);

}  // namespace latcuts
