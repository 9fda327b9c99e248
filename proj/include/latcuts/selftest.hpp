#pragma once

#include <cstdint>
#include <random>

#include "latcuts/represent.hpp"

namespace latcuts {

// Randomized self-verification: generate (lattice, fuzzy set) pairs,
// take the fuzzy set's cut family as the target, and check that the
// counting machinery and the exhaustive scan tell the same story.
//
// Deriving the family from a generated fuzzy set keeps every instance
// representable and the orbit structure nontrivial; raw random
// families are almost never cut families of anything.

struct RandomInstance {
  Lattice lattice;
  FuzzySet mu;
  SetFamily family;  // mu's cut family
};

// A random lattice with 2..max_size elements: a random bounded poset is
// drawn until it validates, then the meet closure of a random subset of
// its carrier is taken as the result (a meet-closed subset with top is
// itself a complete lattice).
Lattice random_lattice(std::mt19937_64& rng, int max_size);

// A random lattice plus a uniform random fuzzy set over a domain of
// 1..max_domain elements, together with its cut family.
RandomInstance random_instance(std::mt19937_64& rng, int max_lattice,
                               int max_domain);

struct SelftestOptions {
  int instances = 100;
  int max_lattice = 6;
  int max_domain = 3;
  std::uint64_t seed = 1;
};

struct SelftestResult {
  int instances = 0;
  int passed = 0;
  // Per-check mismatch counts across all instances.
  int set_mismatches = 0;        // enumerated list != exhaustive scan
  int count_mismatches = 0;      // |N| != |S| * |OI|
  int existence_mismatches = 0;  // scan nonempty <-> sublattices exist & closed
  int uniqueness_mismatches = 0; // analyze().unique <-> scan count == 1
  std::vector<std::string> failures;  // one preformatted line per failed instance

  bool all_passed() const { return passed == instances; }
};

SelftestResult run_selftest(const SelftestOptions& options);

}  // namespace latcuts
