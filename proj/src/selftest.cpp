#include "latcuts/selftest.hpp"

#include <algorithm>

namespace latcuts {

namespace {

// Modulo reduction keeps the stream reproducible; the bias is
// irrelevant at these ranges.
int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

Poset random_bounded_poset(std::mt19937_64& rng, int size) {
  const std::size_t n = static_cast<std::size_t>(size);
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  // Upward edges only, so antisymmetry holds by construction.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pick(rng, 5) < 2) leq[i * n + j] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    leq[0 * n + i] = true;          // first element is the bottom
    leq[i * n + (n - 1)] = true;    // last element is the top
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = true;
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return Poset::from_relation(std::move(names), std::move(leq));
}

}  // namespace

Lattice random_lattice(std::mt19937_64& rng, int max_size) {
  if (max_size < 2) fail(Errc::invalid_argument, "max lattice size must be at least 2");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int size = 2 + pick(rng, max_size - 1);
    auto host = Lattice::try_validate(random_bounded_poset(rng, size));
    if (!host) continue;
    std::vector<int> seed;
    for (int i = 0; i < static_cast<int>(host->size()); ++i) {
      if (pick(rng, 2) == 0) seed.push_back(i);
    }
    const MeetClosedSet closed = host->meet_closure(seed);
    if (closed.members.size() < 2) continue;
    return host->sublattice(closed.members);
  }
  fail(Errc::internal_invariant, "random lattice generation did not converge");
}

RandomInstance random_instance(std::mt19937_64& rng, int max_lattice,
                               int max_domain) {
  if (max_domain < 1) fail(Errc::invalid_argument, "max domain size must be at least 1");
  Lattice lattice = random_lattice(rng, max_lattice);
  const int domain_size = 1 + pick(rng, max_domain);
  std::vector<std::string> domain;
  domain.reserve(static_cast<std::size_t>(domain_size));
  for (int i = 0; i < domain_size; ++i) domain.push_back("x" + std::to_string(i));
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(domain_size));
  for (int i = 0; i < domain_size; ++i) {
    values.push_back(pick(rng, static_cast<int>(lattice.size())));
  }
  FuzzySet mu(lattice, std::move(domain), std::move(values));
  SetFamily family = mu.cut_family();
  return RandomInstance{std::move(lattice), std::move(mu), std::move(family)};
}

SelftestResult run_selftest(const SelftestOptions& options) {
  SelftestResult result;
  result.instances = options.instances;
  std::mt19937_64 rng(options.seed);

  for (int i = 0; i < options.instances; ++i) {
    const RandomInstance inst =
        random_instance(rng, options.max_lattice, options.max_domain);
    const Lattice& l = inst.lattice;
    const SetFamily& f = inst.family;

    const bool closed = is_closure_system(f);
    std::vector<MeetClosedSet> sublattices;
    std::vector<FuzzySet> enumerated;
    if (closed) {
      sublattices = representing_sublattices(l, f);
      enumerated = representations(l, f);
    }
    const std::size_t oi = automorphisms(family_dual_poset(f)).size();
    const std::vector<FuzzySet> scanned = brute_force_representations(l, f);

    const bool sets_ok =
        enumerated.size() == scanned.size() &&
        std::equal(enumerated.begin(), enumerated.end(), scanned.begin(),
                   [](const FuzzySet& a, const FuzzySet& b) {
                     return a.values() == b.values();
                   });
    const bool count_ok = enumerated.size() == sublattices.size() * oi;
    const bool existence_ok =
        !scanned.empty() == (!sublattices.empty() && closed);
    const bool uniqueness_ok =
        analyze(l, f, false).unique == (scanned.size() == 1);

    if (!sets_ok) ++result.set_mismatches;
    if (!count_ok) ++result.count_mismatches;
    if (!existence_ok) ++result.existence_mismatches;
    if (!uniqueness_ok) ++result.uniqueness_mismatches;

    if (sets_ok && count_ok && existence_ok && uniqueness_ok) {
      ++result.passed;
    } else {
      std::string line = "instance " + std::to_string(i) + ":";
      if (!sets_ok) {
        line += " set mismatch (enumerated=" + std::to_string(enumerated.size()) +
                " scanned=" + std::to_string(scanned.size()) + ")";
      }
      if (!count_ok) {
        line += " count mismatch (|N|=" + std::to_string(enumerated.size()) +
                " |S|=" + std::to_string(sublattices.size()) +
                " |OI|=" + std::to_string(oi) + ")";
      }
      if (!existence_ok) line += " existence mismatch";
      if (!uniqueness_ok) line += " uniqueness mismatch";
      result.failures.push_back(std::move(line));
    }
  }
  return result;
}

}  // namespace latcuts
