#include "latcuts/represent.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace latcuts {

namespace {

std::vector<int> full_universe(const SetFamily& f) {
  std::vector<int> all(f.universe_size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

bool grade_tuple_less(const FuzzySet& a, const FuzzySet& b) {
  return a.values() < b.values();
}

// Index of the family poset's top: the member contained in all others.
int family_top_index(const SetFamily& f, const Poset& family_poset) {
  const int n = static_cast<int>(family_poset.size());
  for (int i = 0; i < n; ++i) {
    bool top = true;
    for (int j = 0; j < n && top; ++j) top = family_poset.leq(j, i);
    if (top) return i;
  }
  fail(Errc::internal_invariant, "closure system has no smallest member");
}

}  // namespace

bool is_closure_system(const SetFamily& f) {
  if (!f.contains_universe()) return false;
  const auto& members = f.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(members[i].begin(), members[i].end(),
                            members[j].begin(), members[j].end(),
                            std::back_inserter(inter));
      if (!f.index_of_member(inter)) return false;
    }
  }
  return true;
}

std::vector<MeetClosedSet> representing_sublattices(const Lattice& l,
                                                    const SetFamily& f) {
  if (!is_closure_system(f)) {
    fail(Errc::family_not_closed,
         "family is not intersection-closed or misses its universe");
  }
  const Poset fp = family_dual_poset(f);
  const int m = static_cast<int>(fp.size());
  const int n = static_cast<int>(l.size());
  if (m > n) return {};

  const int ftop = family_top_index(f, fp);
  std::set<std::vector<int>> images;
  std::vector<int> map(fp.size(), -1);
  std::vector<bool> used(l.size(), false);

  std::function<void(int)> go = [&](int next) {
    if (next == m) {
      std::vector<int> image(map);
      std::sort(image.begin(), image.end());
      if (l.is_meet_closed(image)) images.insert(std::move(image));
      return;
    }
    const int first = next == ftop ? l.top() : 0;
    const int last = next == ftop ? l.top() : n - 1;
    for (int cand = first; cand <= last; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      bool compatible = true;
      for (int prev = 0; prev < next && compatible; ++prev) {
        const int pm = map[static_cast<std::size_t>(prev)];
        compatible = fp.leq(next, prev) == l.leq(cand, pm) &&
                     fp.leq(prev, next) == l.leq(pm, cand);
      }
      if (!compatible) continue;
      map[static_cast<std::size_t>(next)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      go(next + 1);
      used[static_cast<std::size_t>(cand)] = false;
    }
  };
  go(0);

  std::vector<MeetClosedSet> out;
  out.reserve(images.size());
  for (const auto& image : images) out.push_back(MeetClosedSet{image});
  return out;
}

FuzzySet construct_witness(const Lattice& l0, const SetFamily& f,
                           const OrderMap& iso) {
  if (!is_closure_system(f)) {
    fail(Errc::family_not_closed,
         "family is not intersection-closed or misses its universe");
  }
  const int x_count = static_cast<int>(f.universe_size());
  std::vector<int> values(f.universe_size(), -1);
  for (int x = 0; x < x_count; ++x) {
    // Smallest member containing x: the intersection of all of them.
    std::vector<int> smallest = full_universe(f);
    for (const auto& member : f.members()) {
      if (!std::binary_search(member.begin(), member.end(), x)) continue;
      std::vector<int> inter;
      std::set_intersection(smallest.begin(), smallest.end(), member.begin(),
                            member.end(), std::back_inserter(inter));
      smallest = std::move(inter);
    }
    auto idx = f.index_of_member(smallest);
    if (!idx) {
      fail(Errc::witness_verification_failed,
           "no smallest family member contains '" +
               f.universe()[static_cast<std::size_t>(x)] + "'");
    }
    values[static_cast<std::size_t>(x)] = iso(*idx);
  }

  FuzzySet witness(l0, f.universe(), std::move(values));
  if (!(witness.cut_family() == f)) {
    fail(Errc::witness_verification_failed, "witness cut family differs from the target family");
  }
  if (witness.image_meet_closure().members.size() != l0.size()) {
    fail(Errc::witness_verification_failed,
         "witness grades do not generate the whole sublattice");
  }
  return witness;
}

std::vector<FuzzySet> representations_through(const Lattice& l,
                                              const MeetClosedSet& l0,
                                              const SetFamily& f) {
  if (!is_closure_system(f)) {
    fail(Errc::family_not_closed,
         "family is not intersection-closed or misses its universe");
  }
  if (!l.is_meet_closed(l0.members)) {
    fail(Errc::not_in_s, "subset is not meet-closed in the host lattice");
  }
  const Poset fp = family_dual_poset(f);
  const Poset sub_poset = l.poset().restricted(l0.members);
  auto iso = find_isomorphism(fp, sub_poset);
  if (!iso) {
    fail(Errc::not_in_s, "subset is not order-isomorphic to the family");
  }
  const Lattice sub = l.sublattice(l0.members);
  const FuzzySet witness = construct_witness(sub, f, *iso);

  // One fixed witness suffices: any other choice differs by an
  // automorphism of the sublattice, so the orbit is the same.
  std::vector<FuzzySet> out;
  for (const OrderMap& eta : automorphisms(sub.poset())) {
    std::vector<int> values(witness.values().size());
    for (std::size_t x = 0; x < values.size(); ++x) {
      values[x] = l0.members[static_cast<std::size_t>(
          eta(witness.value(static_cast<int>(x))))];
    }
    out.emplace_back(l, f.universe(), std::move(values));
  }
  std::sort(out.begin(), out.end(), grade_tuple_less);
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].values() == out[i - 1].values()) {
      fail(Errc::internal_invariant, "automorphism orbit produced duplicate maps");
    }
  }
  return out;
}

std::vector<FuzzySet> representations(const Lattice& l, const SetFamily& f) {
  std::vector<FuzzySet> out;
  for (const MeetClosedSet& l0 : representing_sublattices(l, f)) {
    auto orbit = representations_through(l, l0, f);
    out.insert(out.end(), std::make_move_iterator(orbit.begin()),
               std::make_move_iterator(orbit.end()));
  }
  std::sort(out.begin(), out.end(), grade_tuple_less);
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].values() == out[i - 1].values()) {
      fail(Errc::internal_invariant,
           "representations through distinct sublattices overlap");
    }
  }
  return out;
}

std::vector<FuzzySet> brute_force_representations(const Lattice& l,
                                                  const SetFamily& f,
                                                  long long cap) {
  const std::size_t n = l.size();
  const std::size_t x_count = f.universe_size();
  long long space = 1;
  for (std::size_t i = 0; i < x_count; ++i) {
    space *= static_cast<long long>(n);
    if (space > cap) {
      fail(Errc::search_space_too_large,
           "scan of " + std::to_string(n) + "^" + std::to_string(x_count) +
               " maps exceeds the cap of " + std::to_string(cap));
    }
  }

  // Plain odometer over grade tuples; candidates arrive in ascending
  // lexicographic order, which is already the canonical order.
  std::vector<FuzzySet> out;
  std::vector<int> values(x_count, 0);
  for (;;) {
    std::vector<std::vector<int>> cuts;
    for (int p = 0; p < static_cast<int>(n); ++p) {
      std::vector<int> cut;
      for (std::size_t x = 0; x < x_count; ++x) {
        if (l.leq(p, values[x])) cut.push_back(static_cast<int>(x));
      }
      cuts.push_back(std::move(cut));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    if (cuts == f.members()) {
      out.emplace_back(l, f.universe(), values);
    }
    std::size_t pos = x_count;
    while (pos > 0) {
      --pos;
      if (++values[pos] < static_cast<int>(n)) break;
      values[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

RepresentationReport analyze(const Lattice& l, const SetFamily& f,
                             bool want_witnesses) {
  RepresentationReport report;
  report.family_closed = is_closure_system(f);
  if (f.member_count() > 0) {
    report.automorphism_count = automorphisms(family_dual_poset(f)).size();
  }
  if (!report.family_closed) {
    // No fuzzy set can realize the family; cut families are always
    // closure systems.
    if (want_witnesses) report.witnesses.emplace();
    return report;
  }
  report.sublattices = representing_sublattices(l, f);
  report.total = report.sublattices.size() * report.automorphism_count;
  report.representable = report.total >= 1;
  report.unique = report.total == 1;
  if (want_witnesses) report.witnesses = representations(l, f);
  return report;
}

}  // namespace latcuts
