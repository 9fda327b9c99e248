#include "latcuts/lattice.hpp"

#include <algorithm>
#include <functional>

namespace latcuts {

namespace {

void check_indices(const Lattice& l, std::span<const int> xs) {
  for (int x : xs) {
    if (x < 0 || static_cast<std::size_t>(x) >= l.size()) {
      fail(Errc::unknown_element, "carrier index " + std::to_string(x) + " out of range");
    }
  }
}

}  // namespace

Lattice Lattice::validate(Poset poset) {
  const int n = static_cast<int>(poset.size());
  std::vector<int> meet(poset.size() * poset.size());
  std::vector<int> join(poset.size() * poset.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      auto glb = poset.greatest_lower_bound(a, b);
      if (!glb) {
        fail(Errc::not_a_lattice, "no greatest lower bound for ('" + poset.name(a) +
                                      "', '" + poset.name(b) + "')");
      }
      auto lub = poset.least_upper_bound(a, b);
      if (!lub) {
        fail(Errc::not_a_lattice, "no least upper bound for ('" + poset.name(a) +
                                      "', '" + poset.name(b) + "')");
      }
      const auto at = [n](int i, int j) {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j);
      };
      meet[at(a, b)] = meet[at(b, a)] = *glb;
      join[at(a, b)] = join[at(b, a)] = *lub;
    }
  }
  // All pairs have bounds, so folding reaches the global extremes.
  int bottom = 0;
  int top = 0;
  for (int i = 1; i < n; ++i) {
    bottom = meet[static_cast<std::size_t>(bottom) * poset.size() + static_cast<std::size_t>(i)];
    top = join[static_cast<std::size_t>(top) * poset.size() + static_cast<std::size_t>(i)];
  }
  return Lattice(std::move(poset), std::move(meet), std::move(join), bottom, top);
}

std::optional<Lattice> Lattice::try_validate(Poset poset) {
  const int n = static_cast<int>(poset.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!poset.greatest_lower_bound(a, b) || !poset.least_upper_bound(a, b)) {
        return std::nullopt;
      }
    }
  }
  return validate(std::move(poset));
}

int Lattice::meet_of(std::span<const int> xs) const {
  check_indices(*this, xs);
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

int Lattice::join_of(std::span<const int> xs) const {
  check_indices(*this, xs);
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

MeetClosedSet Lattice::meet_closure(std::span<const int> seed) const {
  check_indices(*this, seed);
  std::vector<bool> in(size(), false);
  in[static_cast<std::size_t>(top_)] = true;
  std::vector<int> work;
  work.push_back(top_);
  for (int x : seed) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = true;
      work.push_back(x);
    }
  }
  // Saturate under pairwise meets.
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const int m = meet(work[i], work[j]);
      if (!in[static_cast<std::size_t>(m)]) {
        in[static_cast<std::size_t>(m)] = true;
        work.push_back(m);
      }
    }
  }
  MeetClosedSet out;
  for (int i = 0; i < static_cast<int>(size()); ++i) {
    if (in[static_cast<std::size_t>(i)]) out.members.push_back(i);
  }
  return out;
}

bool Lattice::is_meet_closed(std::span<const int> members) const {
  if (members.empty()) fail(Errc::invalid_argument, "member set must be nonempty");
  check_indices(*this, members);
  std::vector<bool> in(size(), false);
  for (int x : members) in[static_cast<std::size_t>(x)] = true;
  if (!in[static_cast<std::size_t>(top_)]) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!in[static_cast<std::size_t>(meet(members[i], members[j]))]) return false;
    }
  }
  return true;
}

std::vector<MeetClosedSet> Lattice::meet_closed_subsets(std::size_t count) const {
  if (count < 1 || count > size()) {
    fail(Errc::size_out_of_range, "subset size " + std::to_string(count) +
                                      " outside [1, " + std::to_string(size()) + "]");
  }
  const int n = static_cast<int>(size());
  std::vector<MeetClosedSet> out;
  std::vector<int> chosen{top_};

  // chosen is always the meet closure of the decisions taken so far, so
  // each valid subset is produced along exactly one decision path.
  std::function<void(int)> go = [&](int idx) {
    if (chosen.size() > count) return;
    if (idx == n) {
      if (chosen.size() == count) out.push_back(MeetClosedSet{chosen});
      return;
    }
    if (std::binary_search(chosen.begin(), chosen.end(), idx)) {
      go(idx + 1);
      return;
    }
    go(idx + 1);  // exclude idx

    std::vector<int> with = chosen;
    with.insert(std::lower_bound(with.begin(), with.end(), idx), idx);
    std::vector<int> closure = meet_closure(with).members;
    if (closure.size() > count) return;
    for (int e : closure) {
      // A closure element below idx that was passed over can never be
      // added again on this path.
      if (e < idx && !std::binary_search(chosen.begin(), chosen.end(), e)) return;
    }
    std::vector<int> saved = std::move(chosen);
    chosen = std::move(closure);
    go(idx + 1);
    chosen = std::move(saved);
  };
  go(0);

  std::sort(out.begin(), out.end(),
            [](const MeetClosedSet& a, const MeetClosedSet& b) {
              return a.members < b.members;
            });
  return out;
}

Lattice Lattice::sublattice(std::span<const int> members) const {
  return validate(poset_.restricted(members));
}

}  // namespace latcuts
