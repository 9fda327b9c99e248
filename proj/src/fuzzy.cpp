#include "latcuts/fuzzy.hpp"

#include <algorithm>
#include <unordered_set>

namespace latcuts {

namespace {

bool canonical_member_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SetFamily::SetFamily(std::vector<std::string> universe,
                     std::vector<std::vector<int>> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (universe_.empty()) fail(Errc::invalid_argument, "universe must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& u : universe_) {
    if (!seen.insert(u).second) {
      fail(Errc::duplicate_element, "duplicate universe element '" + u + "'");
    }
  }
  for (auto& m : members_) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (int x : m) {
      if (x < 0 || static_cast<std::size_t>(x) >= universe_.size()) {
        fail(Errc::unknown_member, "member index " + std::to_string(x) +
                                       " outside the universe");
      }
    }
  }
  std::sort(members_.begin(), members_.end(), canonical_member_less);
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i] == members_[i - 1]) {
      fail(Errc::duplicate_set, "duplicate set " + member_name(static_cast<int>(i)));
    }
  }
}

SetFamily SetFamily::from_names(
    std::vector<std::string> universe,
    const std::vector<std::vector<std::string>>& members) {
  std::vector<std::vector<int>> indexed;
  indexed.reserve(members.size());
  for (const auto& m : members) {
    std::vector<int> set;
    set.reserve(m.size());
    for (const auto& name : m) {
      auto it = std::find(universe.begin(), universe.end(), name);
      if (it == universe.end()) {
        fail(Errc::unknown_member, "member '" + name + "' outside the universe");
      }
      set.push_back(static_cast<int>(it - universe.begin()));
    }
    indexed.push_back(std::move(set));
  }
  return SetFamily(std::move(universe), std::move(indexed));
}

std::optional<int> SetFamily::index_of_member(const std::vector<int>& set) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), set,
                             canonical_member_less);
  if (it == members_.end() || *it != set) return std::nullopt;
  return static_cast<int>(it - members_.begin());
}

bool SetFamily::contains_universe() const {
  std::vector<int> all(universe_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return index_of_member(all).has_value();
}

std::string SetFamily::member_name(int i) const {
  std::string out = "{";
  const auto& m = members_[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k > 0) out += ",";
    out += universe_[static_cast<std::size_t>(m[k])];
  }
  out += "}";
  return out;
}

FuzzySet::FuzzySet(Lattice lattice, std::vector<std::string> domain,
                   std::vector<int> values)
    : lattice_(std::move(lattice)), domain_(std::move(domain)),
      values_(std::move(values)) {
  if (domain_.empty()) fail(Errc::invalid_argument, "domain must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& x : domain_) {
    if (!seen.insert(x).second) {
      fail(Errc::duplicate_element, "duplicate domain element '" + x + "'");
    }
  }
  if (values_.size() != domain_.size()) {
    fail(Errc::invalid_argument, "value list does not cover the domain");
  }
  for (int v : values_) {
    if (v < 0 || static_cast<std::size_t>(v) >= lattice_.size()) {
      fail(Errc::unknown_element, "grade index " + std::to_string(v) +
                                      " outside the lattice carrier");
    }
  }
}

std::vector<int> FuzzySet::cut(int p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= lattice_.size()) {
    fail(Errc::unknown_element, "cut level index out of range");
  }
  std::vector<int> out;
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (lattice_.leq(p, values_[x])) out.push_back(static_cast<int>(x));
  }
  return out;
}

SetFamily FuzzySet::cut_family() const {
  std::vector<std::vector<int>> cuts;
  cuts.reserve(lattice_.size());
  for (int p = 0; p < static_cast<int>(lattice_.size()); ++p) {
    cuts.push_back(cut(p));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return SetFamily(domain_, std::move(cuts));
}

MeetClosedSet FuzzySet::image_meet_closure() const {
  return lattice_.meet_closure(values_);
}

Poset family_dual_poset(const SetFamily& f) {
  const int n = static_cast<int>(f.member_count());
  if (n == 0) fail(Errc::invalid_argument, "family must be nonempty");
  std::vector<std::string> names;
  names.reserve(f.member_count());
  for (int i = 0; i < n; ++i) names.push_back(f.member_name(i));
  std::vector<bool> leq(f.member_count() * f.member_count(), false);
  for (int a = 0; a < n; ++a) {
    const auto& sa = f.members()[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      const auto& sb = f.members()[static_cast<std::size_t>(b)];
      leq[static_cast<std::size_t>(a) * f.member_count() +
          static_cast<std::size_t>(b)] =
          std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
    }
  }
  return Poset::from_relation(std::move(names), std::move(leq),
                              std::max<std::size_t>(f.member_count(),
                                                    kDefaultCarrierCap));
}

OrderMap cut_order_isomorphism(const FuzzySet& mu) {
  const SetFamily family = mu.cut_family();
  const MeetClosedSet image = mu.image_meet_closure();
  const Lattice& l = mu.lattice();

  Poset source = family_dual_poset(family);
  Poset target = l.poset().restricted(image.members);

  std::vector<int> map(family.member_count(), -1);
  for (std::size_t i = 0; i < family.member_count(); ++i) {
    std::vector<int> grades;
    for (int x : family.members()[i]) grades.push_back(mu.value(x));
    const int m = l.meet_of(grades);
    auto pos = std::lower_bound(image.members.begin(), image.members.end(), m);
    if (pos == image.members.end() || *pos != m) {
      fail(Errc::internal_invariant, "cut meet escaped the image meet closure");
    }
    map[i] = static_cast<int>(pos - image.members.begin());
  }
  return OrderMap::isomorphism(std::move(source), std::move(target), std::move(map));
}

Factorization canonical_factorization(const FuzzySet& mu) {
  const MeetClosedSet image = mu.image_meet_closure();
  Lattice sub = mu.lattice().sublattice(image.members);

  std::vector<int> values(mu.values().size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    auto pos = std::lower_bound(image.members.begin(), image.members.end(),
                                mu.value(static_cast<int>(x)));
    values[x] = static_cast<int>(pos - image.members.begin());
  }
  FuzzySet factor(std::move(sub), mu.domain(), std::move(values));

  std::vector<int> inclusion(image.members.begin(), image.members.end());
  OrderMap embedding = OrderMap::iota_embedding(factor.lattice().poset(),
                                                mu.lattice().poset(),
                                                std::move(inclusion));

  // Contracts: the composition reproduces mu, cut families agree, and
  // the factor fills its whole codomain.
  for (std::size_t x = 0; x < mu.values().size(); ++x) {
    if (embedding(factor.value(static_cast<int>(x))) != mu.value(static_cast<int>(x))) {
      fail(Errc::internal_invariant, "factorization does not compose back to the input");
    }
  }
  if (!(factor.cut_family() == mu.cut_family())) {
    fail(Errc::internal_invariant, "factorization changed the cut family");
  }
  const MeetClosedSet factor_image = factor.image_meet_closure();
  if (factor_image.members.size() != factor.lattice().size()) {
    fail(Errc::internal_invariant, "factor does not generate its whole codomain");
  }
  return Factorization{std::move(factor), std::move(embedding)};
}

}  // namespace latcuts
