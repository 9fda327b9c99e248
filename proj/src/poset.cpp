#include "latcuts/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace latcuts {

namespace {

void check_carrier(const std::vector<std::string>& elements, std::size_t cap) {
  if (elements.empty()) {
    fail(Errc::invalid_argument, "carrier must be nonempty");
  }
  if (elements.size() > cap) {
    fail(Errc::carrier_too_large,
         "carrier has " + std::to_string(elements.size()) +
             " elements, cap is " + std::to_string(cap));
  }
  std::unordered_set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) {
      fail(Errc::duplicate_element, "duplicate element '" + e + "'");
    }
  }
}

void transitive_close(std::vector<bool>& rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j]) rel[i * n + j] = true;
      }
    }
  }
}

}  // namespace

Poset Poset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers,
    std::size_t carrier_cap) {
  check_carrier(elements, carrier_cap);
  const std::size_t n = elements.size();

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);

  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) fail(Errc::unknown_element, "unknown element '" + lo + "' in cover");
    if (b == index.end()) fail(Errc::unknown_element, "unknown element '" + hi + "' in cover");
    leq[a->second * n + b->second] = true;
  }

  transitive_close(leq, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        fail(Errc::cyclic_covers, "covers create a cycle through '" + elements[i] +
                                      "' and '" + elements[j] + "'");
      }
    }
  }
  return Poset(std::move(elements), std::move(leq));
}

Poset Poset::from_relation(std::vector<std::string> elements,
                           std::vector<bool> leq, std::size_t carrier_cap) {
  check_carrier(elements, carrier_cap);
  const std::size_t n = elements.size();
  if (leq.size() != n * n) {
    fail(Errc::invalid_argument, "relation table has wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i * n + i]) {
      fail(Errc::invalid_argument, "relation is not reflexive at '" + elements[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i]) {
        fail(Errc::invalid_argument, "relation is not antisymmetric on ('" +
                                         elements[i] + "', '" + elements[j] + "')");
      }
      if (!leq[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[j * n + k] && !leq[i * n + k]) {
          fail(Errc::invalid_argument, "relation is not transitive through '" +
                                           elements[j] + "'");
        }
      }
    }
  }
  return Poset(std::move(elements), std::move(leq));
}

std::optional<int> Poset::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

Poset Poset::dual() const {
  const std::size_t n = size();
  std::vector<bool> transposed(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      transposed[i * n + j] = leq_[j * n + i];
    }
  }
  return Poset(elements_, std::move(transposed));
}

Poset Poset::restricted(std::span<const int> members) const {
  const std::size_t m = members.size();
  if (m == 0) fail(Errc::invalid_argument, "sub-poset carrier must be nonempty");
  for (std::size_t i = 0; i < m; ++i) {
    if (members[i] < 0 || static_cast<std::size_t>(members[i]) >= size()) {
      fail(Errc::unknown_element, "sub-poset member index out of range");
    }
    if (i > 0 && members[i - 1] >= members[i]) {
      fail(Errc::invalid_argument, "sub-poset members must be strictly ascending");
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (int idx : members) names.push_back(name(idx));
  std::vector<bool> sub(m * m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      sub[i * m + j] = leq(members[i], members[j]);
    }
  }
  return Poset(std::move(names), std::move(sub));
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  const int n = static_cast<int>(size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<int> Poset::greatest_lower_bound(int a, int b) const {
  const int n = static_cast<int>(size());
  std::optional<int> best;
  for (int z = 0; z < n; ++z) {
    if (!leq(z, a) || !leq(z, b)) continue;
    if (!best || leq(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  // best is a maximal lower bound by the scan; confirm it dominates all.
  for (int z = 0; z < n; ++z) {
    if (leq(z, a) && leq(z, b) && !leq(z, *best)) return std::nullopt;
  }
  return best;
}

std::optional<int> Poset::least_upper_bound(int a, int b) const {
  const int n = static_cast<int>(size());
  std::optional<int> best;
  for (int z = 0; z < n; ++z) {
    if (!leq(a, z) || !leq(b, z)) continue;
    if (!best || leq(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < n; ++z) {
    if (leq(a, z) && leq(b, z) && !leq(*best, z)) return std::nullopt;
  }
  return best;
}

std::optional<int> Poset::bottom() const {
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i) {
    bool below_all = true;
    for (int j = 0; j < n && below_all; ++j) below_all = leq(i, j);
    if (below_all) return i;
  }
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i) {
    bool above_all = true;
    for (int j = 0; j < n && above_all; ++j) above_all = leq(j, i);
    if (above_all) return i;
  }
  return std::nullopt;
}

namespace {

bool is_order_bijection(const Poset& p, const Poset& q, const std::vector<int>& map) {
  const int n = static_cast<int>(p.size());
  if (q.size() != p.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (int i = 0; i < n; ++i) {
    const int im = map[static_cast<std::size_t>(i)];
    if (im < 0 || im >= n || hit[static_cast<std::size_t>(im)]) return false;
    hit[static_cast<std::size_t>(im)] = true;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p.leq(a, b) != q.leq(map[static_cast<std::size_t>(a)],
                               map[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

bool is_iota(const Poset& sub, const Poset& host, const std::vector<int>& map) {
  const int m = static_cast<int>(sub.size());
  if (map.size() != sub.size() || sub.size() > host.size()) return false;
  std::vector<bool> hit(host.size(), false);
  for (int i = 0; i < m; ++i) {
    const int im = map[static_cast<std::size_t>(i)];
    if (im < 0 || static_cast<std::size_t>(im) >= host.size()) return false;
    if (hit[static_cast<std::size_t>(im)]) return false;
    hit[static_cast<std::size_t>(im)] = true;
    if (sub.name(i) != host.name(im)) return false;
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (sub.leq(a, b) != host.leq(map[static_cast<std::size_t>(a)],
                                    map[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  // Top element and all infima preserved: the image contains the host
  // top and is closed under host meets (pairwise suffices, finite case).
  auto htop = host.top();
  if (!htop || !hit[static_cast<std::size_t>(*htop)]) return false;
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      auto glb = host.greatest_lower_bound(map[static_cast<std::size_t>(a)],
                                           map[static_cast<std::size_t>(b)]);
      if (!glb || !hit[static_cast<std::size_t>(*glb)]) return false;
    }
  }
  return true;
}

}  // namespace

OrderMap OrderMap::isomorphism(Poset source, Poset target, std::vector<int> map) {
  if (!is_order_bijection(source, target, map)) {
    fail(Errc::internal_invariant, "map is not an order isomorphism");
  }
  return OrderMap{std::move(source), std::move(target), std::move(map),
                  Kind::isomorphism};
}

OrderMap OrderMap::automorphism(Poset poset, std::vector<int> map) {
  if (!is_order_bijection(poset, poset, map)) {
    fail(Errc::internal_invariant, "map is not an order automorphism");
  }
  Poset copy = poset;
  return OrderMap{std::move(poset), std::move(copy), std::move(map),
                  Kind::automorphism};
}

OrderMap OrderMap::iota_embedding(Poset sub, Poset host, std::vector<int> map) {
  if (!is_iota(sub, host, map)) {
    fail(Errc::internal_invariant, "map is not an inclusion preserving meets and top");
  }
  return OrderMap{std::move(sub), std::move(host), std::move(map),
                  Kind::iota_embedding};
}

bool OrderMap::verifies() const {
  switch (kind) {
    case Kind::isomorphism: return is_order_bijection(source, target, map);
    case Kind::automorphism:
      return source == target && is_order_bijection(source, target, map);
    case Kind::iota_embedding: return is_iota(source, target, map);
  }
  return false;
}

namespace {

struct ElementKey {
  int down = 0;
  int up = 0;
  int covers_in = 0;
  int covers_out = 0;

  friend bool operator==(const ElementKey&, const ElementKey&) = default;
  friend bool operator<(const ElementKey& a, const ElementKey& b) {
    return std::tie(a.down, a.up, a.covers_in, a.covers_out) <
           std::tie(b.down, b.up, b.covers_in, b.covers_out);
  }
};

std::vector<ElementKey> element_keys(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<ElementKey> keys(p.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.leq(j, i)) ++keys[static_cast<std::size_t>(i)].down;
      if (p.leq(i, j)) ++keys[static_cast<std::size_t>(i)].up;
    }
  }
  for (const auto& [lo, hi] : p.cover_pairs()) {
    ++keys[static_cast<std::size_t>(lo)].covers_out;
    ++keys[static_cast<std::size_t>(hi)].covers_in;
  }
  return keys;
}

// Backtracking over candidate assignments, source elements in carrier
// order, candidates in carrier order. Pruned by the per-element
// invariant vector and two-sided order compatibility with the partial
// map. emit returns false to stop the search.
template <typename Emit>
bool search_isomorphisms(const Poset& p, const Poset& q,
                         const std::vector<ElementKey>& pk,
                         const std::vector<ElementKey>& qk,
                         std::vector<int>& map, std::vector<bool>& used,
                         int next, Emit&& emit) {
  const int n = static_cast<int>(p.size());
  if (next == n) return emit(map);
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    if (!(pk[static_cast<std::size_t>(next)] == qk[static_cast<std::size_t>(cand)])) continue;
    bool compatible = true;
    for (int prev = 0; prev < next && compatible; ++prev) {
      const int pm = map[static_cast<std::size_t>(prev)];
      compatible = p.leq(next, prev) == q.leq(cand, pm) &&
                   p.leq(prev, next) == q.leq(pm, cand);
    }
    if (!compatible) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = true;
    const bool keep_going =
        search_isomorphisms(p, q, pk, qk, map, used, next + 1, emit);
    used[static_cast<std::size_t>(cand)] = false;
    if (!keep_going) return false;
  }
  return true;
}

bool keys_compatible(std::vector<ElementKey> a, std::vector<ElementKey> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<OrderMap> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  const auto pk = element_keys(p);
  const auto qk = element_keys(q);
  if (!keys_compatible(pk, qk)) return std::nullopt;

  std::vector<int> map(p.size(), -1);
  std::vector<bool> used(p.size(), false);
  std::optional<std::vector<int>> found;
  search_isomorphisms(p, q, pk, qk, map, used, 0, [&](const std::vector<int>& m) {
    found = m;
    return false;  // stop at the first hit
  });
  if (!found) return std::nullopt;
  return OrderMap::isomorphism(p, q, std::move(*found));
}

std::vector<OrderMap> automorphisms(const Poset& p) {
  const auto keys = element_keys(p);
  std::vector<int> map(p.size(), -1);
  std::vector<bool> used(p.size(), false);
  std::vector<std::vector<int>> all;
  search_isomorphisms(p, p, keys, keys, map, used, 0,
                      [&](const std::vector<int>& m) {
                        all.push_back(m);
                        return true;
                      });
  // Lexicographic order on image vectors puts the identity first.
  std::sort(all.begin(), all.end());
  std::vector<OrderMap> out;
  out.reserve(all.size());
  for (auto& m : all) out.push_back(OrderMap::automorphism(p, std::move(m)));
  return out;
}

}  // namespace latcuts
