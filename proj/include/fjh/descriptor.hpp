#pragma once

// Isomorphism-class descriptors, the isomorphism decider, group composition
// series and factor multisets.

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fjh/subgroups.hpp"

namespace fjh {

enum class DescriptorKind { cyclic, catalog_simple, composite };

/// Isomorphism-class tag. Simple groups are named exactly (prime cyclics and the
/// order-unique nonabelian simple groups below 10^4); everything else carries
/// an invariant fingerprint, which is a screen rather than a decider.
struct GroupDescriptor {
  std::uint64_t order = 1;
  DescriptorKind kind = DescriptorKind::composite;
  std::string name;
  std::vector<std::uint64_t> abelian_invariants;                      // of G/G'
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram;  // (element order, count)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_shape;      // sorted (class size, element order)
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;

  bool is_simple() const noexcept { return kind != DescriptorKind::composite; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline const std::map<std::uint64_t, std::string>& simple_group_catalog() {
  static const std::map<std::uint64_t, std::string> catalog{
      {60, "A5"},          {168, "PSL(2,7)"},  {360, "A6"},         {504, "PSL(2,8)"},
      {660, "PSL(2,11)"},  {1092, "PSL(2,13)"}, {2448, "PSL(2,17)"}, {2520, "A7"},
      {3420, "PSL(2,19)"}, {4080, "PSL(2,16)"}, {5616, "PSL(3,3)"},  {6048, "PSU(3,3)"},
      {6072, "PSL(2,23)"}, {7800, "PSL(2,25)"}, {7920, "M11"},       {9828, "PSL(2,27)"},
  };
  return catalog;
}

/// Invariants of a finite abelian group in elementary-divisor form, read off from
/// the counts |{x : x^(p^k) = 1}|.
inline std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& a) {
  std::vector<std::uint64_t> out;
  for (std::size_t p : detail::prime_factors(a.order())) {
    // count[k] = log_p |{x : x^(p^k) = 1}|
    std::vector<std::size_t> logs{0};
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t c = 0;
      for (Element x = 0; x < a.order(); ++x) c += a.pow(x, pk) == a.identity();
      std::size_t l = 0;
      for (std::size_t t = c; t > 1; t /= p) ++l;
      logs.push_back(l);
      if (logs.back() == logs[logs.size() - 2]) break;
    }
    // number of cyclic factors of order >= p^k is logs[k] - logs[k-1]
    const std::size_t kmax = logs.size() - 2;
    for (std::size_t k = kmax; k >= 1; --k) {
      std::size_t at_least_k = logs[k] - logs[k - 1];
      std::size_t at_least_k1 = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      std::uint64_t q = 1;
      for (std::size_t t = 0; t < k; ++t) q *= p;
      for (std::size_t t = 0; t < at_least_k - at_least_k1; ++t) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return {h.begin(), h.end()};
}

inline GroupDescriptor fingerprint(const FiniteGroup& g) {
  GroupDescriptor d;
  d.order = g.order();
  d.kind = DescriptorKind::composite;
  Subgroup der = derived_subgroup(g);
  d.derived_order = der.size();
  d.abelian_invariants = abelian_invariants(quotient(g, der));
  d.order_histogram = order_histogram(g);
  d.center_order = center(g).size();
  for (const auto& cls : conjugacy_classes(g)) d.class_shape.emplace_back(cls.size(), g.element_order(cls.front()));
  std::sort(d.class_shape.begin(), d.class_shape.end());
  d.name = "G" + std::to_string(d.order);
  return d;
}

inline GroupDescriptor cyclic_descriptor(std::uint64_t p) {
  GroupDescriptor d;
  d.order = p;
  d.kind = DescriptorKind::cyclic;
  d.name = "C" + std::to_string(p);
  return d;
}

inline GroupDescriptor describe(const FiniteGroup& g) {
  if (g.order() > 1 && detail::is_prime(g.order())) return cyclic_descriptor(g.order());
  if (g.order() > 1 && !g.is_abelian() && is_simple(g)) {
    const auto& cat = simple_group_catalog();
    auto it = cat.find(g.order());
    if (it == cat.end())
      fail(ErrorKind::cap_exceeded, "nonabelian simple group of order " + std::to_string(g.order()) +
                                        " is outside the catalog");
    GroupDescriptor d;
    d.order = g.order();
    d.kind = DescriptorKind::catalog_simple;
    d.name = it->second;
    return d;
  }
  return fingerprint(g);
}

namespace detail {

/// Greedy generating set, preferring elements of large order.
inline std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::vector<std::size_t> ord(g.order());
  for (Element x = 0; x < g.order(); ++x) ord[x] = g.element_order(x);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) { return ord[a] > ord[b]; });
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup(g);
  for (Element x : by_order) {
    if (current.size() == g.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

/// Extends generator images to a map on all of G; returns false if inconsistent
/// or not injective.
inline bool extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                                const std::vector<Element>& images, std::vector<Element>& phi) {
  const Element unset = static_cast<Element>(-1);
  phi.assign(g.order(), unset);
  phi[g.identity()] = h.identity();
  std::vector<Element> queue{g.identity()};
  std::vector<char> used(h.order(), 0);
  used[h.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element y = g.mul(x, gens[s]);
      Element fy = h.mul(phi[x], images[s]);
      if (phi[y] == unset) {
        if (used[fy]) return false;
        used[fy] = 1;
        phi[y] = fy;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        return false;
      }
    }
  }
  return queue.size() == g.order();
}

}  // namespace detail

/// Invariant screen, then a backtracking search over generator images. The
/// first generator's image is taken up to conjugacy in H.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() == 1) return std::vector<Element>{h.identity()};
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (order_histogram(g) != order_histogram(h)) return std::nullopt;
  auto gc = conjugacy_classes(g), hc = conjugacy_classes(h);
  if (gc.size() != hc.size()) return std::nullopt;
  auto gci = class_index(g, gc), hci = class_index(h, hc);
  auto shape = [](const FiniteGroup& grp, const auto& cls) {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (const auto& c : cls) s.emplace_back(c.size(), grp.element_order(c.front()));
    std::sort(s.begin(), s.end());
    return s;
  };
  if (shape(g, gc) != shape(h, hc)) return std::nullopt;

  auto gens = detail::generating_set(g);
  auto key = [](const FiniteGroup& grp, const auto& cls, const auto& ci, Element x) {
    return std::pair<std::size_t, std::size_t>(grp.element_order(x), cls[ci[x]].size());
  };
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    auto want = key(g, gc, gci, gens[s]);
    if (s == 0) {
      for (const auto& c : hc)
        if (key(h, hc, hci, c.front()) == want) candidates[s].push_back(c.front());
    } else {
      for (Element y = 0; y < h.order(); ++y)
        if (key(h, hc, hci, y) == want) candidates[s].push_back(y);
    }
  }
  std::vector<Element> images(gens.size());
  std::vector<Element> phi;
  std::function<bool(std::size_t)> search = [&](std::size_t s) -> bool {
    if (s == gens.size()) return detail::extend_homomorphism(g, h, gens, images, phi);
    for (Element y : candidates[s]) {
      images[s] = y;
      if (search(s + 1)) return true;
    }
    return false;
  };
  if (search(0)) return phi;
  return std::nullopt;
}

inline bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) { return find_isomorphism(g, h).has_value(); }

/// Multiset of isomorphism descriptors; order-insensitive equality.
class FactorMultiset {
 public:
  FactorMultiset() = default;

  void add(const GroupDescriptor& d, std::size_t times = 1) {
    if (times) counts_[d] += times;
  }
  void merge(const FactorMultiset& other) {
    for (const auto& [d, k] : other.counts_) add(d, k);
  }
  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (const auto& [d, k] : counts_) n += k;
    return n;
  }
  std::size_t count(const GroupDescriptor& d) const {
    auto it = counts_.find(d);
    return it == counts_.end() ? 0 : it->second;
  }
  bool empty() const noexcept { return counts_.empty(); }
  const std::map<GroupDescriptor, std::size_t>& entries() const noexcept { return counts_; }

  /// "C2^3 · C3"; the empty multiset prints as "1".
  std::string to_string() const {
    if (counts_.empty()) return "1";
    std::string out;
    for (const auto& [d, k] : counts_) {
      if (!out.empty()) out += " · ";
      out += d.name;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;

 private:
  std::map<GroupDescriptor, std::size_t> counts_;
};

inline FactorMultiset doubled(const FactorMultiset& f) {
  FactorMultiset out = f;
  out.merge(f);
  return out;
}

struct GroupCompositionSeries {
  std::vector<Subgroup> chain;           // {e} = G_0 < G_1 < ... < G_n = G
  std::vector<GroupDescriptor> factors;  // factors[i-1] describes G_i / G_{i-1}
  std::size_t length() const noexcept { return factors.size(); }
};

/// Repeatedly descends through the first maximal normal subgroup (canonical order).
inline GroupCompositionSeries composition_series_group(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.table_cap) fail(ErrorKind::cap_exceeded, "group exceeds table cap");
  std::vector<Subgroup> top_down{whole_group(g)};
  std::vector<GroupDescriptor> factors_top_down;
  FiniteGroup current = g;
  while (current.order() > 1) {
    auto maxes = maximal_normal_subgroups(current, limits);
    const Subgroup& m = maxes.front();
    factors_top_down.push_back(describe(quotient(current, m)));
    top_down.push_back(lift(top_down.back(), m));
    current = induced_group(current, m);
  }
  GroupCompositionSeries s;
  s.chain.assign(top_down.rbegin(), top_down.rend());
  s.factors.assign(factors_top_down.rbegin(), factors_top_down.rend());
  return s;
}

inline FactorMultiset composition_factors_group(const FiniteGroup& g, const Limits& limits = {}) {
  FactorMultiset f;
  for (const auto& d : composition_series_group(g, limits).factors) f.add(d);
  return f;
}

}  // namespace fjh
