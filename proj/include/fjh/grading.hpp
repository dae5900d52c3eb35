#pragma once

// Fusion subrings, the adjoint subring and the universal grading.
//
// The universal grading is the partition of the simples generated by
// "j is a constituent of i ⊗ a for some a in the adjoint subring"; the group
// law on its classes is read off the constituents of products.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "fjh/descriptor.hpp"
#include "fjh/fusion_ring.hpp"

namespace fjh {

struct Subring {
  std::vector<Index> members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Index i) const { return std::binary_search(members.begin(), members.end(), i); }

  friend bool operator==(const Subring&, const Subring&) = default;
  friend std::strong_ordering operator<=>(const Subring& a, const Subring& b) {
    if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
    return a.members <=> b.members;
  }
};

inline Subring full_subring(const FusionRing& ring) {
  Subring s;
  s.members.resize(ring.rank());
  std::iota(s.members.begin(), s.members.end(), Index{0});
  return s;
}

inline Subring trivial_subring(const FusionRing& ring) { return Subring{{ring.unit()}}; }

/// Smallest subring containing the seed: worklist saturation under duals and constituents.
inline Subring closure(const FusionRing& ring, std::span<const Index> seed) {
  std::vector<char> in(ring.rank(), 0);
  std::vector<Index> members;
  auto push = [&](Index i) {
    if (!in[i]) {
      in[i] = 1;
      members.push_back(i);
    }
  };
  push(ring.unit());
  for (Index i : seed) {
    if (i >= ring.rank()) fail(ErrorKind::invalid_input, "seed index out of range");
    push(i);
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    push(ring.dual(members[a]));
    for (std::size_t b = 0; b <= a; ++b) {
      for (const auto& t : ring.product(members[a], members[b])) push(t.k);
      for (const auto& t : ring.product(members[b], members[a])) push(t.k);
    }
  }
  std::sort(members.begin(), members.end());
  return Subring{std::move(members)};
}

inline bool is_subring(const FusionRing& ring, const Subring& s) {
  if (!s.contains(ring.unit())) return false;
  for (Index i : s.members) {
    if (!s.contains(ring.dual(i))) return false;
    for (Index j : s.members)
      for (const auto& t : ring.product(i, j))
        if (!s.contains(t.k)) return false;
  }
  return true;
}

/// Subring generated by all constituents of x ⊗ x*.
inline Subring adjoint(const FusionRing& ring) {
  std::vector<Index> seed;
  for (Index i = 0; i < ring.rank(); ++i)
    for (const auto& t : ring.product(i, ring.dual(i))) seed.push_back(t.k);
  return closure(ring, seed);
}

/// A subring as a fusion ring in its own right, with the index map back to the parent.
struct RestrictedRing {
  FusionRing ring;
  std::vector<Index> to_parent;
};

inline RestrictedRing restrict_to(const FusionRing& ring, const Subring& sub) {
  std::vector<Index> local(ring.rank(), static_cast<Index>(-1));
  for (std::size_t a = 0; a < sub.size(); ++a) local[sub.members[a]] = static_cast<Index>(a);
  std::vector<std::string> labels;
  std::vector<Index> dual;
  std::vector<Coefficient> coeffs;
  for (Index a = 0; a < sub.size(); ++a) {
    Index i = sub.members[a];
    labels.push_back(ring.label(i));
    if (local[ring.dual(i)] == static_cast<Index>(-1)) fail(ErrorKind::invalid_input, "subring not closed under dual");
    dual.push_back(local[ring.dual(i)]);
    for (Index b = 0; b < sub.size(); ++b)
      for (const auto& t : ring.product(i, sub.members[b])) {
        if (local[t.k] == static_cast<Index>(-1))
          fail(ErrorKind::invalid_input, "subring not closed under products");
        coeffs.push_back({a, b, local[t.k], t.n});
      }
  }
  if (local[ring.unit()] == static_cast<Index>(-1)) fail(ErrorKind::invalid_input, "subring lacks the unit");
  return RestrictedRing{FusionRing(sub.size(), std::move(labels), local[ring.unit()], std::move(dual), coeffs),
                        sub.members};
}

// ---------------------------------------------------------------------------
// gradings

struct Grading {
  FiniteGroup group;
  std::vector<Element> degree;  // per simple index
  bool faithful = false;

  Subring component(Element g) const {
    Subring s;
    for (Index i = 0; i < degree.size(); ++i)
      if (degree[i] == g) s.members.push_back(i);
    return s;
  }
  Subring neutral_component() const { return component(group.identity()); }
};

/// Grading axioms for a degree map: multiplicativity, unit, inverse.
inline bool is_grading(const FusionRing& ring, const FiniteGroup& group, std::span<const Element> degree) {
  if (degree.size() != ring.rank()) return false;
  for (Element d : degree)
    if (d >= group.order()) return false;
  if (degree[ring.unit()] != group.identity()) return false;
  for (Index i = 0; i < ring.rank(); ++i) {
    if (degree[ring.dual(i)] != group.inv(degree[i])) return false;
    for (Index j = 0; j < ring.rank(); ++j)
      for (const auto& t : ring.product(i, j))
        if (degree[t.k] != group.mul(degree[i], degree[j])) return false;
  }
  return true;
}

inline bool is_surjective(const FiniteGroup& group, std::span<const Element> degree) {
  std::vector<char> hit(group.order(), 0);
  for (Element d : degree) hit[d] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace detail {

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Index{0}); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

inline Grading universal_grading(const FusionRing& ring) {
  const Subring adj = adjoint(ring);
  const Index n = static_cast<Index>(ring.rank());
  detail::DisjointSets sets(n);
  for (Index i = 0; i < n; ++i)
    for (Index a : adj.members)
      for (const auto& t : ring.product(i, a)) sets.unite(i, t.k);

  // classes numbered by smallest member; the unit's class becomes the identity
  std::vector<Element> cls(n);
  std::map<Index, Element> number;
  std::vector<Index> first_member;
  number[sets.find(ring.unit())] = 0;
  first_member.push_back(ring.unit());
  for (Index i = 0; i < n; ++i) {
    Index root = sets.find(i);
    auto [it, fresh] = number.emplace(root, static_cast<Element>(number.size()));
    if (fresh) first_member.push_back(i);
    cls[i] = it->second;
  }
  const std::size_t k = number.size();
  const Element unset = static_cast<Element>(-1);
  std::vector<Element> table(k * k, unset);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& t : ring.product(i, j)) {
        Element& slot = table[cls[i] * k + cls[j]];
        if (slot == unset) slot = cls[t.k];
        if (slot != cls[t.k])
          fail(ErrorKind::internal_inconsistency, "class product is not well defined at (" + ring.label(i) + "," +
                                                      ring.label(j) + ")");
      }
  if (std::find(table.begin(), table.end(), unset) != table.end())
    fail(ErrorKind::internal_inconsistency, "class product is undefined for some pair");
  std::vector<std::string> labels;
  for (Index m : first_member) labels.push_back("[" + ring.label(m) + "]");
  Grading g;
  try {
    g.group = FiniteGroup(std::move(table), std::move(labels), Limits{.table_cap = 65535});
  } catch (const Error& e) {
    fail(ErrorKind::internal_inconsistency, std::string("class product is not a group: ") + e.what());
  }
  g.degree = std::move(cls);
  g.faithful = true;
  if (g.neutral_component() != adj)
    fail(ErrorKind::internal_inconsistency, "neutral component differs from the adjoint subring");
  return g;
}

/// ⊕_{h ∈ H} C_h.
inline Subring component_subring(const Grading& grading, const Subgroup& h) {
  Subring s;
  for (Index i = 0; i < grading.degree.size(); ++i)
    if (h.contains(grading.degree[i])) s.members.push_back(i);
  return s;
}

struct QuotientGrading {
  Subgroup normal;
  Grading grading;  // by base.group / normal
};

/// One faithful grading per normal subgroup N of the base group: i -> coset of degree(i).
inline std::vector<QuotientGrading> quotient_gradings(const FusionRing& ring, const Grading& base) {
  if (!base.faithful || !is_surjective(base.group, base.degree))
    fail(ErrorKind::invalid_input, "base grading must be faithful");
  std::vector<QuotientGrading> out;
  for (const auto& nsub : normal_subgroups(base.group)) {
    QuotientMap q = quotient_map(base.group, nsub);
    Grading g;
    g.group = q.group;
    for (Index i = 0; i < ring.rank(); ++i) g.degree.push_back(q.coset[base.degree[i]]);
    g.faithful = true;
    out.push_back({nsub, std::move(g)});
  }
  return out;
}

/// Every subring, found by saturating each known subring with one more simple.
inline std::vector<Subring> all_subrings(const FusionRing& ring, std::size_t cap = 20) {
  if (ring.rank() > cap) fail(ErrorKind::cap_exceeded, "rank " + std::to_string(ring.rank()) + " exceeds cap " + std::to_string(cap));
  if (ring.rank() > 64) fail(ErrorKind::cap_exceeded, "all_subrings supports rank at most 64");
  auto mask_of = [](const Subring& s) {
    std::uint64_t m = 0;
    for (Index i : s.members) m |= std::uint64_t{1} << i;
    return m;
  };
  std::map<std::uint64_t, Subring> found;
  std::vector<std::uint64_t> queue;
  Subring one = closure(ring, std::span<const Index>{});
  found.emplace(mask_of(one), one);
  queue.push_back(mask_of(one));
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Subring s = found.at(queue[q]);
    for (Index i = 0; i < ring.rank(); ++i) {
      if (s.contains(i)) continue;
      std::vector<Index> seed = s.members;
      seed.push_back(i);
      Subring c = closure(ring, seed);
      std::uint64_t m = mask_of(c);
      if (found.emplace(m, c).second) queue.push_back(m);
    }
  }
  std::vector<Subring> out;
  for (auto& [m, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fjh
