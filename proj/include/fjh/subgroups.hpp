#pragma once

// Subgroup structure: closures, conjugacy, normal subgroups, quotients.
// Everything is brute force over the Cayley table; lists come back in the
// canonical order (size, then sorted member list).

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "fjh/group.hpp"

namespace fjh {

struct Subgroup {
  std::vector<Element> members;  // sorted

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
    return a.members <=> b.members;
  }
};

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), Element{0});
  return s;
}

inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      Element x = g.mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems)};
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& members) {
  if (members.empty() || !std::is_sorted(members.begin(), members.end())) return false;
  std::vector<char> in(g.order(), 0);
  for (Element x : members) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (Element a : members) {
    if (!in[g.inv(a)]) return false;
    for (Element b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : h.members)
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

/// Conjugacy classes; the identity class comes first, then by smallest unassigned element.
inline std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> classes;
  std::vector<char> seen(g.order(), 0);
  auto add = [&](Element rep) {
    std::vector<Element> cls;
    for (Element x = 0; x < g.order(); ++x) {
      Element c = g.conj(x, rep);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    // keep the representative first, the rest sorted
    std::sort(cls.begin(), cls.end());
    std::iter_swap(cls.begin(), std::find(cls.begin(), cls.end(), rep));
    classes.push_back(std::move(cls));
  };
  add(g.identity());
  for (Element a = 0; a < g.order(); ++a)
    if (!seen[a]) add(a);
  return classes;
}

inline std::vector<std::size_t> class_index(const FiniteGroup& g, const std::vector<std::vector<Element>>& classes) {
  std::vector<std::size_t> idx(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element x : classes[c]) idx[x] = c;
  return idx;
}

inline Subgroup centralizer(const FiniteGroup& g, Element a) {
  Subgroup s;
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x)) s.members.push_back(x);
  return s;
}

inline Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.mul(x, a) == g.mul(a, x);
    if (central) s.members.push_back(a);
  }
  return s;
}

inline Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> seeds) {
  std::vector<Element> gens;
  std::vector<char> in(g.order(), 0);
  for (Element s : seeds)
    for (Element x = 0; x < g.order(); ++x) {
      Element c = g.conj(x, s);
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  return generated_subgroup(g, gens);
}

inline Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup(g);
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      Element c = g.commutator(a, b);
      if (!in[c]) {
        gens.push_back(c);
        current = generated_subgroup(g, gens);
        for (Element x : current.members) in[x] = 1;
      }
    }
  return current;
}

/// Subgroup as a group in its own right; element i is h.members[i].
inline FiniteGroup induced_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = h.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[h.members[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.label(h.members[i]);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.mul(h.members[i], h.members[j])];
  }
  FiniteGroup sub(FiniteGroup::trusted, std::move(table), std::move(labels));
  if (g.has_permutations()) {
    std::vector<Permutation> perms(n);
    for (std::size_t i = 0; i < n; ++i) perms[i] = g.permutation(h.members[i]);
    sub.attach_permutations(std::move(perms));
  }
  return sub;
}

/// Maps a subgroup of induced_group(g, h) back to a subgroup of g.
inline Subgroup lift(const Subgroup& h, const Subgroup& inside) {
  Subgroup s;
  for (Element i : inside.members) s.members.push_back(h.members[i]);
  std::sort(s.members.begin(), s.members.end());
  return s;
}

struct QuotientMap {
  FiniteGroup group;
  std::vector<Element> coset;  // element of G -> element of G/N
  std::vector<Element> rep;    // element of G/N -> representative in G
};

inline QuotientMap quotient_map(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n.members) || !is_normal(g, n))
    fail(ErrorKind::not_normal, "subgroup is not normal");
  const Element unassigned = static_cast<Element>(-1);
  QuotientMap q{FiniteGroup(), std::vector<Element>(g.order(), unassigned), {}};
  auto assign = [&](Element r) {
    Element id = static_cast<Element>(q.rep.size());
    q.rep.push_back(r);
    for (Element x : n.members) q.coset[g.mul(r, x)] = id;
  };
  assign(g.identity());
  for (Element a = 0; a < g.order(); ++a)
    if (q.coset[a] == unassigned) assign(a);
  const std::size_t k = q.rep.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = g.label(q.rep[i]) + "N";
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = q.coset[g.mul(q.rep[i], q.rep[j])];
  }
  q.group = FiniteGroup(FiniteGroup::trusted, std::move(table), std::move(labels));
  return q;
}

inline FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) { return quotient_map(g, n).group; }

inline std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  FiniteGroup current = g;
  Subgroup in_g = series.back();
  while (true) {
    Subgroup d = derived_subgroup(current);
    if (d.size() == current.order()) break;
    in_g = lift(in_g, d);
    series.push_back(in_g);
    current = induced_group(current, d);
  }
  return series;
}

inline bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

/// Every normal subgroup, via joins of normal closures of conjugacy classes.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.table_cap) fail(ErrorKind::cap_exceeded, "group exceeds table cap");
  auto classes = conjugacy_classes(g);
  std::set<Subgroup> found;
  // pending: subgroup plus the class-union generating set that produced it
  std::deque<std::pair<Subgroup, std::vector<Element>>> queue;
  Subgroup one = trivial_subgroup(g);
  found.insert(one);
  queue.emplace_back(one, std::vector<Element>{});
  while (!queue.empty()) {
    auto [h, gens] = std::move(queue.front());
    queue.pop_front();
    for (const auto& cls : classes) {
      if (h.contains(cls.front())) continue;
      std::vector<Element> more = gens;
      more.insert(more.end(), cls.begin(), cls.end());
      Subgroup j = generated_subgroup(g, more);
      if (found.insert(j).second) queue.emplace_back(std::move(j), std::move(more));
    }
  }
  return {found.begin(), found.end()};
}

namespace detail {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// Normal subgroups of index p: kernels of the surjections G -> C_p, obtained as
/// hyperplanes of the elementary abelian quotient G / G'G^p.
inline std::vector<Subgroup> index_p_normal_subgroups(const FiniteGroup& g, const Subgroup& derived, std::size_t p) {
  std::vector<Element> gens = derived.members;
  for (Element a = 0; a < g.order(); ++a) gens.push_back(g.pow(a, p));
  Subgroup k = generated_subgroup(g, gens);
  if (k.size() == g.order()) return {};
  QuotientMap q = quotient_map(g, k);
  const FiniteGroup& e = q.group;
  // coordinates of each element of E over a greedily chosen basis
  std::vector<std::vector<std::size_t>> coords(e.order());
  std::vector<char> spanned(e.order(), 0);
  std::vector<Element> span{e.identity()};
  spanned[e.identity()] = 1;
  coords[e.identity()] = {};
  std::size_t dim = 0;
  for (Element b = 0; b < e.order(); ++b) {
    if (spanned[b]) continue;
    std::vector<Element> next;
    for (Element s : span) {
      Element x = s;
      for (std::size_t c = 1; c < p; ++c) {
        x = e.mul(x, b);
        auto v = coords[s];
        v.resize(dim + 1, 0);
        v[dim] = c;
        coords[x] = std::move(v);
        spanned[x] = 1;
        next.push_back(x);
      }
    }
    span.insert(span.end(), next.begin(), next.end());
    ++dim;
  }
  for (auto& v : coords) v.resize(dim, 0);
  std::vector<Subgroup> out;
  // functionals normalized so the first nonzero coordinate is 1
  std::vector<std::size_t> f(dim, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= p;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < dim; ++i) {
      f[i] = c % p;
      c /= p;
    }
    auto lead = std::find_if(f.begin(), f.end(), [](std::size_t x) { return x != 0; });
    if (*lead != 1) continue;
    Subgroup ker;
    for (Element a = 0; a < g.order(); ++a) {
      const auto& v = coords[q.coset[a]];
      std::size_t s = 0;
      for (std::size_t i = 0; i < dim; ++i) s += f[i] * v[i];
      if (s % p == 0) ker.members.push_back(a);
    }
    out.push_back(std::move(ker));
  }
  return out;
}

}  // namespace detail

/// Maximal elements of the proper normal subgroups. Solvable groups go through
/// index-p kernels; others through the full normal-subgroup lattice.
inline std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g, const Limits& limits = {}) {
  if (g.order() > limits.table_cap) fail(ErrorKind::cap_exceeded, "group exceeds table cap");
  if (g.order() == 1) return {};
  std::vector<Subgroup> out;
  if (is_solvable(g)) {
    Subgroup d = derived_subgroup(g);
    for (std::size_t p : detail::prime_factors(g.order() / d.size())) {
      auto ks = detail::index_p_normal_subgroups(g, d, p);
      out.insert(out.end(), ks.begin(), ks.end());
    }
  } else {
    auto all = normal_subgroups(g, limits);
    for (const auto& h : all) {
      if (h.size() == g.order()) continue;
      bool maximal = true;
      for (const auto& j : all) {
        if (j.size() == g.order() || j.size() <= h.size() || j.size() % h.size() != 0) continue;
        if (std::includes(j.members.begin(), j.members.end(), h.members.begin(), h.members.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  if (g.is_abelian()) return detail::is_prime(g.order());
  auto classes = conjugacy_classes(g);
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (generated_subgroup(g, classes[c]).size() != g.order()) return false;
  }
  return true;
}

}  // namespace fjh
