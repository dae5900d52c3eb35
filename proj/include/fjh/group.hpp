#pragma once

// Finite groups stored as full Cayley tables, plus the standard named
// constructors. Permutation generators are a construction front end only;
// permutation images are kept per element so subgroups can be located by
// their generators.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fjh/error.hpp"

namespace fjh {

using Element = std::uint32_t;

/// Permutation of {0, ..., n-1} as an image list. Products act on the right:
/// (p * q)(x) = q(p(x)).
using Permutation = std::vector<std::uint32_t>;

struct Limits {
  std::size_t enumeration_cap = 100000;   // elements enumerated from generators
  std::size_t table_cap = 4096;           // largest order with a Cayley table
  std::size_t full_associativity = 256;   // exhaustive associativity check below this order
  std::size_t associativity_samples = 20000;
};

namespace perm {

inline Permutation identity(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

inline bool is_valid(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

/// Cycle notation with 1-based points, "()" for the identity.
inline std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct Hash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace perm

class FiniteGroup {
 public:
  struct trusted_t {};
  /// Skips the associativity check; for tables derived from a verified group.
  static constexpr trusted_t trusted{};

  FiniteGroup() : FiniteGroup(trusted, std::vector<Element>{0}, {"e"}) {}

  /// Builds from a row-major Cayley table; verifies the group axioms.
  explicit FiniteGroup(std::vector<Element> table, std::vector<std::string> labels = {},
                       const Limits& limits = {}) {
    init(std::move(table), std::move(labels), limits);
    check_associativity(limits);
  }

  FiniteGroup(trusted_t, std::vector<Element> table, std::vector<std::string> labels = {}) {
    init(std::move(table), std::move(labels), Limits{.table_cap = 65535});
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element conj(Element x, Element g) const noexcept { return mul(mul(x, g), inv(x)); }  // x g x^-1
  Element pow(Element a, std::uint64_t k) const noexcept {
    Element r = identity_;
    while (k--) r = mul(r, a);
    return r;
  }
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  std::size_t element_order(Element a) const noexcept {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const noexcept {
    for (Element a = 0; a < order_; ++a)
      for (Element b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Cayley table as nested rows of element indices.
  std::vector<std::vector<Element>> cayley() const {
    std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
    return rows;
  }

  bool has_permutations() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return perms_.empty() ? 0 : perms_.front().size(); }
  const Permutation& permutation(Element a) const { return perms_.at(a); }
  std::optional<Element> find_permutation(const Permutation& p) const {
    if (perms_.empty() || p.size() != degree()) return std::nullopt;
    if (perm_index_.empty()) {
      for (Element a = 0; a < order_; ++a) perm_index_.emplace(perms_[a], a);
    }
    auto it = perm_index_.find(p);
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
  }
  void attach_permutations(std::vector<Permutation> perms) {
    if (perms.size() != order_) fail(ErrorKind::invalid_input, "permutation count differs from order");
    perms_ = std::move(perms);
    perm_index_.clear();
  }

 private:
  void init(std::vector<Element> table, std::vector<std::string> labels, const Limits& limits) {
    std::size_t n = 0;
    while (n * n < table.size()) ++n;
    if (n == 0 || n * n != table.size()) fail(ErrorKind::invalid_input, "Cayley table must be square and non-empty");
    if (n > limits.table_cap || n > 65535)
      fail(ErrorKind::cap_exceeded, "group order " + std::to_string(n) + " exceeds table cap");
    order_ = n;
    table_.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (table[i] >= n) fail(ErrorKind::invalid_input, "Cayley table entry out of range");
      table_[i] = static_cast<std::uint16_t>(table[i]);
    }
    // Latin square
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t round = 0;
    for (std::size_t a = 0; a < n; ++a) {
      ++round;
      for (std::size_t b = 0; b < n; ++b) {
        auto x = table_[a * n + b];
        if (stamp[x] == round) fail(ErrorKind::invalid_input, "Cayley table row is not a permutation");
        stamp[x] = round;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      ++round;
      for (std::size_t a = 0; a < n; ++a) {
        auto x = table_[a * n + b];
        if (stamp[x] == round) fail(ErrorKind::invalid_input, "Cayley table column is not a permutation");
        stamp[x] = round;
      }
    }
    std::optional<Element> id;
    for (Element e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) id = e;
    }
    if (!id) fail(ErrorKind::invalid_input, "Cayley table has no identity");
    identity_ = *id;
    inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (mul(a, b) == identity_) {
          if (mul(b, a) != identity_) fail(ErrorKind::invalid_input, "left and right inverses differ");
          inverse_[a] = b;
          break;
        }
      }
    }
    if (labels.empty()) {
      labels.resize(n);
      for (std::size_t a = 0; a < n; ++a) labels[a] = "g" + std::to_string(a);
    }
    if (labels.size() != n) fail(ErrorKind::invalid_input, "label count differs from group order");
    labels_ = std::move(labels);
  }

  void check_associativity(const Limits& limits) const {
    auto bad = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) != mul(a, mul(b, c)); };
    if (order_ <= limits.full_associativity) {
      for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b)
          for (Element c = 0; c < order_; ++c)
            if (bad(a, b, c)) fail(ErrorKind::invalid_input, "Cayley table is not associative");
      return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    for (std::size_t s = 0; s < limits.associativity_samples; ++s) {
      if (bad(pick(rng), pick(rng), pick(rng)))
        fail(ErrorKind::invalid_input, "Cayley table is not associative (sampled)");
    }
  }

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;
  mutable std::unordered_map<Permutation, Element, perm::Hash> perm_index_;
};

/// Closure of a set of permutations under composition, enumerated breadth-first.
/// Element 0 is the identity; with a single generator, element k is its k-th power.
inline FiniteGroup from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                   const Limits& limits = {}) {
  for (const auto& g : gens)
    if (g.size() != degree || !perm::is_valid(g))
      fail(ErrorKind::invalid_input, "generator is not a permutation of " + std::to_string(degree) + " points");
  std::vector<Permutation> elems{perm::identity(degree)};
  std::unordered_map<Permutation, Element, perm::Hash> index{{elems[0], 0}};
  std::vector<Element> parent{0}, via{0};
  std::vector<std::vector<Element>> right;  // right[x][s] = x * gens[s]
  for (std::size_t i = 0; i < elems.size(); ++i) {
    right.emplace_back(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation next = perm::compose(elems[i], gens[s]);
      auto [it, inserted] = index.emplace(next, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= limits.enumeration_cap)
          fail(ErrorKind::cap_exceeded, "more than " + std::to_string(limits.enumeration_cap) + " elements enumerated");
        elems.push_back(std::move(next));
        parent.push_back(static_cast<Element>(i));
        via.push_back(static_cast<Element>(s));
      }
      right[i][s] = it->second;
    }
  }
  const std::size_t n = elems.size();
  if (n > limits.table_cap)
    fail(ErrorKind::cap_exceeded, "group order " + std::to_string(n) + " exceeds table cap " + std::to_string(limits.table_cap));
  // a * b = (a * parent(b)) * gen(b), filled in BFS order of b.
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n + 0] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) table[a * n + b] = right[table[a * n + parent[b]]][via[b]];
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = perm::to_cycles(elems[a]);
  FiniteGroup g(FiniteGroup::trusted, std::move(table), std::move(labels));
  g.attach_permutations(std::move(elems));
  return g;
}

/// Cycle on the given 0-based points of a degree-n permutation.
inline Permutation cycle(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  Permutation p = perm::identity(degree);
  std::vector<std::uint32_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_input, "cyclic group order must be positive");
  Permutation g(n);
  for (std::size_t x = 0; x < n; ++x) g[x] = static_cast<std::uint32_t>((x + 1) % n);
  return from_generators(n, {g});
}

/// Dihedral group of order 2n (symmetries of an n-gon).
inline FiniteGroup dihedral(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_input, "dihedral parameter must be positive");
  if (n <= 2) {
    // D1 = C2, D2 = C2 x C2, realized on 4 points.
    std::vector<Permutation> gens{cycle(4, {0, 1})};
    if (n == 2) gens.push_back(cycle(4, {2, 3}));
    return from_generators(4, gens);
  }
  Permutation rot(n), ref(n);
  for (std::size_t x = 0; x < n; ++x) {
    rot[x] = static_cast<std::uint32_t>((x + 1) % n);
    ref[x] = static_cast<std::uint32_t>((n - x) % n);
  }
  return from_generators(n, {rot, ref});
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_input, "symmetric degree must be positive");
  if (n == 1) return from_generators(1, {});
  Permutation full(n);
  for (std::size_t x = 0; x < n; ++x) full[x] = static_cast<std::uint32_t>((x + 1) % n);
  return from_generators(n, {cycle(n, {0, 1}), full});
}

inline FiniteGroup alternating(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_input, "alternating degree must be positive");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
  return from_generators(n, gens);
}

/// <a, b | a^m = 1, b^n = a^s, b a b^-1 = a^r>, elements a^i b^j at index i*n + j.
inline FiniteGroup metacyclic(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  if (m == 0 || n == 0) fail(ErrorKind::invalid_input, "metacyclic parameters must be positive");
  std::vector<std::size_t> rpow(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  if (rpow[n] != 1 % m || (r * s) % m != s % m)
    fail(ErrorKind::invalid_input, "inconsistent metacyclic parameters");
  const std::size_t order = m * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels[i * n + j] = "a" + std::to_string(i) + "b" + std::to_string(j);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          std::size_t ai = i + k * rpow[j];
          std::size_t bj = j + l;
          if (bj >= n) {
            bj -= n;
            ai += s;
          }
          table[(i * n + j) * order + (k * n + l)] = static_cast<Element>((ai % m) * n + bj);
        }
      }
    }
  }
  return FiniteGroup(std::move(table), std::move(labels));
}

/// Generalized quaternion group of order 4m (m >= 2); quaternion(2) is Q8.
inline FiniteGroup quaternion(std::size_t m) {
  if (m < 2) fail(ErrorKind::invalid_input, "quaternion parameter must be at least 2");
  return metacyclic(2 * m, 2, 2 * m - 1, m);
}

inline FiniteGroup quaternion8() { return quaternion(2); }

/// Pairs (a, b) at index a * |B| + b; permutation images are placed on disjoint points.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (Element a = 0; a < na; ++a)
    for (Element b = 0; b < nb; ++b) {
      labels[a * nb + b] = "(" + A.label(a) + "," + B.label(b) + ")";
      for (Element c = 0; c < na; ++c)
        for (Element d = 0; d < nb; ++d)
          table[(a * nb + b) * n + (c * nb + d)] = A.mul(a, c) * static_cast<Element>(nb) + B.mul(b, d);
    }
  FiniteGroup g(FiniteGroup::trusted, std::move(table), std::move(labels));
  if (A.has_permutations() && B.has_permutations()) {
    const std::size_t da = A.degree(), db = B.degree();
    std::vector<Permutation> perms(n);
    for (Element a = 0; a < na; ++a)
      for (Element b = 0; b < nb; ++b) {
        Permutation p(da + db);
        for (std::size_t x = 0; x < da; ++x) p[x] = A.permutation(a)[x];
        for (std::size_t x = 0; x < db; ++x) p[da + x] = static_cast<std::uint32_t>(da + B.permutation(b)[x]);
        perms[a * nb + b] = std::move(p);
      }
    g.attach_permutations(std::move(perms));
  }
  return g;
}

/// N x| H with (n1, h1)(n2, h2) = (n1 act(h1, n2), h1 h2); act(h, .) must be an automorphism.
inline FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                                      const std::function<Element(Element, Element)>& act) {
  const std::size_t nn = N.order(), nh = H.order(), n = nn * nh;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (Element a = 0; a < nn; ++a)
    for (Element h = 0; h < nh; ++h) {
      labels[a * nh + h] = "(" + N.label(a) + "," + H.label(h) + ")";
      for (Element b = 0; b < nn; ++b)
        for (Element k = 0; k < nh; ++k)
          table[(a * nh + h) * n + (b * nh + k)] =
              N.mul(a, act(h, b)) * static_cast<Element>(nh) + H.mul(h, k);
    }
  return FiniteGroup(std::move(table), std::move(labels));
}

}  // namespace fjh
