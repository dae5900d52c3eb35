#pragma once

// Matched pairs of groups and their Zappa-Szep (bicrossed) product F ⋈ Γ.
//
// Convention: for s in Γ and y in F, s·y = (s ▷ y)(s ◁ y) with s ▷ y in F and
// s ◁ y in Γ; the product on F x Γ is
//     (x, s)(y, t) = (x (s ▷ y), (s ◁ y) t).

#include <vector>

#include "fjh/descriptor.hpp"

namespace fjh {

struct MatchedPair {
  FiniteGroup F;
  FiniteGroup Gamma;
  std::vector<Element> act_right;  // [s * |F| + y] -> s ▷ y in F
  std::vector<Element> act_left;   // [s * |F| + y] -> s ◁ y in Γ

  Element right(Element s, Element y) const { return act_right[s * F.order() + y]; }
  Element left(Element s, Element y) const { return act_left[s * F.order() + y]; }
};

/// Actions of the direct product F x Γ.
inline MatchedPair trivial_matched_pair(const FiniteGroup& f, const FiniteGroup& gamma) {
  MatchedPair mp{f, gamma, {}, {}};
  for (Element s = 0; s < gamma.order(); ++s)
    for (Element y = 0; y < f.order(); ++y) {
      mp.act_right.push_back(y);
      mp.act_left.push_back(s);
    }
  return mp;
}

/// Reads the actions off an exact factorization G = F Γ with F ∩ Γ = {e}.
inline MatchedPair matched_pair_from_factorization(const FiniteGroup& g, const Subgroup& f, const Subgroup& gamma) {
  if (!is_subgroup(g, f.members) || !is_subgroup(g, gamma.members))
    fail(ErrorKind::not_exact_factorization, "factors must be subgroups");
  if (f.size() * gamma.size() != g.order())
    fail(ErrorKind::not_exact_factorization, "|F||Γ| differs from |G|");
  const Element unset = static_cast<Element>(-1);
  // decomposition g = x t  ->  (index of x in F, index of t in Γ)
  std::vector<std::pair<Element, Element>> split(g.order(), {unset, unset});
  for (Element i = 0; i < f.size(); ++i)
    for (Element j = 0; j < gamma.size(); ++j) {
      Element prod = g.mul(f.members[i], gamma.members[j]);
      if (split[prod].first != unset) fail(ErrorKind::not_exact_factorization, "F ∩ Γ is nontrivial");
      split[prod] = {i, j};
    }
  MatchedPair mp{induced_group(g, f), induced_group(g, gamma), {}, {}};
  mp.act_right.resize(gamma.size() * f.size());
  mp.act_left.resize(gamma.size() * f.size());
  for (Element s = 0; s < gamma.size(); ++s)
    for (Element y = 0; y < f.size(); ++y) {
      auto [x, t] = split[g.mul(gamma.members[s], f.members[y])];
      mp.act_right[s * f.size() + y] = x;
      mp.act_left[s * f.size() + y] = t;
    }
  return mp;
}

/// Checks the compatibilities that make the bicrossed product associative:
///   e ▷ y = y,  s ◁ e = s,  (st) ▷ y = s ▷ (t ▷ y),  s ◁ (xy) = (s ◁ x) ◁ y,
///   s ▷ (xy) = (s ▷ x)((s ◁ x) ▷ y),  (st) ◁ y = (s ◁ (t ▷ y))(t ◁ y).
inline bool is_matched_pair(const MatchedPair& mp) {
  const FiniteGroup& f = mp.F;
  const FiniteGroup& gm = mp.Gamma;
  if (mp.act_right.size() != f.order() * gm.order() || mp.act_left.size() != f.order() * gm.order()) return false;
  for (Element y = 0; y < f.order(); ++y)
    if (mp.right(gm.identity(), y) != y || mp.left(gm.identity(), y) != gm.identity()) return false;
  for (Element s = 0; s < gm.order(); ++s)
    if (mp.left(s, f.identity()) != s || mp.right(s, f.identity()) != f.identity()) return false;
  for (Element s = 0; s < gm.order(); ++s)
    for (Element x = 0; x < f.order(); ++x)
      for (Element y = 0; y < f.order(); ++y) {
        Element sx = mp.left(s, x);
        if (mp.right(s, f.mul(x, y)) != f.mul(mp.right(s, x), mp.right(sx, y))) return false;
        if (mp.left(s, f.mul(x, y)) != mp.left(sx, y)) return false;
      }
  for (Element s = 0; s < gm.order(); ++s)
    for (Element t = 0; t < gm.order(); ++t)
      for (Element y = 0; y < f.order(); ++y) {
        Element ty = mp.right(t, y);
        if (mp.right(gm.mul(s, t), y) != mp.right(s, ty)) return false;
        if (mp.left(gm.mul(s, t), y) != gm.mul(mp.left(s, ty), mp.left(t, y))) return false;
      }
  return true;
}

/// Group on F x Γ, element (x, s) at index x * |Γ| + s.
inline FiniteGroup zappa_szep(const MatchedPair& mp, const Limits& limits = {}) {
  if (!is_matched_pair(mp)) fail(ErrorKind::invalid_matched_pair, "actions violate the matched-pair compatibilities");
  const std::size_t nf = mp.F.order(), ng = mp.Gamma.order(), n = nf * ng;
  if (n > limits.table_cap) fail(ErrorKind::cap_exceeded, "bicrossed product exceeds table cap");
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < nf; ++x)
    for (Element s = 0; s < ng; ++s) {
      labels[x * ng + s] = "(" + mp.F.label(x) + "," + mp.Gamma.label(s) + ")";
      for (Element y = 0; y < nf; ++y)
        for (Element t = 0; t < ng; ++t) {
          Element first = mp.F.mul(x, mp.right(s, y));
          Element second = mp.Gamma.mul(mp.left(s, y), t);
          table[(x * ng + s) * n + (y * ng + t)] = first * static_cast<Element>(ng) + second;
        }
    }
  try {
    return FiniteGroup(std::move(table), std::move(labels), limits);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::cap_exceeded) throw;
    fail(ErrorKind::invalid_matched_pair, e.what());
  }
}

}  // namespace fjh
