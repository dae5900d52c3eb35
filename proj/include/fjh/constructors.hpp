#pragma once

// Fusion rings built from group data, and the group-level factor evaluators.
//
// Associators never enter a Grothendieck ring, so the 3-cocycles that twist
// pointed categories and Drinfeld doubles are dropped: pointed_ring(G) is the
// ring of C(G, ω) for every ω, and double_ring(G) that of D^ω(G).
//
// The morita_factors_* functions compute composition factors from the group
// alone. They give the expected answer for the categories named in their
// comments without touching any fusion ring, and serve as an independent
// check on the ring-level series computations.

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "fjh/character_table.hpp"
#include "fjh/fusion_ring.hpp"
#include "fjh/matched_pair.hpp"

namespace fjh {

inline constexpr double default_integrality_tolerance = 1e-6;

/// N_{gh}^k = δ_{k,gh}; dual is the inverse.
inline FusionRing pointed_ring(const FiniteGroup& g) {
  std::vector<Coefficient> c;
  std::vector<Index> dual;
  for (Element a = 0; a < g.order(); ++a) {
    dual.push_back(g.inv(a));
    for (Element b = 0; b < g.order(); ++b) c.push_back({a, b, g.mul(a, b), 1});
  }
  return FusionRing(g.order(), g.labels(), g.identity(), std::move(dual), c);
}

namespace detail {

inline std::uint64_t round_coefficient(Complex v, double tol) {
  double r = std::round(v.real());
  if (std::abs(v - Complex(r, 0)) > tol || r < 0)
    fail(ErrorKind::non_integral_coefficient,
         "fusion coefficient " + std::to_string(v.real()) + "+" + std::to_string(v.imag()) + "i is not an integer");
  return static_cast<std::uint64_t>(r);
}

/// Dual of each basis element read off N_{ij}^1 = δ_{j,i*}.
inline std::vector<Index> duals_from_unit(std::size_t rank, Index unit, const std::vector<Coefficient>& coeffs) {
  std::vector<Index> dual(rank, static_cast<Index>(-1));
  for (const auto& c : coeffs)
    if (c.k == unit) {
      if (c.n != 1 || dual[c.i] != static_cast<Index>(-1))
        fail(ErrorKind::internal_inconsistency, "unit appears in a product with the wrong multiplicity");
      dual[c.i] = c.j;
    }
  for (Index d : dual)
    if (d == static_cast<Index>(-1)) fail(ErrorKind::internal_inconsistency, "basis element without a dual");
  return dual;
}

}  // namespace detail

/// Irreducible characters with N_{ij}^k = <χ_i χ_j, χ_k>.
inline FusionRing rep_ring(const FiniteGroup& g, const CharacterTableOptions& opts = {}, const Limits& limits = {}) {
  CharacterTable t = character_table(g, opts, limits);
  const std::size_t r = t.size();
  std::vector<Coefficient> coeffs;
  std::vector<Complex> prod(t.classes.size());
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < prod.size(); ++c) prod[c] = t.values[i][c] * t.values[j][c];
      for (Index k = 0; k < r; ++k) {
        std::uint64_t n = detail::round_coefficient(t.inner(prod, t.values[k]), opts.integrality_tolerance);
        if (n) coeffs.push_back({i, j, k, n});
      }
    }
  auto dual = detail::duals_from_unit(r, 0, coeffs);
  return FusionRing(r, irrep_labels(t), 0, std::move(dual), coeffs);
}

/// Irreducibles of the Drinfeld double, indexed by (class [a], irreducible π of C_G(a)).
///
/// A representation is a function on commuting pairs (x, g): its character at
/// δ_x g. For x = t^-1 a t the irreducible ([a], π) has value χ_π(t g t^-1).
/// The coproduct Δ(δ_x g) = Σ_{yz=x} δ_y g ⊗ δ_z g makes tensor products a
/// convolution in x and pointwise in g, and the characters are orthonormal for
/// (1/|G|) Σ_{xg=gx} φ(x, g) conj(ψ(x, g)).
inline FusionRing double_ring(const FiniteGroup& g, const CharacterTableOptions& opts = {},
                              const Limits& limits = {}) {
  if (g.order() > limits.table_cap) fail(ErrorKind::cap_exceeded, "group exceeds table cap");
  const std::size_t n = g.order();
  const auto classes = conjugacy_classes(g);
  const auto class_of = class_index(g, classes);

  // commuting pairs (x, g) numbered x-major; pair_at[x * n + h] or -1
  std::vector<std::int64_t> pair_at(n * n, -1);
  std::vector<std::vector<Element>> cent(n);
  std::size_t pairs = 0;
  for (Element x = 0; x < n; ++x)
    for (Element h = 0; h < n; ++h)
      if (g.mul(x, h) == g.mul(h, x)) {
        pair_at[x * n + h] = static_cast<std::int64_t>(pairs++);
        cent[x].push_back(h);
      }

  struct Simple {
    std::size_t cls;
    std::vector<Complex> values;  // indexed by pair number; zero off the class
  };
  std::vector<Simple> simples;
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> by_class(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Element a = classes[c].front();
    Subgroup ca = centralizer(g, a);
    FiniteGroup cg = induced_group(g, ca);
    CharacterTable ct = character_table(cg, opts, limits);
    auto names = irrep_labels(ct);
    // t_x with t_x x t_x^-1 = a
    std::map<Element, Element> transporter;
    for (Element t = 0; t < n; ++t) transporter.emplace(g.conj(g.inv(t), a), t);
    for (std::size_t p = 0; p < ct.size(); ++p) {
      Simple s{c, std::vector<Complex>(pairs)};
      for (Element x : classes[c]) {
        Element t = transporter.at(x);
        for (Element h : cent[x]) {
          Element image = g.conj(t, h);
          auto local = std::lower_bound(ca.members.begin(), ca.members.end(), image) - ca.members.begin();
          s.values[static_cast<std::size_t>(pair_at[x * n + h])] = ct.at(p, static_cast<Element>(local));
        }
      }
      by_class[c].push_back(static_cast<Index>(simples.size()));
      simples.push_back(std::move(s));
      labels.push_back("(" + g.label(a) + "," + names[p] + ")");
    }
  }

  const std::size_t rank = simples.size();
  std::vector<Coefficient> coeffs;
  std::vector<Complex> prod(pairs);
  std::vector<char> touched(classes.size());
  for (Index i = 0; i < rank; ++i)
    for (Index j = 0; j < rank; ++j) {
      std::fill(prod.begin(), prod.end(), Complex(0, 0));
      std::fill(touched.begin(), touched.end(), 0);
      const auto& vi = simples[i].values;
      const auto& vj = simples[j].values;
      for (Element y : classes[simples[i].cls])
        for (Element z : classes[simples[j].cls]) {
          Element x = g.mul(y, z);
          touched[class_of[x]] = 1;
          for (Element h : cent[y]) {
            std::int64_t pz = pair_at[z * n + h];
            if (pz < 0) continue;
            prod[static_cast<std::size_t>(pair_at[x * n + h])] +=
                vi[static_cast<std::size_t>(pair_at[y * n + h])] * vj[static_cast<std::size_t>(pz)];
          }
        }
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (!touched[c]) continue;
        for (Index k : by_class[c]) {
          Complex s = 0;
          for (Element x : classes[c])
            for (Element h : cent[x]) {
              auto p = static_cast<std::size_t>(pair_at[x * n + h]);
              s += prod[p] * std::conj(simples[k].values[p]);
            }
          std::uint64_t m = detail::round_coefficient(s / static_cast<double>(n), opts.integrality_tolerance);
          if (m) coeffs.push_back({i, j, k, m});
        }
      }
    }
  auto dual = detail::duals_from_unit(rank, 0, coeffs);
  return FusionRing(rank, std::move(labels), 0, std::move(dual), coeffs);
}

/// Basis pairs (a, b) at index a * rank(S) + b, coefficients multiplied.
inline FusionRing deligne_product(const FusionRing& r, const FusionRing& s) {
  const std::size_t m = s.rank();
  auto at = [m](Index a, Index b) { return static_cast<Index>(a * m + b); };
  std::vector<std::string> labels;
  std::vector<Index> dual;
  for (Index a = 0; a < r.rank(); ++a)
    for (Index b = 0; b < m; ++b) {
      labels.push_back("(" + r.label(a) + "," + s.label(b) + ")");
      dual.push_back(at(r.dual(a), s.dual(b)));
    }
  std::vector<Coefficient> coeffs;
  for (const auto& x : r.coefficients())
    for (const auto& y : s.coefficients()) coeffs.push_back({at(x.i, y.i), at(x.j, y.j), at(x.k, y.k), x.n * y.n});
  return FusionRing(r.rank() * m, std::move(labels), at(r.unit(), s.unit()), std::move(dual), coeffs);
}

/// A ∪ {m}: a ⊗ b = ab, a ⊗ m = m ⊗ a = m, m ⊗ m = Σ_a a.
inline FusionRing tambara_yamagami(const FiniteGroup& a) {
  if (!a.is_abelian()) fail(ErrorKind::not_abelian, "Tambara-Yamagami rings need an abelian group");
  const Index k = static_cast<Index>(a.order());
  const Index m = k;
  std::vector<Coefficient> coeffs;
  std::vector<Index> dual;
  for (Element x = 0; x < k; ++x) {
    dual.push_back(a.inv(x));
    for (Element y = 0; y < k; ++y) coeffs.push_back({x, y, a.mul(x, y), 1});
    coeffs.push_back({x, m, m, 1});
    coeffs.push_back({m, x, m, 1});
    coeffs.push_back({m, m, x, 1});
  }
  dual.push_back(m);
  auto labels = a.labels();
  std::string name = "m";
  while (std::find(labels.begin(), labels.end(), name) != labels.end()) name += "'";
  labels.push_back(name);
  return FusionRing(k + 1, std::move(labels), a.identity(), std::move(dual), coeffs);
}

/// N'_{ij}^k = N_{ji}^k.
inline FusionRing opposite_ring(const FusionRing& r) {
  auto coeffs = r.coefficients();
  for (auto& c : coeffs) std::swap(c.i, c.j);
  return FusionRing(r.rank(), r.labels(), r.unit(), r.duals(), coeffs);
}

// ---------------------------------------------------------------------------
// group-level evaluators (no fusion ring is built)

/// Categories Morita equivalent to Rep G or Vec_G: the composition factors of G.
inline FactorMultiset morita_factors_rep(const FiniteGroup& g, const Limits& limits = {}) {
  return composition_factors_group(g, limits);
}

/// Drinfeld center of Rep G or Vec_G: every factor of G twice.
inline FactorMultiset morita_factors_double(const FiniteGroup& g, const Limits& limits = {}) {
  return doubled(composition_factors_group(g, limits));
}

/// Representations of a bicrossed product Hopf algebra: the factors of F ⋈ Γ.
inline FactorMultiset morita_factors_bicrossed(const MatchedPair& mp, const Limits& limits = {}) {
  return composition_factors_group(zappa_szep(mp, limits), limits);
}

/// A G-extension or G-equivariantization of a category with factors d.
inline FactorMultiset extension_factors(const FactorMultiset& d, const FiniteGroup& g, const Limits& limits = {}) {
  FactorMultiset out = d;
  out.merge(composition_factors_group(g, limits));
  return out;
}

}  // namespace fjh
