#pragma once

// Fusion rings: based rings with nonnegative integer structure constants
// N_{ij}^k, a unit, and a duality involution.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fjh/error.hpp"

namespace fjh {

using Index = std::uint32_t;

/// One structure constant N_{ij}^k = n.
struct Coefficient {
  Index i, j, k;
  std::uint64_t n;
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// Constituent k of a product with multiplicity n.
struct Term {
  Index k;
  std::uint64_t n;
  friend bool operator==(const Term&, const Term&) = default;
};

class FusionRing {
 public:
  /// Enforces structural well-formedness only: index ranges, distinct labels,
  /// an involutive dual, positive and non-duplicated coefficients. The ring
  /// axioms are checked by validate().
  FusionRing(std::size_t rank, std::vector<std::string> labels, Index unit, std::vector<Index> dual,
             std::span<const Coefficient> coeffs)
      : rank_(rank), labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), products_(rank * rank) {
    if (rank == 0) fail(ErrorKind::invalid_input, "rank must be positive");
    if (labels_.empty()) {
      for (std::size_t i = 0; i < rank; ++i) labels_.push_back("x" + std::to_string(i));
    }
    if (labels_.size() != rank) fail(ErrorKind::invalid_input, "label count differs from rank");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != rank)
      fail(ErrorKind::invalid_input, "labels must be distinct");
    if (unit >= rank) fail(ErrorKind::invalid_input, "unit index out of range");
    if (dual_.size() != rank) fail(ErrorKind::invalid_input, "dual list length differs from rank");
    for (std::size_t i = 0; i < rank; ++i) {
      if (dual_[i] >= rank) fail(ErrorKind::invalid_input, "dual index out of range");
      if (dual_[dual_[i]] != i) fail(ErrorKind::invalid_input, "dual is not an involution");
    }
    for (const auto& c : coeffs) {
      if (c.i >= rank || c.j >= rank || c.k >= rank)
        fail(ErrorKind::invalid_input, "coefficient index out of range");
      if (c.n == 0) fail(ErrorKind::invalid_input, "coefficient multiplicity must be at least 1");
      products_[c.i * rank + c.j].push_back(Term{c.k, c.n});
    }
    for (std::size_t p = 0; p < products_.size(); ++p) {
      auto& terms = products_[p];
      std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
      for (std::size_t t = 1; t < terms.size(); ++t)
        if (terms[t].k == terms[t - 1].k)
          fail(ErrorKind::invalid_input, "duplicate coefficient (" + std::to_string(p / rank) + "," +
                                             std::to_string(p % rank) + "," + std::to_string(terms[t].k) + ")");
    }
  }

  std::size_t rank() const noexcept { return rank_; }
  Index unit() const noexcept { return unit_; }
  Index dual(Index i) const { return dual_[i]; }
  const std::vector<Index>& duals() const noexcept { return dual_; }
  const std::string& label(Index i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Constituents of i ⊗ j sorted by index.
  std::span<const Term> product(Index i, Index j) const { return products_[i * rank_ + j]; }

  std::uint64_t coeff(Index i, Index j, Index k) const {
    auto terms = product(i, j);
    auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const Term& t, Index key) { return t.k < key; });
    return it != terms.end() && it->k == k ? it->n : 0;
  }

  std::vector<Coefficient> coefficients() const {
    std::vector<Coefficient> out;
    for (Index i = 0; i < rank_; ++i)
      for (Index j = 0; j < rank_; ++j)
        for (const auto& t : product(i, j)) out.push_back({i, j, t.k, t.n});
    return out;
  }

  std::optional<Index> find_label(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
  }

 private:
  std::size_t rank_;
  std::vector<std::string> labels_;
  Index unit_;
  std::vector<Index> dual_;
  std::vector<std::vector<Term>> products_;
};

// ---------------------------------------------------------------------------
// validation

enum class Axiom { unit, associativity, duality, reciprocity, overflow };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::unit: return "unit";
    case Axiom::associativity: return "associativity";
    case Axiom::duality: return "duality";
    case Axiom::reciprocity: return "reciprocity";
    case Axiom::overflow: return "overflow";
  }
  return "unknown";
}

struct Violation {
  Axiom axiom;
  std::string message;
  std::vector<Index> witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;  // one per violated axiom class

  bool violates(Axiom a) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == a; });
  }
};

namespace detail {

inline bool checked_mul_add(std::uint64_t& acc, std::uint64_t a, std::uint64_t b) {
  std::uint64_t p;
  if (__builtin_mul_overflow(a, b, &p)) return false;
  return !__builtin_add_overflow(acc, p, &acc);
}

}  // namespace detail

inline ValidationReport validate(const FusionRing& ring) {
  ValidationReport report;
  auto note = [&](Axiom a, std::string msg, std::vector<Index> witness) {
    if (report.violates(a)) return;
    report.ok = false;
    report.violations.push_back({a, std::move(msg), std::move(witness)});
  };
  const Index n = static_cast<Index>(ring.rank());
  const Index one = ring.unit();

  for (Index j = 0; j < n; ++j) {
    for (bool left : {true, false}) {
      auto terms = left ? ring.product(one, j) : ring.product(j, one);
      if (terms.size() != 1 || terms[0].k != j || terms[0].n != 1) {
        Index bad = terms.empty() ? j : (terms[0].k != j ? terms[0].k : (terms.size() > 1 ? terms[1].k : j));
        note(Axiom::unit, std::string(left ? "1 ⊗ x" : "x ⊗ 1") + " differs from x",
             left ? std::vector<Index>{one, j, bad} : std::vector<Index>{j, one, bad});
      }
    }
  }

  if (ring.dual(one) != one) note(Axiom::duality, "dual(unit) differs from unit", {one});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::uint64_t expect = j == ring.dual(i) ? 1 : 0;
      if (ring.coeff(i, j, one) != expect)
        note(Axiom::duality, "N_{ij}^1 differs from δ_{j,i*}", {i, j, one});
    }

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& t : ring.product(i, j)) {
        if (ring.coeff(ring.dual(i), t.k, j) != t.n)
          note(Axiom::reciprocity, "N_{ij}^k differs from N_{i*k}^j", {i, j, t.k});
        if (ring.coeff(t.k, ring.dual(j), i) != t.n)
          note(Axiom::reciprocity, "N_{ij}^k differs from N_{kj*}^i", {i, j, t.k});
      }

  // (i j) k against i (j k), accumulated densely over l
  std::vector<std::uint64_t> lhs(n, 0), rhs(n, 0);
  std::vector<Index> touched;
  bool overflowed = false;
  for (Index i = 0; i < n && !overflowed; ++i)
    for (Index j = 0; j < n && !overflowed; ++j)
      for (Index k = 0; k < n && !overflowed; ++k) {
        touched.clear();
        for (const auto& m : ring.product(i, j))
          for (const auto& l : ring.product(m.k, k)) {
            if (!detail::checked_mul_add(lhs[l.k], m.n, l.n)) overflowed = true;
            touched.push_back(l.k);
          }
        for (const auto& m : ring.product(j, k))
          for (const auto& l : ring.product(i, m.k)) {
            if (!detail::checked_mul_add(rhs[l.k], m.n, l.n)) overflowed = true;
            touched.push_back(l.k);
          }
        if (overflowed) {
          note(Axiom::overflow, "associativity sum overflows 64 bits", {i, j, k});
          break;
        }
        for (Index l : touched) {
          if (lhs[l] != rhs[l]) note(Axiom::associativity, "(x_i x_j) x_k differs from x_i (x_j x_k)", {i, j, k, l});
        }
        for (Index l : touched) lhs[l] = rhs[l] = 0;
      }
  return report;
}

// ---------------------------------------------------------------------------
// Frobenius-Perron dimensions

struct FPDimData {
  std::vector<double> dims;
  double total = 0;       // Σ d_i^2
  double tolerance = 0;   // convergence tolerance used
};

struct FPDimOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 1000000;
  double eigen_check = 1e-9;
};

/// Largest eigenvalue of (N_i)_{jk} = N_{ij}^k by power iteration from the
/// all-ones vector. The iteration runs on N_i + I, which has the same Perron
/// vector and no other eigenvalue of equal modulus.
inline double perron_eigenvalue(const FusionRing& ring, Index i, const FPDimOptions& opts = {}) {
  const std::size_t n = ring.rank();
  std::vector<double> x(n, 1.0), y(n);
  double lambda = 0;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    for (Index j = 0; j < n; ++j) {
      double s = x[j];
      for (const auto& t : ring.product(i, j)) s += static_cast<double>(t.n) * x[t.k];
      y[j] = s;
    }
    double peak = *std::max_element(y.begin(), y.end());
    double diff = 0;
    for (std::size_t j = 0; j < n; ++j) {
      y[j] /= peak;
      diff = std::max(diff, std::abs(y[j] - x[j]));
    }
    x.swap(y);
    lambda = peak;
    if (diff < opts.tolerance) return lambda - 1.0;
  }
  fail(ErrorKind::non_convergence, "power iteration for " + ring.label(i) + " did not converge in " +
                                       std::to_string(opts.max_iterations) + " iterations");
}

inline FPDimData fpdim(const FusionRing& ring, const FPDimOptions& opts = {}) {
  FPDimData data;
  data.tolerance = opts.tolerance;
  const Index n = static_cast<Index>(ring.rank());
  for (Index i = 0; i < n; ++i) data.dims.push_back(perron_eigenvalue(ring, i, opts));
  for (double d : data.dims) data.total += d * d;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      double s = 0;
      for (const auto& t : ring.product(i, j)) s += static_cast<double>(t.n) * data.dims[t.k];
      if (std::abs(s - data.dims[i] * data.dims[j]) > opts.eigen_check * std::max(1.0, data.dims[i] * data.dims[j]))
        fail(ErrorKind::non_convergence, "FP vector fails the eigen-equation at (" + ring.label(i) + "," +
                                             ring.label(j) + ")");
    }
  return data;
}

/// Indices i with i ⊗ i* = 1.
inline std::vector<Index> invertibles(const FusionRing& ring) {
  std::vector<Index> out;
  for (Index i = 0; i < ring.rank(); ++i) {
    auto terms = ring.product(i, ring.dual(i));
    if (terms.size() == 1 && terms[0].k == ring.unit() && terms[0].n == 1) out.push_back(i);
  }
  return out;
}

inline bool is_pointed(const FusionRing& ring) { return invertibles(ring).size() == ring.rank(); }

/// The rank-one ring.
inline FusionRing unit_ring() {
  Coefficient c{0, 0, 0, 1};
  return FusionRing(1, {"1"}, 0, {0}, std::span<const Coefficient>(&c, 1));
}

}  // namespace fjh
