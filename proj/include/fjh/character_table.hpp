#pragma once

// Character tables by the class-sum method: the central characters are the
// common eigenvectors of the class-multiplication matrices, separated by
// diagonalizing one random real combination of them.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fjh/subgroups.hpp"

namespace fjh {

using Complex = std::complex<double>;

inline constexpr std::uint64_t default_seed = 20151123;

struct CharacterTable {
  std::size_t group_order = 1;
  std::vector<std::vector<Element>> classes;  // classes[0] is the identity class
  std::vector<std::size_t> class_of;          // element -> class
  std::vector<std::size_t> degrees;           // per irreducible
  std::vector<std::vector<Complex>> values;   // [irreducible][class]; row 0 is trivial

  std::size_t size() const noexcept { return degrees.size(); }
  Complex at(std::size_t irrep, Element g) const { return values[irrep][class_of[g]]; }

  /// Class-weighted inner product (1/|G|) Σ_C |C| a(C) conj(b(C)).
  Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) const {
    Complex s = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      s += static_cast<double>(classes[c].size()) * a[c] * std::conj(b[c]);
    return s / static_cast<double>(group_order);
  }
};

struct CharacterTableOptions {
  std::uint64_t seed = default_seed;
  std::size_t max_attempts = 32;
  double orthogonality_tolerance = 1e-8;
  double integrality_tolerance = 1e-6;
};

inline CharacterTable character_table(const FiniteGroup& g, const CharacterTableOptions& opts = {},
                                      const Limits& limits = {}) {
  if (g.order() > limits.table_cap) fail(ErrorKind::cap_exceeded, "group exceeds table cap");
  CharacterTable t;
  t.group_order = g.order();
  t.classes = conjugacy_classes(g);
  t.class_of = class_index(g, t.classes);
  const std::size_t r = t.classes.size();
  const double n = static_cast<double>(g.order());

  // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}, z_k the representative of C_k
  std::vector<Eigen::MatrixXd> mats(r, Eigen::MatrixXd::Zero(r, r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      Element z = t.classes[k].front();
      for (Element x : t.classes[i]) mats[i](t.class_of[g.mul(g.inv(x), z)], k) += 1.0;
    }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
    for (std::size_t i = 0; i < r; ++i) m += coef(rng) * mats[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) continue;
    const auto lambda = solver.eigenvalues();
    double scale = 1.0;
    for (Eigen::Index a = 0; a < lambda.size(); ++a) scale = std::max(scale, std::abs(lambda[a]));
    bool separated = true;
    for (Eigen::Index a = 0; a < lambda.size() && separated; ++a)
      for (Eigen::Index b = a + 1; b < lambda.size() && separated; ++b)
        separated = std::abs(lambda[a] - lambda[b]) > 1e-6 * scale;
    if (!separated) continue;

    const auto vecs = solver.eigenvectors();
    std::vector<std::vector<Complex>> rows;
    std::vector<std::size_t> degs;
    bool ok = true;
    for (Eigen::Index a = 0; a < vecs.cols() && ok; ++a) {
      Complex lead = vecs(0, a);
      if (std::abs(lead) < 1e-12) {
        ok = false;
        break;
      }
      // central character ω, with ω(identity class) = 1
      std::vector<Complex> omega(r);
      for (std::size_t k = 0; k < r; ++k) omega[k] = vecs(static_cast<Eigen::Index>(k), a) / lead;
      double s = 0;
      for (std::size_t k = 0; k < r; ++k) s += std::norm(omega[k]) / static_cast<double>(t.classes[k].size());
      double d = std::sqrt(n / s);
      double rounded = std::round(d);
      if (std::abs(d - rounded) > opts.integrality_tolerance || rounded < 1) {
        ok = false;
        break;
      }
      std::vector<Complex> chi(r);
      for (std::size_t k = 0; k < r; ++k) chi[k] = rounded * omega[k] / static_cast<double>(t.classes[k].size());
      chi[0] = rounded;
      rows.push_back(std::move(chi));
      degs.push_back(static_cast<std::size_t>(rounded));
    }
    if (!ok) continue;
    std::size_t sum_sq = 0;
    for (auto d : degs) sum_sq += d * d;
    if (sum_sq != g.order()) continue;

    // canonical order: trivial first, then by degree, then by rounded values
    std::vector<std::size_t> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto is_trivial = [&](std::size_t a) {
      for (const auto& v : rows[a])
        if (std::abs(v - Complex(1, 0)) > 1e-6) return false;
      return true;
    };
    auto key = [&](std::size_t a) {
      std::vector<std::pair<long long, long long>> kv;
      for (const auto& v : rows[a])
        kv.emplace_back(std::llround(-v.real() * 1e6), std::llround(-v.imag() * 1e6));
      return kv;
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      bool ta = is_trivial(a), tb = is_trivial(b);
      if (ta != tb) return ta;
      if (degs[a] != degs[b]) return degs[a] < degs[b];
      return key(a) < key(b);
    });
    t.values.clear();
    t.degrees.clear();
    for (auto a : perm) {
      t.values.push_back(rows[a]);
      t.degrees.push_back(degs[a]);
    }
    for (std::size_t a = 0; a < r && ok; ++a)
      for (std::size_t b = 0; b < r && ok; ++b) {
        Complex ip = t.inner(t.values[a], t.values[b]);
        ok = std::abs(ip - (a == b ? Complex(1, 0) : Complex(0, 0))) <= opts.orthogonality_tolerance;
      }
    if (!ok) continue;
    return t;
  }
  fail(ErrorKind::degenerate_combination,
       "no separating combination found in " + std::to_string(opts.max_attempts) + " attempts");
}

/// Labels irreducibles by degree and a per-degree letter: 1a, 1b, 2a, ...
inline std::vector<std::string> irrep_labels(const CharacterTable& t) {
  std::vector<std::string> labels;
  std::map<std::size_t, std::size_t> seen;
  for (auto d : t.degrees) {
    std::size_t k = seen[d]++;
    std::string suffix = k < 26 ? std::string(1, static_cast<char>('a' + k)) : "_" + std::to_string(k);
    labels.push_back(std::to_string(d) + suffix);
  }
  return labels;
}

}  // namespace fjh
