#pragma once

// Upper central series, nilpotency and composition series of fusion rings.
//
// Every step of a composition series R_{i-1} ⊂ R_i is the neutral component of
// a faithful grading of R_i by a simple group. Such a neutral component always
// contains the adjoint of R_i, so the step is a quotient of the universal
// grading of R_i: R_{i-1} = ⊕_{h ∈ H} (R_i)_h for a maximal normal subgroup H
// of U(R_i). Enumerating those subgroups at each subring therefore reaches
// every composition series.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fjh/grading.hpp"

namespace fjh {

inline constexpr std::size_t default_series_cap = 10000;

struct CentralSeriesRecord {
  std::vector<Subring> chain;              // {1} = R_0 ⊂ R_1 ⊂ ... ⊂ R_n = R
  std::vector<FiniteGroup> factors;        // factors[i-1] grades R_i over R_{i-1}
  std::vector<GroupDescriptor> descriptors;

  std::size_t length() const noexcept { return factors.size(); }

  FactorMultiset factor_multiset() const {
    FactorMultiset f;
    for (const auto& d : descriptors) f.add(d);
    return f;
  }
};

/// C^(0) = C, C^(j) = (C^(j-1))_ad, until the trivial subring or a repeat.
inline std::vector<Subring> upper_central_series(const FusionRing& ring) {
  std::vector<Subring> chain{full_subring(ring)};
  const Subring one = trivial_subring(ring);
  while (chain.back() != one) {
    RestrictedRing r = restrict_to(ring, chain.back());
    Subring local = adjoint(r.ring);
    Subring next;
    for (Index i : local.members) next.members.push_back(r.to_parent[i]);
    std::sort(next.members.begin(), next.members.end());
    bool stable = next == chain.back();
    chain.push_back(std::move(next));
    if (stable) break;
  }
  return chain;
}

inline bool is_nilpotent(const FusionRing& ring) { return upper_central_series(ring).back().size() == 1; }

/// FP dimension Σ d_i^2 of a subring, from the parent's FP dimensions.
inline double subring_fpdim(const FPDimData& fp, const Subring& s) {
  double t = 0;
  for (Index i : s.members) t += fp.dims[i] * fp.dims[i];
  return t;
}

namespace detail {

/// Memoized tree of composition-series steps below each visited subring.
class SeriesExplorer {
 public:
  struct Step {
    Subring child;
    FiniteGroup factor;
    GroupDescriptor descriptor;
  };

  explicit SeriesExplorer(const FusionRing& ring) : ring_(ring), one_(trivial_subring(ring)) {}

  const std::vector<Step>& steps(const Subring& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    std::vector<Step> out;
    if (s != one_) {
      RestrictedRing r = restrict_to(ring_, s);
      Grading u = universal_grading(r.ring);
      if (u.group.order() == 1)
        fail(ErrorKind::not_nilpotent, "subring of rank " + std::to_string(s.size()) + " has trivial universal grading");
      for (const Subgroup& h : maximal_normal_subgroups(u.group)) {
        Subring child;
        for (Index i = 0; i < r.ring.rank(); ++i)
          if (h.contains(u.degree[i])) child.members.push_back(r.to_parent[i]);
        std::sort(child.members.begin(), child.members.end());
        FiniteGroup factor = quotient(u.group, h);
        GroupDescriptor d = describe(factor);
        out.push_back(Step{std::move(child), std::move(factor), std::move(d)});
      }
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

  /// Number of composition series below s; throws once the count passes cap.
  std::size_t count(const Subring& s, std::size_t cap) {
    if (auto it = counts_.find(s); it != counts_.end()) return it->second;
    std::size_t total = 0;
    if (s == one_) {
      total = 1;
    } else {
      // copy: recursion may rehash memo_
      std::vector<Subring> children;
      for (const auto& st : steps(s)) children.push_back(st.child);
      for (const auto& c : children) {
        total += count(c, cap);
        if (total > cap)
          fail(ErrorKind::cap_exceeded, "more than " + std::to_string(cap) + " composition series");
      }
    }
    counts_.emplace(s, total);
    return total;
  }

  const Subring& trivial() const noexcept { return one_; }
  std::size_t visited() const noexcept { return memo_.size(); }

 private:
  const FusionRing& ring_;
  Subring one_;
  std::map<Subring, std::vector<Step>> memo_;
  std::map<Subring, std::size_t> counts_;
};

inline CentralSeriesRecord record_from_path(const std::vector<Subring>& top_down,
                                            const std::vector<const SeriesExplorer::Step*>& path) {
  CentralSeriesRecord rec;
  rec.chain.assign(top_down.rbegin(), top_down.rend());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    rec.factors.push_back((*it)->factor);
    rec.descriptors.push_back((*it)->descriptor);
  }
  return rec;
}

inline void require_nilpotent(const FusionRing& ring) {
  if (!is_nilpotent(ring)) fail(ErrorKind::not_nilpotent, "upper central series does not reach the trivial subring");
}

}  // namespace detail

/// Greedy descent through the first maximal normal subgroup of each universal
/// grading group, ordered by (size, sorted elements).
inline CentralSeriesRecord canonical_composition_series(const FusionRing& ring) {
  detail::require_nilpotent(ring);
  detail::SeriesExplorer ex(ring);
  std::vector<Subring> top_down{full_subring(ring)};
  std::vector<const detail::SeriesExplorer::Step*> path;
  while (top_down.back() != ex.trivial()) {
    const auto& st = ex.steps(top_down.back());
    path.push_back(&st.front());
    top_down.push_back(st.front().child);
  }
  return detail::record_from_path(top_down, path);
}

inline std::size_t count_composition_series(const FusionRing& ring, std::size_t cap = default_series_cap) {
  detail::require_nilpotent(ring);
  detail::SeriesExplorer ex(ring);
  return ex.count(full_subring(ring), cap);
}

/// Every composition series, in depth-first order of the canonical child order.
inline std::vector<CentralSeriesRecord> all_composition_series(const FusionRing& ring,
                                                               std::size_t cap = default_series_cap) {
  detail::require_nilpotent(ring);
  detail::SeriesExplorer ex(ring);
  ex.count(full_subring(ring), cap);
  std::vector<CentralSeriesRecord> out;
  std::vector<Subring> top_down{full_subring(ring)};
  std::vector<const detail::SeriesExplorer::Step*> path;
  std::function<void()> walk = [&]() {
    if (top_down.back() == ex.trivial()) {
      out.push_back(detail::record_from_path(top_down, path));
      return;
    }
    const auto& st = ex.steps(top_down.back());
    for (const auto& step : st) {
      path.push_back(&step);
      top_down.push_back(step.child);
      walk();
      top_down.pop_back();
      path.pop_back();
    }
  };
  walk();
  return out;
}

inline FactorMultiset composition_factors(const FusionRing& ring) {
  return canonical_composition_series(ring).factor_multiset();
}

struct JordanHolderReport {
  std::size_t series_count = 0;
  bool pass = true;
  FactorMultiset factors;  // of the first series
  std::optional<std::pair<CentralSeriesRecord, CentralSeriesRecord>> counterexample;
};

inline JordanHolderReport jordan_holder_check(const FusionRing& ring, std::size_t cap = default_series_cap) {
  auto all = all_composition_series(ring, cap);
  JordanHolderReport rep;
  rep.series_count = all.size();
  if (all.empty()) {
    rep.pass = false;
    return rep;
  }
  rep.factors = all.front().factor_multiset();
  for (std::size_t s = 1; s < all.size(); ++s) {
    if (all[s].factor_multiset() != rep.factors) {
      rep.pass = false;
      rep.counterexample = std::make_pair(all.front(), all[s]);
      break;
    }
  }
  return rep;
}

/// The distinct factor multisets over all composition series, found by
/// dynamic programming over subrings instead of by listing series, so it
/// reaches rings whose series count is far above any enumeration cap. Throws
/// CapExceeded after visiting max_subrings subrings.
inline std::vector<FactorMultiset> distinct_factor_multisets(const FusionRing& ring, std::size_t max_subrings = 20000) {
  detail::require_nilpotent(ring);
  detail::SeriesExplorer ex(ring);
  std::map<Subring, std::vector<FactorMultiset>> memo;
  std::function<const std::vector<FactorMultiset>&(const Subring&)> visit =
      [&](const Subring& s) -> const std::vector<FactorMultiset>& {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    if (ex.visited() >= max_subrings)
      fail(ErrorKind::cap_exceeded, "more than " + std::to_string(max_subrings) + " subrings visited");
    std::vector<FactorMultiset> out;
    if (s == ex.trivial()) {
      out.emplace_back();
    } else {
      std::vector<std::pair<Subring, GroupDescriptor>> children;
      for (const auto& st : ex.steps(s)) children.emplace_back(st.child, st.descriptor);
      for (const auto& [child, d] : children)
        for (FactorMultiset f : visit(child)) {
          f.add(d);
          if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
        }
    }
    return memo.emplace(s, std::move(out)).first->second;
  };
  return visit(full_subring(ring));
}

// ---------------------------------------------------------------------------
// arbitrary series and refinement

namespace detail {

/// For R_lo ⊂ R_hi: the universal grading of R_hi restricted to indices of R_hi,
/// and N = degrees hit by R_lo. Throws InvalidSeries unless R_lo is the neutral
/// component of the U/N grading.
struct StepGrading {
  RestrictedRing hi;
  Grading universal;
  Subgroup normal;
};

inline StepGrading analyze_step(const FusionRing& ring, const Subring& lo, const Subring& hi) {
  if (!is_subring(ring, lo) || !is_subring(ring, hi)) fail(ErrorKind::invalid_series, "chain entry is not a subring");
  if (!std::includes(hi.members.begin(), hi.members.end(), lo.members.begin(), lo.members.end()))
    fail(ErrorKind::invalid_series, "chain is not nested");
  StepGrading sg{restrict_to(ring, hi), Grading{}, Subgroup{}};
  sg.universal = universal_grading(sg.hi.ring);
  std::vector<Element> hit;
  for (Index a = 0; a < sg.hi.ring.rank(); ++a)
    if (lo.contains(sg.hi.to_parent[a])) hit.push_back(sg.universal.degree[a]);
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  sg.normal = Subgroup{hit};
  if (!is_subgroup(sg.universal.group, hit) || !is_normal(sg.universal.group, sg.normal))
    fail(ErrorKind::invalid_series, "lower term is not the neutral component of a faithful grading");
  for (Index a = 0; a < sg.hi.ring.rank(); ++a)
    if (sg.normal.contains(sg.universal.degree[a]) != lo.contains(sg.hi.to_parent[a]))
      fail(ErrorKind::invalid_series, "lower term is not a union of components");
  return sg;
}

}  // namespace detail

/// Checks chain shape, each step's grading, and the FP dimension ratios.
inline void check_series(const FusionRing& ring, const CentralSeriesRecord& rec, double tolerance = 1e-6) {
  if (rec.chain.empty() || rec.chain.front() != trivial_subring(ring) || rec.chain.back() != full_subring(ring))
    fail(ErrorKind::invalid_series, "chain must run from the trivial subring to the whole ring");
  if (rec.factors.size() + 1 != rec.chain.size() || rec.descriptors.size() != rec.factors.size())
    fail(ErrorKind::invalid_series, "factor count must equal chain length");
  FPDimData fp = fpdim(ring);
  for (std::size_t i = 1; i < rec.chain.size(); ++i) {
    auto sg = detail::analyze_step(ring, rec.chain[i - 1], rec.chain[i]);
    FiniteGroup q = quotient(sg.universal.group, sg.normal);
    if (!is_isomorphic(q, rec.factors[i - 1]))
      fail(ErrorKind::invalid_series, "step " + std::to_string(i) + " factor does not match its grading group");
    double ratio = subring_fpdim(fp, rec.chain[i]) / subring_fpdim(fp, rec.chain[i - 1]);
    if (std::abs(ratio - static_cast<double>(rec.factors[i - 1].order())) > tolerance)
      fail(ErrorKind::invalid_series, "FPdim ratio differs from the factor order at step " + std::to_string(i));
  }
}

/// The upper central series read bottom-up as a series with factors U(R_i).
inline CentralSeriesRecord upper_central_record(const FusionRing& ring) {
  detail::require_nilpotent(ring);
  auto ucs = upper_central_series(ring);
  CentralSeriesRecord rec;
  rec.chain.assign(ucs.rbegin(), ucs.rend());
  for (std::size_t i = 1; i < rec.chain.size(); ++i) {
    auto sg = detail::analyze_step(ring, rec.chain[i - 1], rec.chain[i]);
    rec.factors.push_back(quotient(sg.universal.group, sg.normal));
    rec.descriptors.push_back(describe(rec.factors.back()));
  }
  return rec;
}

/// Expands every non-simple step through a composition series of its factor,
/// pulled back to subgroups of the step's universal grading group.
inline CentralSeriesRecord refine_central_series(const FusionRing& ring, const CentralSeriesRecord& rec) {
  check_series(ring, rec);
  CentralSeriesRecord out;
  out.chain.push_back(rec.chain.front());
  for (std::size_t i = 1; i < rec.chain.size(); ++i) {
    if (rec.descriptors[i - 1].is_simple()) {
      out.chain.push_back(rec.chain[i]);
      out.factors.push_back(rec.factors[i - 1]);
      out.descriptors.push_back(rec.descriptors[i - 1]);
      continue;
    }
    auto sg = detail::analyze_step(ring, rec.chain[i - 1], rec.chain[i]);
    const FiniteGroup& u = sg.universal.group;
    QuotientMap q = quotient_map(u, sg.normal);
    GroupCompositionSeries cs = composition_series_group(q.group);
    for (std::size_t j = 1; j < cs.chain.size(); ++j) {
      Subgroup pre;
      for (Element x = 0; x < u.order(); ++x)
        if (cs.chain[j].contains(q.coset[x])) pre.members.push_back(x);
      Subring sub;
      for (Index a = 0; a < sg.hi.ring.rank(); ++a)
        if (pre.contains(sg.universal.degree[a])) sub.members.push_back(sg.hi.to_parent[a]);
      std::sort(sub.members.begin(), sub.members.end());
      FiniteGroup top = induced_group(q.group, cs.chain[j]);
      Subgroup below;
      for (std::size_t t = 0; t < cs.chain[j].size(); ++t)
        if (cs.chain[j - 1].contains(cs.chain[j].members[t])) below.members.push_back(static_cast<Element>(t));
      out.chain.push_back(std::move(sub));
      out.factors.push_back(quotient(top, below));
      out.descriptors.push_back(cs.factors[j - 1]);
    }
  }
  return out;
}

}  // namespace fjh
