#pragma once

// JSON forms of rings, groups, subrings, gradings, series and reports.
//
// Ring file: {"rank", "labels", "unit", "dual", "N": [[i, j, k, n], ...]}.
// Group file: {"degree", "generators": [[0-based images], ...]} or
// {"cayley": [[...], ...], "labels": [...]}.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fjh/series.hpp"

namespace fjh {

using json = nlohmann::json;

inline constexpr const char* schema_version = "fjh/1";

namespace detail {

inline std::uint64_t get_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(ErrorKind::invalid_input, std::string(what) + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::invalid_input, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

inline void require_array(const json& v, const char* what) {
  if (!v.is_array()) fail(ErrorKind::invalid_input, std::string(what) + " must be an array");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// rings

inline json to_json(const FusionRing& r) {
  json n = json::array();
  for (const auto& c : r.coefficients()) n.push_back({c.i, c.j, c.k, c.n});
  return json{{"rank", r.rank()}, {"labels", r.labels()}, {"unit", r.unit()}, {"dual", r.duals()}, {"N", n}};
}

inline FusionRing ring_from_json(const json& j) {
  const std::uint64_t rank = detail::get_index(detail::field(j, "rank"), "rank");
  if (rank == 0 || rank > 4096) fail(ErrorKind::invalid_input, "rank must lie in 1..4096");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    detail::require_array(j.at("labels"), "labels");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) fail(ErrorKind::invalid_input, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  Index unit = static_cast<Index>(detail::get_index(detail::field(j, "unit"), "unit"));
  const json& dj = detail::field(j, "dual");
  detail::require_array(dj, "dual");
  std::vector<Index> dual;
  for (const auto& d : dj) {
    auto v = detail::get_index(d, "dual entry");
    if (v >= rank) fail(ErrorKind::invalid_input, "dual index out of range");
    dual.push_back(static_cast<Index>(v));
  }
  const json& nj = detail::field(j, "N");
  detail::require_array(nj, "N");
  std::vector<Coefficient> coeffs;
  for (const auto& q : nj) {
    if (!q.is_array() || q.size() != 4) fail(ErrorKind::invalid_input, "each N entry must be [i, j, k, n]");
    std::uint64_t v[4];
    for (int t = 0; t < 4; ++t) v[t] = detail::get_index(q[t], "N entry");
    for (int t = 0; t < 3; ++t)
      if (v[t] >= rank) fail(ErrorKind::invalid_input, "N index out of range");
    coeffs.push_back({static_cast<Index>(v[0]), static_cast<Index>(v[1]), static_cast<Index>(v[2]), v[3]});
  }
  return FusionRing(rank, std::move(labels), unit, std::move(dual), coeffs);
}

// ---------------------------------------------------------------------------
// groups

inline json to_json(const FiniteGroup& g) { return json{{"cayley", g.cayley()}, {"labels", g.labels()}}; }

inline FiniteGroup group_from_json(const json& j, const Limits& limits = {}) {
  if (j.contains("cayley")) {
    const json& rows = j.at("cayley");
    detail::require_array(rows, "cayley");
    const std::size_t n = rows.size();
    if (n == 0 || n > limits.table_cap) fail(ErrorKind::invalid_input, "cayley table size out of range");
    std::vector<Element> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) fail(ErrorKind::invalid_input, "cayley table must be square");
      for (const auto& v : row) table.push_back(static_cast<Element>(detail::get_index(v, "cayley entry")));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup(std::move(table), std::move(labels), limits);
  }
  const std::uint64_t degree = detail::get_index(detail::field(j, "degree"), "degree");
  if (degree == 0 || degree > 64) fail(ErrorKind::invalid_input, "degree must lie in 1..64");
  const json& gens = detail::field(j, "generators");
  detail::require_array(gens, "generators");
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    detail::require_array(g, "generator");
    Permutation p;
    for (const auto& v : g) p.push_back(static_cast<std::uint32_t>(detail::get_index(v, "generator image")));
    perms.push_back(std::move(p));
  }
  return from_generators(degree, perms, limits);
}

// ---------------------------------------------------------------------------
// analysis results

inline const char* to_string(DescriptorKind k) {
  switch (k) {
    case DescriptorKind::cyclic: return "Cyclic";
    case DescriptorKind::catalog_simple: return "CatalogSimple";
    case DescriptorKind::composite: return "Composite";
  }
  return "Composite";
}

inline json to_json(const GroupDescriptor& d) {
  json j{{"kind", to_string(d.kind)}, {"name", d.name}, {"order", d.order}};
  if (d.kind == DescriptorKind::composite) {
    j["abelian_invariants"] = d.abelian_invariants;
    j["order_histogram"] = d.order_histogram;
    j["class_shape"] = d.class_shape;
    j["center_order"] = d.center_order;
    j["derived_order"] = d.derived_order;
  }
  return j;
}

inline GroupDescriptor descriptor_from_json(const json& j) {
  GroupDescriptor d;
  std::string kind = detail::field(j, "kind").get<std::string>();
  if (kind == "Cyclic") d.kind = DescriptorKind::cyclic;
  else if (kind == "CatalogSimple") d.kind = DescriptorKind::catalog_simple;
  else if (kind == "Composite") d.kind = DescriptorKind::composite;
  else fail(ErrorKind::invalid_input, "unknown descriptor kind " + kind);
  d.name = detail::field(j, "name").get<std::string>();
  d.order = detail::get_index(detail::field(j, "order"), "order");
  if (d.kind == DescriptorKind::composite) {
    d.abelian_invariants = detail::field(j, "abelian_invariants").get<std::vector<std::uint64_t>>();
    d.order_histogram = detail::field(j, "order_histogram").get<std::vector<std::pair<std::uint64_t, std::uint64_t>>>();
    d.class_shape = detail::field(j, "class_shape").get<std::vector<std::pair<std::uint64_t, std::uint64_t>>>();
    d.center_order = detail::field(j, "center_order").get<std::uint64_t>();
    d.derived_order = detail::field(j, "derived_order").get<std::uint64_t>();
  }
  return d;
}

inline json to_json(const FactorMultiset& f) {
  json entries = json::array();
  for (const auto& [d, k] : f.entries()) entries.push_back({{"descriptor", to_json(d)}, {"multiplicity", k}});
  return json{{"entries", entries}, {"length", f.length()}, {"text", f.to_string()}};
}

inline FactorMultiset multiset_from_json(const json& j) {
  FactorMultiset f;
  const json& entries = detail::field(j, "entries");
  detail::require_array(entries, "entries");
  for (const auto& e : entries)
    f.add(descriptor_from_json(detail::field(e, "descriptor")), detail::get_index(detail::field(e, "multiplicity"), "multiplicity"));
  return f;
}

inline json to_json(const Subring& s) { return json(s.members); }

inline Subring subring_from_json(const json& j) {
  detail::require_array(j, "subring");
  Subring s;
  for (const auto& v : j) s.members.push_back(static_cast<Index>(detail::get_index(v, "subring index")));
  std::sort(s.members.begin(), s.members.end());
  if (std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end())
    fail(ErrorKind::invalid_input, "repeated subring index");
  return s;
}

inline json to_json(const Grading& g) { return json{{"group", to_json(g.group)}, {"degree", g.degree}}; }

inline Grading grading_from_json(const json& j) {
  Grading g;
  g.group = group_from_json(detail::field(j, "group"));
  for (const auto& v : detail::field(j, "degree")) {
    auto d = detail::get_index(v, "degree");
    if (d >= g.group.order()) fail(ErrorKind::invalid_input, "degree outside the group");
    g.degree.push_back(static_cast<Element>(d));
  }
  g.faithful = is_surjective(g.group, g.degree);
  return g;
}

/// Factor groups are written as Cayley tables next to their descriptors, so a
/// series read back can be rechecked with check_series().
inline json to_json(const CentralSeriesRecord& rec) {
  json chain = json::array(), factors = json::array(), groups = json::array();
  for (const auto& s : rec.chain) chain.push_back(to_json(s));
  for (const auto& d : rec.descriptors) factors.push_back(to_json(d));
  for (const auto& g : rec.factors) groups.push_back(to_json(g));
  return json{{"chain", chain}, {"factors", factors}, {"factor_groups", groups}, {"length", rec.length()}};
}

inline CentralSeriesRecord series_from_json(const json& j) {
  CentralSeriesRecord rec;
  for (const auto& s : detail::field(j, "chain")) rec.chain.push_back(subring_from_json(s));
  for (const auto& d : detail::field(j, "factors")) rec.descriptors.push_back(descriptor_from_json(d));
  for (const auto& g : detail::field(j, "factor_groups")) rec.factors.push_back(group_from_json(g));
  if (detail::get_index(detail::field(j, "length"), "length") != rec.factors.size())
    fail(ErrorKind::invalid_input, "series length disagrees with its factors");
  return rec;
}

inline json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"axiom", to_string(x.axiom)}, {"message", x.message}, {"witness", x.witness}});
  return json{{"ok", r.ok}, {"violations", v}};
}

inline json to_json(const FPDimData& d) { return json{{"dims", d.dims}, {"total", d.total}, {"tolerance", d.tolerance}}; }

// ---------------------------------------------------------------------------
// files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::invalid_input, "cannot write " + path);
  out << j.dump(2) << '\n';
}

inline FusionRing load_ring(const std::string& path) {
  try {
    return ring_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_input, path + ": " + e.what());
  }
}

}  // namespace fjh
