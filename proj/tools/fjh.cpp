// fjh: construct, validate and analyze fusion rings from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fjh/fjh.hpp"

using namespace fjh;

namespace {

struct Globals {
  bool json = false;
  double tolerance = default_integrality_tolerance;
  std::uint64_t seed = default_seed;

  CharacterTableOptions chartable() const {
    CharacterTableOptions o;
    o.seed = seed;
    o.integrality_tolerance = tolerance;
    return o;
  }
};

void emit(const Globals& g, const std::string& command, json body, const std::string& text) {
  if (g.json) {
    json out{{"schema", schema_version}, {"command", command}};
    out.update(body);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

FiniteGroup load_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return group_from_json(read_json_file(spec));
  return parse_group_spec(spec);
}

std::string labels_of(const FusionRing& r, const Subring& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + r.label(s.members[i]);
  return out + "}";
}

json labels_json(const FusionRing& r, const Subring& s) {
  json a = json::array();
  for (Index i : s.members) a.push_back(r.label(i));
  return a;
}

std::string series_text(const FusionRing& r, const CentralSeriesRecord& s) {
  std::ostringstream os;
  os << "length " << s.length() << ", factors " << s.factor_multiset().to_string() << '\n';
  for (std::size_t i = 0; i < s.chain.size(); ++i) {
    os << "  R" << i << " (rank " << s.chain[i].size() << ")";
    if (i > 0) os << "  over R" << i - 1 << " by " << s.descriptors[i - 1].name;
    os << "  " << labels_of(r, s.chain[i]) << '\n';
  }
  return os.str();
}

json series_json(const FusionRing& r, const CentralSeriesRecord& s) {
  json j = to_json(s);
  json labels = json::array();
  for (const auto& sub : s.chain) labels.push_back(labels_json(r, sub));
  j["chain_labels"] = labels;
  j["multiset"] = to_json(s.factor_multiset());
  return j;
}

// ---------------------------------------------------------------------------
// ring commands

int ring_validate(const Globals& g, const std::string& path) {
  auto r = load_ring(path);
  auto rep = validate(r);
  std::ostringstream os;
  os << (rep.ok ? "ok" : "invalid") << ": rank " << r.rank() << '\n';
  for (const auto& v : rep.violations) {
    os << "  " << to_string(v.axiom) << ": " << v.message << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << r.label(v.witness[i]);
    os << ")\n";
  }
  emit(g, "ring validate", {{"report", to_json(rep)}}, os.str());
  return rep.ok ? 0 : 1;
}

int ring_fpdim(const Globals& g, const std::string& path) {
  auto r = load_ring(path);
  auto fp = fpdim(r);
  std::ostringstream os;
  os << std::setprecision(12);
  for (Index i = 0; i < r.rank(); ++i) os << std::left << std::setw(16) << r.label(i) << fp.dims[i] << '\n';
  os << "total " << fp.total << '\n';
  json body{{"fpdim", to_json(fp)}, {"labels", r.labels()}};
  emit(g, "ring fpdim", body, os.str());
  return 0;
}

int ring_grading(const Globals& g, const std::string& path, bool full) {
  auto r = load_ring(path);
  auto u = universal_grading(r);
  auto d = describe(u.group);
  std::ostringstream os;
  os << "universal grading group: order " << u.group.order() << ", " << d.name
     << (u.group.is_abelian() ? " (abelian)" : "") << '\n';
  json comps = json::array();
  for (Element e = 0; e < u.group.order(); ++e) {
    auto c = u.component(e);
    os << "  " << std::left << std::setw(12) << u.group.label(e) << labels_of(r, c) << '\n';
    comps.push_back({{"element", u.group.label(e)}, {"members", to_json(c)}, {"labels", labels_json(r, c)}});
  }
  json body{{"descriptor", to_json(d)}, {"order", u.group.order()}, {"degree", u.degree}, {"components", comps}};
  if (full) {
    body["grading"] = to_json(u);
    os << "cayley table:\n";
    for (const auto& row : u.group.cayley()) {
      os << " ";
      for (Element x : row) os << ' ' << x;
      os << '\n';
    }
  }
  emit(g, "ring grading", body, os.str());
  return 0;
}

int ring_series(const Globals& g, const std::string& path, bool all, std::size_t cap) {
  auto r = load_ring(path);
  if (!all) {
    auto s = canonical_composition_series(r);
    emit(g, "ring series", {{"series", series_json(r, s)}}, series_text(r, s));
    return 0;
  }
  auto series = all_composition_series(r, cap);
  bool pass = true;
  for (const auto& s : series) pass = pass && s.factor_multiset() == series.front().factor_multiset();
  std::ostringstream os;
  os << series.size() << " composition series; Jordan-Holder " << (pass ? "pass" : "FAIL") << '\n';
  json list = json::array();
  for (std::size_t i = 0; i < series.size(); ++i) {
    os << "series " << i + 1 << ": " << series_text(r, series[i]);
    list.push_back(series_json(r, series[i]));
  }
  emit(g, "ring series", {{"count", series.size()}, {"jordan_holder", pass}, {"series", list}}, os.str());
  return pass ? 0 : 4;
}

int ring_factors(const Globals& g, const std::string& path) {
  auto r = load_ring(path);
  auto f = composition_factors(r);
  std::ostringstream os;
  os << "length " << f.length() << '\n' << "factors " << f.to_string() << '\n';
  emit(g, "ring factors", {{"factors", to_json(f)}, {"length", f.length()}}, os.str());
  return 0;
}

int ring_compare(const Globals& g, const std::string& a, const std::string& b) {
  auto fa = composition_factors(load_ring(a));
  auto fb = composition_factors(load_ring(b));
  bool same = fa == fb;
  std::ostringstream os;
  os << a << ": length " << fa.length() << ", " << fa.to_string() << '\n'
     << b << ": length " << fb.length() << ", " << fb.to_string() << '\n'
     << (same ? "equal" : "different") << '\n';
  emit(g, "ring compare", {{"a", to_json(fa)}, {"b", to_json(fb)}, {"equal", same}}, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// make

int make_ring(const Globals& g, const std::string& kind, const std::vector<std::string>& args, const std::string& out) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      fail(ErrorKind::invalid_input, "make " + kind + " takes " + std::to_string(n) + " argument" + (n > 1 ? "s" : ""));
  };
  FusionRing ring = unit_ring();
  if (kind == "pointed") {
    need(1);
    ring = pointed_ring(load_group(args[0]));
  } else if (kind == "rep") {
    need(1);
    ring = rep_ring(load_group(args[0]), g.chartable());
  } else if (kind == "double") {
    need(1);
    ring = double_ring(load_group(args[0]), g.chartable());
  } else if (kind == "ty") {
    need(1);
    ring = tambara_yamagami(load_group(args[0]));
  } else if (kind == "product") {
    need(2);
    ring = deligne_product(load_ring(args[0]), load_ring(args[1]));
  } else {
    fail(ErrorKind::invalid_input, "unknown ring kind '" + kind + "' (pointed, rep, double, ty, product)");
  }
  auto rep = validate(ring);
  if (!rep.ok) fail(ErrorKind::internal_inconsistency, "constructed ring fails validation");
  if (out.empty() || out == "-") {
    std::cout << to_json(ring).dump(2) << '\n';
  } else {
    write_json_file(out, to_json(ring));
    std::ostringstream os;
    os << "wrote " << out << ": rank " << ring.rank() << '\n';
    emit(g, "make " + kind, {{"output", out}, {"rank", ring.rank()}}, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// group commands

int group_factors(const Globals& g, const std::string& spec) {
  auto grp = load_group(spec);
  auto cs = composition_series_group(grp);
  FactorMultiset f;
  for (const auto& d : cs.factors) f.add(d);
  std::ostringstream os;
  os << "order " << grp.order() << ", " << describe(grp).name << '\n'
     << "length " << f.length() << '\n'
     << "factors " << f.to_string() << '\n';
  json orders = json::array();
  for (const auto& s : cs.chain) orders.push_back(s.size());
  emit(g, "group factors",
       {{"order", grp.order()}, {"descriptor", to_json(describe(grp))}, {"factors", to_json(f)},
        {"length", f.length()}, {"chain_orders", orders}},
       os.str());
  return 0;
}

Subgroup subgroup_from_cycles(const FiniteGroup& g, const std::string& gens) {
  if (!g.has_permutations()) fail(ErrorKind::invalid_input, "group has no permutation representation");
  std::vector<Element> el;
  for (const auto& p : parse_generators(gens, g.degree())) {
    auto e = g.find_permutation(p);
    if (!e) fail(ErrorKind::invalid_input, perm::to_cycles(p) + " is not an element of the group");
    el.push_back(*e);
  }
  return generated_subgroup(g, el);
}

int group_zappa_szep(const Globals& g, const std::string& spec, const std::string& f, const std::string& gamma) {
  Limits limits;
  limits.table_cap = 5040;
  auto grp = load_group(spec);
  auto F = subgroup_from_cycles(grp, f);
  auto G = subgroup_from_cycles(grp, gamma);
  auto mp = matched_pair_from_factorization(grp, F, G);
  auto zs = zappa_szep(mp, limits);
  bool iso = is_isomorphic(zs, grp);
  auto factors = morita_factors_bicrossed(mp, limits);
  std::ostringstream os;
  os << "|F| = " << F.size() << ", |Gamma| = " << G.size() << ", |F x Gamma| = " << zs.order() << '\n'
     << "isomorphic to " << spec << ": " << (iso ? "yes" : "no") << '\n'
     << "length " << factors.length() << '\n'
     << "factors " << factors.to_string() << '\n';
  emit(g, "group zappa-szep",
       {{"F_order", F.size()}, {"Gamma_order", G.size()}, {"order", zs.order()}, {"isomorphic", iso},
        {"factors", to_json(factors)}, {"length", factors.length()}},
       os.str());
  return 0;
}

std::string format_complex(Complex z) {
  auto clean = [](double x) { return std::abs(x) < 5e-10 ? 0.0 : x; };
  std::ostringstream os;
  os << std::setprecision(4);
  double re = clean(z.real()), im = clean(z.imag());
  if (im == 0) os << re;
  else if (re == 0) os << im << "i";
  else os << re << (im > 0 ? "+" : "") << im << "i";
  return os.str();
}

int group_chartable(const Globals& g, const std::string& spec) {
  auto grp = load_group(spec);
  auto t = character_table(grp, g.chartable());
  auto names = irrep_labels(t);
  std::ostringstream os;
  os << std::left << std::setw(8) << "class";
  for (const auto& c : t.classes) os << std::setw(12) << grp.label(c.front()).substr(0, 11);
  os << '\n' << std::setw(8) << "size";
  for (const auto& c : t.classes) os << std::setw(12) << c.size();
  os << '\n';
  // values are numerical; integers are reported exactly
  auto snap = [](double x) { return std::abs(x - std::round(x)) < 1e-9 ? std::round(x) + 0.0 : x; };
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << std::setw(8) << names[i];
    json row = json::array();
    for (const auto& v : t.values[i]) {
      os << std::setw(12) << format_complex(v);
      row.push_back({snap(v.real()), snap(v.imag())});
    }
    os << '\n';
    rows.push_back({{"label", names[i]}, {"degree", t.degrees[i]}, {"values", row}});
  }
  json classes = json::array();
  for (const auto& c : t.classes) classes.push_back({{"representative", grp.label(c.front())}, {"size", c.size()}});
  emit(g, "group chartable", {{"classes", classes}, {"characters", rows}, {"seed", g.seed}}, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradings, nilpotency and composition series of fusion rings"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--tolerance", g.tolerance, "Integrality tolerance for character sums")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for the character-table random combination");
  app.fallthrough();

  auto* ring = app.add_subcommand("ring", "Analyze a ring file")->require_subcommand(1);
  std::string path, path_b;
  bool full = false, all = false;
  std::size_t cap = default_series_cap;
  std::function<int()> action;
  auto* validate_cmd = ring->add_subcommand("validate", "Check the fusion ring axioms");
  validate_cmd->add_option("ring", path)->required();
  validate_cmd->callback([&] { action = [&] { return ring_validate(g, path); }; });
  auto* fpdim_cmd = ring->add_subcommand("fpdim", "Frobenius-Perron dimensions");
  fpdim_cmd->add_option("ring", path)->required();
  fpdim_cmd->callback([&] { action = [&] { return ring_fpdim(g, path); }; });
  auto* grading_cmd = ring->add_subcommand("grading", "Universal grading group and components");
  grading_cmd->add_option("ring", path)->required();
  grading_cmd->add_flag("--full", full, "Include the Cayley table");
  grading_cmd->callback([&] { action = [&] { return ring_grading(g, path, full); }; });
  auto* series_cmd = ring->add_subcommand("series", "Composition series");
  series_cmd->add_option("ring", path)->required();
  series_cmd->add_flag("--all", all, "Enumerate every composition series");
  series_cmd->add_option("--cap", cap, "Maximum number of series")->check(CLI::PositiveNumber);
  series_cmd->callback([&] { action = [&] { return ring_series(g, path, all, cap); }; });
  auto* factors_cmd = ring->add_subcommand("factors", "Composition factors and length");
  factors_cmd->add_option("ring", path)->required();
  factors_cmd->callback([&] { action = [&] { return ring_factors(g, path); }; });
  auto* compare_cmd = ring->add_subcommand("compare", "Compare composition factors of two rings");
  compare_cmd->add_option("a", path)->required();
  compare_cmd->add_option("b", path_b)->required();
  compare_cmd->callback([&] { action = [&] { return ring_compare(g, path, path_b); }; });

  auto* make = app.add_subcommand("make", "Build a ring file");
  std::string kind, out;
  std::vector<std::string> make_args;
  make->add_option("kind", kind, "pointed, rep, double, ty or product")->required();
  make->add_option("args", make_args, "Group specs, or two ring files for product")->required();
  make->add_option("-o,--output", out, "Output file (stdout if omitted)");
  make->callback([&] { action = [&] { return make_ring(g, kind, make_args, out); }; });

  auto* group = app.add_subcommand("group", "Group computations")->require_subcommand(1);
  std::string spec, fgens, ggens;
  auto* gf = group->add_subcommand("factors", "Composition factors of a group");
  gf->add_option("group", spec)->required();
  gf->callback([&] { action = [&] { return group_factors(g, spec); }; });
  auto* zs = group->add_subcommand("zappa-szep", "Bicrossed product of an exact factorization");
  zs->add_option("group", spec)->required();
  zs->add_option("F", fgens, "Generators of F in cycle notation")->required();
  zs->add_option("Gamma", ggens, "Generators of Gamma in cycle notation")->required();
  zs->callback([&] { action = [&] { return group_zappa_szep(g, spec, fgens, ggens); }; });
  auto* ct = group->add_subcommand("chartable", "Character table");
  ct->add_option("group", spec)->required();
  ct->callback([&] { action = [&] { return group_chartable(g, spec); }; });

  try {
    app.parse(argc, argv);
    return action ? action() : 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
