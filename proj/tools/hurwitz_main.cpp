// Command-line front end: every subcommand is a thin adapter over the library
// and emits one deterministic JSON report on stdout. Wall time goes to stderr
// so reports stay byte-identical across runs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/galois.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/lifting.hpp"
#include "hurwitz/monoid.hpp"

using nlohmann::ordered_json;
using namespace hurwitz;

namespace {

struct Options {
  std::vector<std::string> group_files;
  std::vector<std::string> component_files;
  std::string classes_spec;
  unsigned degree = 0;
  std::string units = "full";
  unsigned modulus = 0; // 0: derived from the group at hand
  unsigned unit_k = 1;
  std::uint64_t psi_bound = 0;
  bool psi_bound_set = false;
  bool generating_only = false;
  bool alt_base = false;
  std::uint64_t max_orbit = kDefaultOrbitCap;
  std::uint64_t max_cosets = kDefaultCosetCap;
  std::uint64_t max_elements = kDefaultElementCap;
  bool human = false;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string inputs_digest(const std::vector<std::string> &argv_tokens, const Options &o) {
  std::string blob;
  for (const auto &t : argv_tokens)
    blob += t + "\x1f";
  for (const auto &f : o.group_files)
    blob += slurp(f);
  for (const auto &f : o.component_files)
    blob += slurp(f);
  return fnv1a_hex(blob);
}

UnitGroup context_for(const Options &o, unsigned default_modulus) {
  unsigned n = o.modulus ? o.modulus : default_modulus;
  if (o.units == "full")
    return make_context(n, ContextMode::Full);
  if (o.units == "trivial")
    return make_context(n, ContextMode::Trivial);
  std::vector<unsigned> ks;
  std::stringstream ss(o.units);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      ks.push_back(static_cast<unsigned>(std::stoul(item)));
  return make_context(n, ks);
}

ordered_json component_json(const Component &x) {
  ordered_json j;
  j["points"] = x.points();
  j["degree"] = x.degree();
  std::vector<std::string> entries;
  for (const Perm &e : x.canonical().entries())
    entries.push_back(cycle_string(e));
  j["entries"] = entries;
  j["orbit_size"] = x.orbit_size();
  j["monodromy_order"] = x.monodromy().order();
  return j;
}

ordered_json multidisc_json(const Multidiscriminant &mu, const ClassSet &cs) {
  ordered_json j;
  for (std::size_t pos = 0; pos < mu.counts.size(); ++pos)
    j[cycle_string(cs.class_rep(static_cast<int>(pos)))] = mu.counts[pos];
  return j;
}

std::shared_ptr<PermGroup> require_group(const Options &o, std::size_t i = 0) {
  if (o.group_files.size() <= i)
    throw ParseError("missing --group");
  return load_group(o.group_files[i]);
}

Component require_component(const Options &o, std::size_t i = 0) {
  if (o.component_files.size() <= i)
    throw ParseError("missing --component");
  return load_component(o.component_files[i], o.max_orbit);
}

std::vector<Component> all_components(const Options &o) {
  std::vector<Component> out;
  for (const auto &f : o.component_files)
    out.push_back(load_component(f, o.max_orbit));
  if (out.empty())
    throw ParseError("missing --component");
  return out;
}

ClassSet class_set_for(const Options &o, std::shared_ptr<PermGroup> g) {
  if (o.classes_spec.empty())
    throw ParseError("missing --classes");
  return ClassSet(g, parse_class_spec(*g, o.classes_spec, o.max_elements), o.max_elements);
}

std::shared_ptr<PermGroup> join_of(const std::vector<Component> &xs) {
  std::vector<Perm> gens;
  for (const Component &x : xs)
    for (const Perm &g : x.monodromy().generators())
      gens.push_back(g);
  return std::make_shared<PermGroup>(xs.front().points(), std::move(gens));
}

// ---- bundled worked examples ----------------------------------------------

ordered_json example_5_5(const Options &o) {
  const unsigned deg = 23;
  Perm a = parse_cycles("(1, 22, 14)(2, 13, 9)(3, 8, 6)(7, 16, 21)(10, 18, 19)(11, 23, 12)", deg);
  Perm b = parse_cycles("(2, 4, 16)(3, 5, 7)(6, 11, 12)(8, 9, 14)(10, 21, 20)(15, 18, 17)", deg);
  PermGroup g(deg, {a, b});
  PermGroup g2(deg, {a, b}, BaseRule::LargestMoved);
  ordered_json j;
  j["degree"] = deg;
  j["order"] = g.order();
  j["order_alternate_base"] = g2.order();
  j["transitive"] = g.is_transitive();
  j["order_a"] = element_order(a);
  j["order_b"] = element_order(b);
  j["a_b_conjugate"] = are_conjugate(g, a, b, o.max_orbit);
  return j;
}

ordered_json example_5_6(const Options &o) {
  const unsigned deg = 17;
  Perm a = parse_cycles("(1, 11, 5, 13, 14, 17)(3, 15, 7, 12, 8, 6)(9, 10, 16)", deg);
  Perm b = parse_cycles("(1, 2, 15, 12, 8, 5)(3, 14, 11, 4, 9, 6)(7, 10, 17)", deg);
  PermGroup g(deg, {a, b});
  ordered_json j;
  j["degree"] = deg;
  j["order"] = g.order();
  j["transitive"] = g.is_transitive();
  j["order_a"] = element_order(a);
  j["order_b"] = element_order(b);
  j["a_b_conjugate"] = are_conjugate(g, a, b, o.max_orbit);
  return j;
}

Component cyclic_component(unsigned n, const std::vector<long long> &exponents,
                           std::uint64_t orbit_cap) {
  std::vector<std::uint32_t> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  Perm g{std::vector<std::uint32_t>(img)};
  std::vector<Perm> entries;
  for (long long e : exponents)
    entries.push_back(power(g, e));
  return component_of(GTuple(n, std::move(entries)), orbit_cap);
}

ordered_json example_2_13(const Options &o) {
  ordered_json j;
  {
    Component x = cyclic_component(3, {1, 1, 1}, o.max_orbit);
    j["(1,1,1)_mod_3_defined_over_Q"] =
        is_defined_over_abelian(x, make_context(3, ContextMode::Full), o.max_orbit);
  }
  ordered_json table;
  for (unsigned n = 2; n <= 12; ++n) {
    Component x = cyclic_component(n, {1, -1}, o.max_orbit);
    table[std::to_string(n)] =
        is_defined_over_abelian(x, make_context(n, ContextMode::Full), o.max_orbit);
  }
  j["(1,-1)_mod_n_defined_over_Q"] = table;
  return j;
}

// Transposition tuples are determined by monodromy group and
// multidiscriminant: checked exhaustively per degree.
bool transposition_buckets_singletons(const ClassSet &cs, unsigned n, std::uint64_t orbit_cap,
                                      std::uint64_t element_cap, std::size_t *num_components) {
  std::vector<Component> comps = enumerate_components(cs, n, EnumOptions{}, orbit_cap);
  if (num_components)
    *num_components = comps.size();
  std::map<std::string, int> buckets;
  for (const Component &x : comps) {
    std::string key;
    for (const Perm &e : x.monodromy().elements(element_cap))
      key += cycle_string(e) + "|";
    key += "#";
    auto hc = ClassSet(x.monodromy_ptr(),
                       class_closure(x.monodromy(), x.entry_multiset()), element_cap);
    Multidiscriminant mu = multidiscriminant(x, hc);
    for (std::size_t pos = 0; pos < mu.counts.size(); ++pos)
      key += cycle_string(hc.class_rep(static_cast<int>(pos))) + ":" +
             std::to_string(mu.counts[pos]) + ",";
    if (++buckets[key] > 1)
      return false;
  }
  return true;
}

ordered_json example_2_14(const Options &o) {
  ordered_json j;
  struct Case {
    const char *name;
    unsigned points;
    unsigned max_degree;
  };
  for (const Case &c : {Case{"S3", 3, 10}, Case{"S4", 4, 7}}) {
    std::vector<Perm> gens;
    for (unsigned i = 0; i + 1 < c.points; ++i) {
      std::vector<std::uint32_t> img(c.points);
      for (unsigned t = 0; t < c.points; ++t)
        img[t] = t;
      std::swap(img[i], img[i + 1]);
      gens.push_back(Perm{std::move(img)});
    }
    auto g = std::make_shared<PermGroup>(c.points, gens);
    ClassSet cs(g, parse_class_spec(*g, "transpositions", o.max_elements), o.max_elements);
    ordered_json per_degree;
    bool all_ok = true;
    for (unsigned n = 1; n <= c.max_degree; ++n) {
      std::size_t count = 0;
      bool ok = transposition_buckets_singletons(cs, n, o.max_orbit, o.max_elements, &count);
      per_degree[std::to_string(n)] = ordered_json{{"components", count}, {"determined", ok}};
      all_ok = all_ok && ok;
    }
    j[c.name] = ordered_json{{"per_degree", per_degree}, {"all_determined", all_ok}};
  }
  return j;
}

// ---- subcommand dispatch ---------------------------------------------------

ordered_json run_command(const std::string &cmd, const Options &o) {
  ordered_json r;

  if (cmd == "group") {
    auto g = require_group(o);
    r["degree"] = g->degree();
    r["order"] = g->order();
    r["transitive"] = g->is_transitive();
    r["abelian"] = g->is_abelian();
    std::vector<std::uint64_t> gen_orders;
    for (const Perm &p : g->generators())
      gen_orders.push_back(element_order(p));
    r["generator_orders"] = gen_orders;
    if (o.alt_base) {
      auto g2 = load_group(o.group_files[0], BaseRule::LargestMoved);
      r["order_alternate_base"] = g2->order();
    }
  } else if (cmd == "components") {
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    EnumOptions opts;
    if (o.generating_only)
      opts.monodromy_equals = g;
    ordered_json list = ordered_json::array();
    for (const Component &x : enumerate_components(cs, o.degree, opts, o.max_orbit))
      list.push_back(component_json(x));
    r["count"] = list.size();
    r["components"] = list;
  } else if (cmd == "concat") {
    std::vector<Component> xs = all_components(o);
    Component acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i)
      acc = concat(acc, xs[i], o.max_orbit);
    r["component"] = component_json(acc);
  } else if (cmd == "ni" || cmd == "ni-sharp") {
    NiQuery q;
    q.factors = all_components(o);
    q.group = o.group_files.empty() ? join_of(q.factors) : require_group(o);
    q.sharp = cmd == "ni-sharp";
    Caps caps{o.max_orbit, o.max_elements};
    ordered_json list = ordered_json::array();
    for (const Component &x : ni_set(q, caps))
      list.push_back(component_json(x));
    r["count"] = list.size();
    r["components"] = list;
  } else if (cmd == "permuting") {
    std::vector<Component> xs = all_components(o);
    if (xs.size() != 2)
      throw ParseError("permuting expects exactly two --component files");
    Caps caps{o.max_orbit, o.max_elements};
    r["permuting"] = are_permuting(xs[0], xs[1], caps);
    r["monodromy_orders"] = {xs[0].monodromy().order(), xs[1].monodromy().order()};
  } else if (cmd == "verify-singleton") {
    NiQuery q;
    q.factors = all_components(o);
    q.group = o.group_files.empty() ? join_of(q.factors) : require_group(o);
    Caps caps{o.max_orbit, o.max_elements};
    SingletonVerdict v = verify_singleton(q, caps);
    r["holds"] = v.holds;
    ordered_json list = ordered_json::array();
    for (const Component &x : v.witness)
      list.push_back(component_json(x));
    r["witness"] = list;
  } else if (cmd == "factor") {
    Component x = require_component(o);
    Caps caps{o.max_orbit, o.max_elements};
    std::uint64_t psi =
        o.psi_bound_set ? o.psi_bound : order_statistics(x.monodromy(), o.max_elements).psi;
    SmallFactorization f = factor_small(x, psi, caps);
    r["psi"] = psi;
    ordered_json blocks = ordered_json::array();
    for (const FactorBlock &b : f.blocks)
      blocks.push_back(ordered_json{{"element", cycle_string(b.element)}, {"count", b.count}});
    r["blocks"] = blocks;
    r["rest"] = component_json(f.rest);
  } else if (cmd == "bounds") {
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    Caps caps{o.max_orbit, o.max_elements};
    ReductionBounds b = reduction_bounds(cs, caps);
    OrderStats st = order_statistics(*g, o.max_elements);
    r["psi"] = st.psi;
    r["exponent"] = st.exponent;
    r["coarse"] = b.coarse;
    r["refined"] = b.refined;
  } else if (cmd == "build-v") {
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    Caps caps{o.max_orbit, o.max_elements};
    r["component"] = component_json(build_v(cs, caps));
  } else if (cmd == "complete-check") {
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    Caps caps{o.max_orbit, o.max_elements};
    r["complete"] = is_complete_class_set(cs, caps);
  } else if (cmd == "rational-subset") {
    auto g = require_group(o);
    std::vector<Perm> c = parse_class_spec(*g, o.classes_spec, o.max_elements);
    UnitGroup ctx = context_for(o, static_cast<unsigned>(order_statistics(*g, o.max_elements).exponent));
    r["modulus"] = ctx.modulus;
    r["rational"] = is_rational_subset(c, ctx);
  } else if (cmd == "rational-multidisc") {
    Component x = require_component(o);
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    UnitGroup ctx = context_for(o, static_cast<unsigned>(order_statistics(*g, o.max_elements).exponent));
    r["modulus"] = ctx.modulus;
    r["multidiscriminant"] = multidisc_json(multidiscriminant(x, cs), cs);
    r["rational"] = is_rational_multidiscriminant(x, cs, ctx);
  } else if (cmd == "abelian-act") {
    Component x = require_component(o);
    unsigned n = o.modulus ? o.modulus
                           : static_cast<unsigned>(order_statistics(x.monodromy(), o.max_elements).exponent);
    r["modulus"] = n;
    r["unit"] = o.unit_k;
    r["component"] = component_json(abelian_action(x, o.unit_k, n, o.max_orbit));
  } else if (cmd == "abelian-defined") {
    Component x = require_component(o);
    UnitGroup ctx = context_for(
        o, static_cast<unsigned>(order_statistics(x.monodromy(), o.max_elements).exponent));
    r["modulus"] = ctx.modulus;
    r["defined"] = is_defined_over_abelian(x, ctx, o.max_orbit);
  } else if (cmd == "norm") {
    Component x = require_component(o);
    UnitGroup ctx = context_for(
        o, static_cast<unsigned>(order_statistics(x.monodromy(), o.max_elements).exponent));
    r["modulus"] = ctx.modulus;
    r["component"] = component_json(galois_norm_abelian(x, ctx, o.max_orbit));
  } else if (cmd == "resolve-act") {
    Component x = require_component(o);
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    SchurCover cover(cs, o.max_cosets, o.max_elements);
    ResolveResult res = resolve_action(x, o.unit_k, cover, o.max_orbit);
    r["unit"] = o.unit_k;
    r["determined"] = res.determined;
    ordered_json list = ordered_json::array();
    for (const Component &c : res.candidates)
      list.push_back(component_json(c));
    r["candidates"] = list;
  } else if (cmd == "schur-cover") {
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    SchurCover cover(cs, o.max_cosets, o.max_elements);
    r["size"] = cover.size();
    r["kernel_order"] = cover.kernel_order();
    r["cosets"] = cover.table().size;
    r["exponent"] = cover.exponent();
    ordered_json proj;
    for (std::size_t i = 0; i < cs.members().size(); ++i)
      proj[cycle_string(cs.members()[i])] =
          cycle_string(cover.project(cover.gen_element(i)));
    r["generator_projections"] = proj;
  } else if (cmd == "invariant") {
    Component x = require_component(o);
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    SchurCover cover(cs, o.max_cosets, o.max_elements);
    LiftInvariant v = lifting_invariant(x, cover);
    r["s_part"] = v.s_part;
    r["s_part_projection"] = cycle_string(cover.project(v.s_part));
    r["psi"] = multidisc_json(v.psi, cs);
    r["coherent"] = tilde_pi(v.psi, cover) == cover.abelianized(cover.project(v.s_part));
    r["cosets"] = cover.table().size;
  } else if (cmd == "act-invariant") {
    Component x = require_component(o);
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    SchurCover cover(cs, o.max_cosets, o.max_elements);
    LiftInvariant v = galois_act_invariant(lifting_invariant(x, cover), o.unit_k, cover);
    r["unit"] = o.unit_k;
    r["s_part"] = v.s_part;
    r["psi"] = multidisc_json(v.psi, cs);
    r["cosets"] = cover.table().size;
  } else if (cmd == "estimate-mbig") {
    auto g = require_group(o);
    ClassSet cs = class_set_for(o, g);
    SchurCover cover(cs, o.max_cosets, o.max_elements);
    auto m = estimate_m_big(cover, o.degree, o.max_orbit);
    if (m)
      r["m_est"] = *m;
    else
      r["m_est"] = "not-stabilized";
    r["degree_cap"] = o.degree;
  } else {
    throw ParseError("unknown subcommand: " + cmd);
  }
  return r;
}

void render_human(const ordered_json &j, std::ostream &os, int indent = 0) {
  for (const auto &[key, value] : j.items()) {
    os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << key << ": ";
    if (value.is_object()) {
      os << "\n";
      render_human(value, os, indent + 1);
    } else {
      os << value.dump() << "\n";
    }
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"braid orbits of product-one tuples: components, rationality, lifting invariants"};
  app.require_subcommand(1);

  Options o;
  std::string example_id;

  const std::vector<std::string> names = {
      "group",          "components",      "concat",         "ni",
      "ni-sharp",       "permuting",       "verify-singleton", "factor",
      "bounds",         "build-v",         "complete-check", "rational-subset",
      "rational-multidisc", "abelian-act", "abelian-defined", "resolve-act",
      "norm",           "schur-cover",     "invariant",      "act-invariant",
      "estimate-mbig",  "paper-example"};
  for (const std::string &name : names) {
    CLI::App *sub = app.add_subcommand(name);
    sub->add_option("--group", o.group_files, "group file (JSON: degree, generators)");
    sub->add_option("--component", o.component_files, "component file (JSON: points, entries)");
    sub->add_option("--classes", o.classes_spec,
                    "class spec: nonidentity|all|transpositions|involutions|cycles;...");
    sub->add_option("--degree", o.degree, "tuple degree / degree cap");
    sub->add_option("--units", o.units, "full|trivial|k1,k2,...");
    sub->add_option("--modulus", o.modulus, "cyclotomic modulus (default: group exponent)");
    sub->add_option("--unit", o.unit_k, "acting unit k");
    sub->add_option("--psi", o.psi_bound, "target degree bound for factor")
        ->each([&](const std::string &) { o.psi_bound_set = true; });
    sub->add_flag("--generating", o.generating_only, "keep only generating tuples");
    sub->add_flag("--alt-base", o.alt_base, "also report the alternate-base order");
    sub->add_option("--max-orbit", o.max_orbit, "orbit size cap");
    sub->add_option("--max-cosets", o.max_cosets, "coset table cap");
    sub->add_option("--max-elements", o.max_elements, "group enumeration cap");
    sub->add_flag("--human", o.human, "render tables instead of JSON");
    if (name == "paper-example")
      sub->add_option("id", example_id, "example id: 5.5, 5.6, 2.13, 2.14")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  std::vector<std::string> tokens;
  for (int i = 1; i < argc; ++i)
    tokens.push_back(argv[i]);

  auto started = std::chrono::steady_clock::now();
  try {
    ordered_json results;
    if (cmd == "paper-example") {
      if (example_id == "5.5")
        results = example_5_5(o);
      else if (example_id == "5.6")
        results = example_5_6(o);
      else if (example_id == "2.13")
        results = example_2_13(o);
      else if (example_id == "2.14")
        results = example_2_14(o);
      else
        throw ParseError("unknown example id: " + example_id);
    } else {
      results = run_command(cmd, o);
    }

    ordered_json report;
    report["command"] = cmd;
    report["inputs"] = inputs_digest(tokens, o);
    report["caps"] = ordered_json{{"max-orbit", o.max_orbit},
                                  {"max-cosets", o.max_cosets},
                                  {"max-elements", o.max_elements}};
    report["results"] = results;
    if (o.human)
      render_human(report, std::cout);
    else
      std::cout << report.dump(2) << "\n";

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "wall_time_ms=" << elapsed << "\n";
    return 0;
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
