// permrel: command-line front end for the permrel library.
//
// Exit codes: 0 success, 1 refuted claim or exhausted budget, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "permrel/io.hpp"

using namespace permrel;
namespace fs = std::filesystem;

#ifndef PERMREL_DATA_DIR
#define PERMREL_DATA_DIR "data"
#endif

namespace {

struct Common {
  bool json_out = false;
  bool deep = false;
  std::string budget = "standard";

  Budget level() const { return deep ? Budget::deep : parse_budget(budget); }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json_out, "Print JSON");
  cmd->add_flag("--deep", c.deep, "Same as --budget=deep");
  cmd->add_option("--budget", c.budget, "fast, standard or deep")->check(CLI::IsMember({"fast", "standard", "deep"}));
}

fs::path data_dir() {
  if (const char* env = std::getenv("PERMREL_DATA")) return env;
  return PERMREL_DATA_DIR;
}

/// A suite name ("table1") or a claim file path.
fs::path suite_path(const std::string& s) {
  if (fs::is_regular_file(s)) return s;
  fs::path p = data_dir() / "claims" / (s + ".json");
  if (fs::is_regular_file(p)) return p;
  throw ParseError(ParseErrorKind::malformed, "no claim file or suite named " + s);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_verify(const std::string& suite, const std::string& out, const Common& c) {
  SuiteReport r = run_suite(suite_path(suite), c.level());
  json j = to_json(r);
  if (!out.empty()) std::ofstream(out) << j.dump(1) << "\n";
  if (c.json_out) {
    std::cout << j.dump(1) << "\n";
  } else {
    for (const auto& claim : r.claims) {
      std::cout << claim.status << "  " << claim.id;
      if (claim.status == "refuted") std::cout << "  expected " << claim.expected.dump() << " observed " << claim.observed.dump();
      std::cout << "\n";
      for (const auto& n : claim.notes) std::cout << "    note: " << n << "\n";
    }
    std::cout << r.suite << " (" << to_string(r.budget) << "): " << r.count("verified") << " verified, "
              << r.count("refuted") << " refuted, " << r.count("skipped-budget") << " skipped\n";
  }
  return r.refuted() ? 1 : 0;
}

int cmd_classify(const std::string& spec, const Common& c) {
  auto v = classify_simple(load_group(spec), classify_options(c.level()));
  if (c.json_out) {
    std::cout << to_json(v).dump(1) << "\n";
    return 0;
  }
  std::cout << v.name << ": degree " << v.degree << ", order " << v.order << "\n";
  std::cout << "  structure   " << v.structure << "\n";
  std::cout << "  rule        " << v.rule << "\n";
  std::cout << "  verdict     " << v.summary() << "\n";
  std::cout << "  witness     " << v.witness_status;
  if (v.witness) std::cout << " (" << v.witness->size() << " sets)";
  std::cout << "\n";
  if (v.regular_witness) std::cout << "  regular set " << v.regular_witness->to_string() << "\n";
  auto opt = [](const std::optional<bool>& b) { return b ? yes_no(*b) : std::string("-"); };
  std::cout << "  computed    bgr " << opt(v.computed.bgr) << ", bgr2 " << opt(v.computed.bgr2) << ", regular set "
            << opt(v.computed.regular_set) << "\n";
  for (const auto& n : v.notes) std::cout << "  note        " << n << "\n";
  for (const auto& n : v.conflicts) std::cout << "  CONFLICT    " << n << "\n";
  return 0;
}

int cmd_symmetry_group(const std::string& file, const std::string& over, const Common& c) {
  Relation r = relation_from_json(read_json_file(file));
  PermGroup s = over.empty() ? symmetry_group_full(r, c.level() == Budget::deep ? 64 : default_refinement_cap)
                             : symmetry_group_in(load_group(over), r);
  if (c.json_out)
    std::cout << to_json(s).dump(1) << "\n";
  else
    std::cout << "order " << s.order() << ", " << s.generators().size() << " generators\n";
  return 0;
}

int cmd_catalog(const std::string& key, const Common& c) {
  if (!key.empty()) {
    PermGroup g = load_group(key);
    if (c.json_out) {
      std::cout << to_json(g).dump(1) << "\n";
    } else {
      std::cout << key << ": degree " << g.degree() << ", order " << g.order() << "\n";
      for (const auto& x : g.generators()) std::cout << "  " << x.to_cycles() << "\n";
    }
    return 0;
  }
  if (c.json_out) {
    std::cout << catalog_to_json().dump(1) << "\n";
    return 0;
  }
  for (const auto& e : catalog_entries()) std::cout << e.key << "  order " << e.order << "  " << e.about << "\n";
  return 0;
}

int cmd_census(const std::string& spec, int k, const Common& c) {
  PermGroup g = load_group(spec);
  const std::size_t cap = c.level() == Budget::deep ? 64 : c.level() == Budget::standard ? 20 : 15;
  if (g.degree() > cap)
    throw BudgetExceeded("census of degree " + std::to_string(g.degree()) + " needs a larger budget (--deep)");
  OrbitCensus census;
  if (k >= 0) {
    census.degree = g.degree();
    census.group_order = g.order();
    census.levels.push_back(orbit_census(g, static_cast<std::size_t>(k)));
  } else {
    census = full_orbit_census(g);
  }
  if (c.json_out) {
    std::cout << to_json(census).dump(1) << "\n";
    return 0;
  }
  std::cout << g.name() << ": order " << census.group_order << "\n";
  for (const auto& l : census.levels)
    std::cout << "  k=" << l.k << "  orbits " << l.orbit_count << "  longest " << l.max_orbit_length
              << (l.regular_witness ? "  regular " + l.regular_witness->to_string() : "") << "\n";
  return 0;
}

int cmd_closure(const std::string& spec, const Common& c) {
  PermGroup g = load_group(spec);
  PermGroup cl = orbit_closure(g, c.level() == Budget::fast ? 15 : default_closure_cap);
  const bool same = cl.order() == g.order();
  if (c.json_out) {
    json j = to_json(cl);
    j["group_order"] = g.order().str();
    j["in_bgr"] = same;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << g.name() << ": order " << g.order() << ", closure order " << cl.order() << ", in BGR "
              << yes_no(same) << "\n";
  }
  return 0;
}

int cmd_distinguishing(const std::string& spec, const Common& c) {
  PermGroup g = load_group(spec);
  auto d = distinguishing_partition(g);
  if (c.json_out) {
    json parts = json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    std::cout << json{{"group", g.name()}, {"distinguishing_number", d.part_count()}, {"parts", parts}}.dump(1) << "\n";
  } else {
    std::cout << g.name() << ": D = " << d.part_count() << "\n";
    for (const auto& p : d.parts) std::cout << "  " << p.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry groups of Boolean functions: relations, regular sets, classification"};
  app.require_subcommand(1);
  Common common;
  std::string arg, out, over;
  int k = -1;

  auto* verify = app.add_subcommand("verify", "Run a claim suite (table1, table2, negatives, relations, classify or a file)");
  verify->add_option("suite", arg, "Suite name or claim file")->required();
  verify->add_option("--out", out, "Write the JSON report here");
  add_common(verify, common);

  auto* classify = app.add_subcommand("classify", "Classify a simple group");
  classify->add_option("group", arg, "Catalog key or group file")->required();
  add_common(classify, common);

  auto* symmetry = app.add_subcommand("symmetry-group", "Symmetry group of a relation file");
  symmetry->add_option("relation", arg, "Relation file")->required();
  symmetry->add_option("--over", over, "Compute inside this overgroup");
  add_common(symmetry, common);

  auto* catalog = app.add_subcommand("catalog", "List the catalog or show one group");
  catalog->add_option("key", arg, "Catalog key");
  add_common(catalog, common);

  auto* census = app.add_subcommand("census", "Orbit census on k-subsets");
  census->add_option("group", arg, "Catalog key or group file")->required();
  census->add_option("-k", k, "Only this k");
  add_common(census, common);

  auto* closure = app.add_subcommand("closure", "Orbit closure on subsets");
  closure->add_option("group", arg, "Catalog key or group file")->required();
  add_common(closure, common);

  auto* dist = app.add_subcommand("distinguishing", "Distinguishing number and partition");
  dist->add_option("group", arg, "Catalog key or group file")->required();
  add_common(dist, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(arg, out, common);
    if (*classify) return cmd_classify(arg, common);
    if (*symmetry) return cmd_symmetry_group(arg, over, common);
    if (*catalog) return cmd_catalog(arg, common);
    if (*census) return cmd_census(arg, k, common);
    if (*closure) return cmd_closure(arg, common);
    if (*dist) return cmd_distinguishing(arg, common);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
