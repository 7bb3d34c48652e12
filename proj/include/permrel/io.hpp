#pragma once

// JSON for groups, relations, census reports and verdicts, and the claim
// suites run by `permrel verify`.
//
// Group:    { "name": optional, "degree": n, "generators": ["(1,2,3)", ...] }
// Relation: { "degree": n, "sets": [[1,2], [1,3], ...] }   sets 1-based, canonical order
// Claim file: { "suite": name, "claims": [ { "id", "tag", "kind", "budget", "inputs", "expected" } ] }

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "catalog.hpp"
#include "classify.hpp"
#include "closure.hpp"
#include "regular_sets.hpp"
#include "symmetry.hpp"

namespace permrel {

using nlohmann::json;

enum class Budget { fast, standard, deep };

inline Budget parse_budget(std::string_view s) {
  if (s == "fast") return Budget::fast;
  if (s == "standard") return Budget::standard;
  if (s == "deep") return Budget::deep;
  throw ParseError(ParseErrorKind::malformed, "unknown budget class " + std::string(s));
}

inline const char* to_string(Budget b) {
  switch (b) {
    case Budget::fast: return "fast";
    case Budget::standard: return "standard";
    case Budget::deep: return "deep";
  }
  return "?";
}

inline ClassifyOptions classify_options(Budget b) {
  switch (b) {
    case Budget::fast: return ClassifyOptions::fast();
    case Budget::standard: return ClassifyOptions::standard();
    case Budget::deep: return ClassifyOptions::deep();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Groups and relations.

inline json to_json(const PermGroup& g, bool with_order = true) {
  json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["degree"] = g.degree();
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x.to_cycles());
  j["generators"] = std::move(gens);
  if (with_order) j["order"] = g.order().str();
  return j;
}

inline PermGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw ParseError(ParseErrorKind::malformed, "group JSON needs \"degree\" and \"generators\"");
  if (!j["degree"].is_number_unsigned()) throw ParseError(ParseErrorKind::malformed, "degree must be a positive integer");
  const auto n = j["degree"].get<std::size_t>();
  if (n == 0 || n > PointSet::max_degree) throw ParseError(ParseErrorKind::out_of_range, "degree out of range");
  std::vector<std::string> gens;
  for (const auto& s : j["generators"]) {
    if (!s.is_string()) throw ParseError(ParseErrorKind::malformed, "generators must be cycle strings");
    gens.push_back(s.get<std::string>());
  }
  return PermGroup::from_cycles(n, gens, j.value("name", std::string{}));
}

inline json to_json(const PointSet& s) { return s.one_based(); }

inline json to_json(const Relation& r) {
  json sets = json::array();
  for (const auto& s : r) sets.push_back(s.one_based());
  return json{{"degree", r.degree()}, {"sets", std::move(sets)}};
}

inline Relation relation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("sets"))
    throw ParseError(ParseErrorKind::malformed, "relation JSON needs \"degree\" and \"sets\"");
  const auto n = j["degree"].get<std::size_t>();
  std::vector<PointSet> sets;
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) throw ParseError(ParseErrorKind::malformed, "each set must be a list of points");
    sets.push_back(PointSet::from_one_based(n, s.get<std::vector<int>>()));
  }
  return Relation(n, std::move(sets));
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseErrorKind::malformed, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::malformed, path.string() + ": " + e.what());
  }
}

/// A catalog key, or the path of a group JSON file.
inline PermGroup load_group(const std::string& spec) {
  if (spec.ends_with(".json") || std::filesystem::is_regular_file(spec)) {
    PermGroup g = group_from_json(read_json_file(spec));
    return g.name().empty() ? g.named(std::filesystem::path(spec).stem().string()) : g;
  }
  return catalog_group(spec);
}

/// The fixed catalog entries in the group file format.
inline json catalog_to_json() {
  json groups = json::array();
  for (const auto& e : catalog_entries()) {
    json j = to_json(catalog_group(e.key), false);
    j["name"] = e.key;
    j["about"] = e.about;
    j["order"] = e.order;
    groups.push_back(std::move(j));
  }
  return json{{"groups", std::move(groups)}};
}

// ---------------------------------------------------------------------------
// Reports.

inline json to_json(const OrbitCensus& c) {
  json rows = json::array();
  for (const auto& l : c.levels) {
    json row{{"k", l.k},
             {"subsets", l.subsets},
             {"orbit_count", l.orbit_count},
             {"max_orbit_length", l.max_orbit_length},
             {"witness", l.regular_witness ? to_json(*l.regular_witness) : json(nullptr)}};
    rows.push_back(std::move(row));
  }
  return json{{"degree", c.degree}, {"group_order", c.group_order.str()}, {"levels", std::move(rows)}};
}

inline json to_json(const ClassificationVerdict& v) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json comps = json::array();
  for (const auto& c : v.components)
    comps.push_back({{"points", c.points.one_based()},
                     {"degree", c.degree},
                     {"order", c.order.str()},
                     {"primitive", c.primitive},
                     {"kind", to_string(c.kind)},
                     {"label", c.label}});
  json j{{"name", v.name},
         {"degree", v.degree},
         {"moved_degree", v.moved_degree},
         {"order", v.order.str()},
         {"structure", v.structure},
         {"components", std::move(comps)},
         {"rule", v.rule},
         {"verdict", v.summary()},
         {"bgr", v.bgr},
         {"bgr2", v.bgr2},
         {"regular_set", v.regular_set},
         {"notes", v.notes},
         {"witness_status", v.witness_status},
         {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
         {"regular_witness", v.regular_witness ? to_json(*v.regular_witness) : json(nullptr)},
         {"computed",
          {{"bgr", opt(v.computed.bgr)},
           {"bgr2", opt(v.computed.bgr2)},
           {"regular_set", opt(v.computed.regular_set)},
           {"methods", v.computed.methods}}},
         {"conflicts", v.conflicts}};
  return j;
}

// ---------------------------------------------------------------------------
// Claims.

struct ClaimRecord {
  std::string id;
  std::string tag;
  std::string kind;
  Budget budget = Budget::fast;
  json inputs;
  json expected;
  json observed;
  std::string status;  // verified | refuted | skipped-budget
  std::vector<std::string> notes;
};

inline json to_json(const ClaimRecord& c) {
  json j{{"id", c.id},
         {"tag", c.tag},
         {"kind", c.kind},
         {"budget", to_string(c.budget)},
         {"inputs", c.inputs},
         {"expected", c.expected},
         {"observed", c.observed},
         {"status", c.status}};
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

namespace detail {

inline PointSet claim_set(const PermGroup& g, const json& in) {
  if (in.contains("set")) return PointSet::from_one_based(g.degree(), in["set"].get<std::vector<int>>());
  if (in.contains("set_complement"))
    return PointSet::from_one_based(g.degree(), in["set_complement"].get<std::vector<int>>()).complement();
  throw ParseError(ParseErrorKind::malformed, "claim needs \"set\" or \"set_complement\"");
}

inline Relation claim_relation(const json& in, const std::filesystem::path& base) {
  const json& r = in.at("relation");
  if (r.is_string()) return relation_from_json(read_json_file(base / r.get<std::string>()));
  return relation_from_json(r);
}

/// Observed outcome of a claim, shaped like its expected outcome.
inline json observe(ClaimRecord& c, Budget budget, const std::filesystem::path& base) {
  const json& in = c.inputs;
  auto group = [&](const char* field = "group") { return load_group(in.at(field).get<std::string>()); };
  if (c.kind == "regular-set") {
    PermGroup g = group();
    return is_regular_set(g, claim_set(g, in));
  }
  if (c.kind == "defining-orbit") {
    PermGroup g = group();
    PermGroup over = group("overgroup");
    if (!g.is_subgroup_of(over)) throw PreconditionError("group is not inside the overgroup");
    Relation orbit = orbit_of_set(g, claim_set(g, in));
    return json{{"order", symmetry_group_in(over, orbit, g.generators()).order().str()}};
  }
  if (c.kind == "in-bgr") return in_bgr(group());
  if (c.kind == "bgr-k") return in_bgr_k_bruteforce(group(), in.at("k").get<std::size_t>()).has_value();
  if (c.kind == "set-transitive") return set_transitive(group());
  if (c.kind == "regular-sizes") return regular_set_sizes(group());
  if (c.kind == "symmetry-group") {
    Relation r = claim_relation(in, base);
    PermGroup s = in.contains("overgroup") ? symmetry_group_in(group("overgroup"), r) : symmetry_group_full(r);
    json out{{"order", s.order().str()}};
    if (c.expected.contains("equals")) {
      const auto key = c.expected["equals"].get<std::string>();
      out["equals"] = s == load_group(key) ? json(key) : json("a different group");
    }
    return out;
  }
  if (c.kind == "classify") {
    try {
      auto v = classify_simple(group(), classify_options(budget));
      json full = to_json(v);
      json out = json::object();
      for (const auto& [k, _] : c.expected.items())
        out[k] = full.contains(k) ? full[k] : json(nullptr);
      for (const auto& s : v.conflicts) c.notes.push_back("computed conflict: " + s);
      return out;
    } catch (const NotSimple&) {
      return json{{"error", "not-simple"}};
    }
  }
  throw ParseError(ParseErrorKind::malformed, "unknown claim kind " + c.kind);
}

}  // namespace detail

/// Runs one claim. Claims above the budget are skipped; a budget exhausted
/// during the run counts as skipped, any other failure as a refutation.
inline ClaimRecord run_claim(const json& claim, Budget budget, const std::filesystem::path& base = ".") {
  ClaimRecord c;
  try {
    c.id = claim.at("id").get<std::string>();
    c.tag = claim.value("tag", std::string{});
    c.kind = claim.at("kind").get<std::string>();
    c.budget = parse_budget(claim.value("budget", std::string("fast")));
    c.inputs = claim.at("inputs");
    c.expected = claim.at("expected");
  } catch (const json::exception& e) {
    throw ParseError(ParseErrorKind::malformed, std::string("bad claim: ") + e.what());
  }
  if (c.budget > budget) {
    c.status = "skipped-budget";
    return c;
  }
  try {
    c.observed = detail::observe(c, budget, base);
    c.status = c.observed == c.expected ? "verified" : "refuted";
  } catch (const BudgetExceeded& e) {
    c.observed = json{{"error", e.what()}};
    c.status = "skipped-budget";
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    c.observed = json{{"error", e.what()}};
    c.status = "refuted";
  }
  return c;
}

struct SuiteReport {
  std::string suite;
  Budget budget = Budget::fast;
  std::vector<ClaimRecord> claims;

  std::size_t count(std::string_view status) const {
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [&](const ClaimRecord& c) { return c.status == status; }));
  }
  bool refuted() const { return count("refuted") > 0; }
};

inline json to_json(const SuiteReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c));
  return json{{"suite", r.suite},
              {"budget", to_string(r.budget)},
              {"claims", std::move(claims)},
              {"summary",
               {{"verified", r.count("verified")},
                {"refuted", r.count("refuted")},
                {"skipped-budget", r.count("skipped-budget")}}}};
}

/// Runs a claim file; claims are reported in file order.
inline SuiteReport run_suite(const std::filesystem::path& file, Budget budget) {
  json j = read_json_file(file);
  if (!j.is_object() || !j.contains("claims") || !j["claims"].is_array())
    throw ParseError(ParseErrorKind::malformed, file.string() + ": claim file needs a \"claims\" list");
  SuiteReport r;
  r.suite = j.value("suite", file.stem().string());
  r.budget = budget;
  for (const auto& claim : j["claims"]) r.claims.push_back(run_claim(claim, budget, file.parent_path()));
  return r;
}

}  // namespace permrel
