#include <gtest/gtest.h>

#include "permrel/io.hpp"

using namespace permrel;

namespace {

const std::filesystem::path kData = PERMREL_DATA_DIR;

}  // namespace

TEST(GroupJson, RoundTrip) {
  for (const auto& key : catalog_keys()) {
    PermGroup g = catalog_group(key);
    json j = to_json(g);
    PermGroup h = group_from_json(j);
    EXPECT_EQ(h.degree(), g.degree()) << key;
    EXPECT_TRUE(h == g) << key;
    EXPECT_EQ(j["order"], g.order().str()) << key;
  }
}

TEST(GroupJson, PrinterMatchesParserConvention) {
  PermGroup g = PermGroup::from_cycles(6, {"(4,6)(5,1,2)"}, "x");
  json j = to_json(g, false);
  EXPECT_EQ(j["generators"][0], "(1,2,5)(4,6)");
  EXPECT_EQ(j.dump(), R"j({"degree":6,"generators":["(1,2,5)(4,6)"],"name":"x"})j");
}

TEST(GroupJson, Errors) {
  EXPECT_THROW(group_from_json(json::parse(R"j({"generators": []})j")), ParseError);
  EXPECT_THROW(group_from_json(json::parse(R"j({"degree": 0, "generators": []})j")), ParseError);
  EXPECT_THROW(group_from_json(json::parse(R"j({"degree": 3, "generators": [5]})j")), ParseError);
  EXPECT_THROW(group_from_json(json::parse(R"j({"degree": 3, "generators": ["(1,4)"]})j")), ParseError);
  EXPECT_THROW(group_from_json(json::parse(R"j({"degree": -2, "generators": []})j")), ParseError);
  EXPECT_THROW(load_group("no-such-file.json"), ParseError);
  EXPECT_THROW(load_group("NoSuchGroup"), UnknownName);
}

TEST(RelationJson, CanonicalOrderAndRoundTrip) {
  Relation r(5, {PointSet::from_one_based(5, {4, 5}), PointSet::from_one_based(5, {2}),
                 PointSet::from_one_based(5, {1, 3}), PointSet::from_one_based(5, {1, 2, 3})});
  json j = to_json(r);
  EXPECT_EQ(j.dump(), R"j({"degree":5,"sets":[[2],[1,3],[4,5],[1,2,3]]})j");
  EXPECT_EQ(relation_from_json(j), r);
  EXPECT_THROW(relation_from_json(json::parse(R"j({"degree":3,"sets":[[4]]})j")), ParseError);
  EXPECT_THROW(relation_from_json(json::parse(R"j({"degree":3,"sets":[4]})j")), ParseError);
}

TEST(RelationJson, ShippedRelationsDefineTheirGroups) {
  EXPECT_TRUE(symmetry_group_full(relation_from_json(read_json_file(kData / "relations/t15_5.json"))) ==
              catalog_group("15T5"));
  EXPECT_TRUE(symmetry_group_full(relation_from_json(read_json_file(kData / "relations/t14_10.json"))) ==
              catalog_group("14T10"));
  EXPECT_EQ(symmetry_group_full(relation_from_json(read_json_file(kData / "relations/empty6.json"))).order(), 720);
}

TEST(CatalogData, MatchesGeneratedCatalog) {
  json shipped = read_json_file(kData / "catalog.json");
  EXPECT_EQ(shipped, catalog_to_json());
  for (const auto& g : shipped["groups"]) {
    PermGroup h = group_from_json(g);
    EXPECT_EQ(h.order().str(), g["order"].get<std::string>()) << g["name"];
  }
}

TEST(Claims, TablesMatchCatalogRows) {
  json t1 = read_json_file(kData / "claims/table1.json");
  ASSERT_EQ(t1["claims"].size(), doubled_rows().size());
  for (std::size_t i = 0; i < doubled_rows().size(); ++i) {
    const auto& in = t1["claims"][i]["inputs"];
    EXPECT_EQ(in["group"], doubled_rows()[i].group + "^(2)");
    EXPECT_EQ(in["set"].get<std::vector<int>>(), doubled_rows()[i].y);
  }
  json t2 = read_json_file(kData / "claims/table2.json");
  ASSERT_EQ(t2["claims"].size(), 2 * pair_rows().size());
  for (std::size_t i = 0; i < pair_rows().size(); ++i) {
    const auto& def = t2["claims"][2 * i]["inputs"];
    const auto& reg = t2["claims"][2 * i + 1]["inputs"];
    EXPECT_EQ(def["group"], pair_rows()[i].group);
    EXPECT_EQ(def["overgroup"], pair_rows()[i].overgroup);
    EXPECT_EQ(def["set"].get<std::vector<int>>(), pair_rows()[i].x);
    EXPECT_EQ(reg["set_complement"].get<std::vector<int>>(), pair_rows()[i].y_complement);
  }
}

TEST(Claims, ShippedSuitesVerify) {
  for (std::string suite : {"table1", "table2", "negatives", "relations", "classify"}) {
    SuiteReport r = run_suite(kData / "claims" / (suite + ".json"), Budget::standard);
    EXPECT_EQ(r.count("refuted"), 0u) << suite;
    EXPECT_EQ(r.count("skipped-budget"), 0u) << suite;
    for (const auto& c : r.claims) EXPECT_EQ(c.status, "verified") << c.id << " observed " << c.observed.dump();
  }
}

TEST(Claims, ReportsAreDeterministic) {
  auto once = [] { return to_json(run_suite(kData / "claims/negatives.json", Budget::fast)).dump(); };
  EXPECT_EQ(once(), once());
}

TEST(Claims, StatusRules) {
  json claim = json::parse(R"j({"id": "x", "kind": "in-bgr", "inputs": {"group": "C5"}, "expected": true})j");
  EXPECT_EQ(run_claim(claim, Budget::fast).status, "refuted");
  claim["expected"] = false;
  EXPECT_EQ(run_claim(claim, Budget::fast).status, "verified");
  claim["budget"] = "deep";
  EXPECT_EQ(run_claim(claim, Budget::standard).status, "skipped-budget");
  claim["kind"] = "no-such-kind";
  claim["budget"] = "fast";
  EXPECT_THROW(run_claim(claim, Budget::fast), ParseError);
  EXPECT_THROW(run_claim(json::parse(R"j({"kind": "in-bgr"})j"), Budget::fast), ParseError);
  // A budget exhausted during the run is reported as skipped.
  json big = json::parse(R"j({"id": "y", "kind": "in-bgr", "inputs": {"group": "S21"}, "expected": true})j");
  EXPECT_EQ(run_claim(big, Budget::fast).status, "skipped-budget");
}

TEST(VerdictJson, Fields) {
  json j = to_json(classify_catalog("A6xA6_twisted", ClassifyOptions::fast()));
  EXPECT_EQ(j["rule"], "twisted-alternating-sum");
  EXPECT_EQ(j["bgr2"], true);
  EXPECT_EQ(j["regular_set"], false);
  EXPECT_EQ(j["components"].size(), 2u);
  EXPECT_EQ(j["witness_status"], "verified:absolute");
  EXPECT_TRUE(j["regular_witness"].is_null());
  EXPECT_EQ(j["computed"]["regular_set"], false);
  EXPECT_TRUE(j["conflicts"].empty());
}

TEST(CensusJson, Rows) {
  json j = to_json(full_orbit_census(catalog_group("14T10")));
  EXPECT_EQ(j["levels"].size(), 15u);
  EXPECT_EQ(j["levels"][3]["max_orbit_length"], 168);
  EXPECT_TRUE(j["levels"][2]["witness"].is_null());
  EXPECT_FALSE(j["levels"][3]["witness"].is_null());
}
