#include "doctest.h"

#include "galois5/report.hpp"

using namespace galois5;

namespace {
RamData RD(const char* s) { return parse_ramdata(s); }
}

TEST_CASE("classification json carries the decision") {
  auto d = RD("g=0; 4,1:4,1:2,2,1");
  auto j = classification_to_json(d, classify(d));
  CHECK(j["realizable"] == true);
  CHECK(j["rule"] == "G0.S5orGA.a");
  CHECK(j["possible"] == json::array({"AffF5"}));
  CHECK(j["facts_used"].size() == 1);
}

TEST_CASE("witness json round-trips through the permutation grammar") {
  auto d = RD("g=1; 2,2,1");
  WitnessReport w;
  w.input = d;
  for (GroupTag t : classify(d).possible)
    w.witnesses.push_back({t, construct_witness(d, t)});
  auto j = witness_to_json(w);
  REQUIRE(j["witnesses"].size() == 1);
  for (const auto& entry : j["witnesses"][0]["entries"]) {
    std::string line = entry.get<std::string>();
    auto eq = line.find('=');
    REQUIRE(eq != std::string::npos);
    CHECK_NOTHROW(parse_perm(line.substr(eq + 1)));
  }
}

TEST_CASE("cover report rows mirror the lattice") {
  auto r = cover_report(GroupTag::D5, counts(RD("g=1; 5:2,2,1:2,2,1")), 1);
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].label == "Id");
  CHECK(r.rows[0].genus_value == 10 + 4 + 5 - 9);
  CHECK(r.rows[2].label == "C5");
  CHECK(r.rows[2].genus_value == 2);
  auto j = cover_to_json(r);
  CHECK(j["rows"].size() == 4);
  CHECK(j["signature"]["periods"] == json::array({2, 2, 5}));
  auto text = cover_to_text(r);
  CHECK(text.find("C5") != std::string::npos);
}

TEST_CASE("decomposition json follows the frozen schema") {
  auto rep = decompose_jacobian(RD("g=2;"), GroupTag::D5);
  auto j = decomposition_to_json(rep);
  CHECK(j["group"] == "D5");
  CHECK(j["closure_genus"]["value"] == 11);
  REQUIRE(j["factors"].size() == 3);
  for (const auto& f : j["factors"]) {
    CHECK(f.contains("irrep"));
    CHECK(f.contains("multiplicity"));
    CHECK(f.contains("kind"));
    CHECK(f.contains("subgroups"));
    CHECK(f["dimension"].contains("form"));
    CHECK(f["dimension"].contains("value"));
    CHECK(f.contains("polarization"));
  }
  CHECK(j["factors"][1]["polarization"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["pass"] == true);
  }
  // identical numbers in both renderings
  auto text = decomposition_to_text(rep);
  CHECK(text.find("closure genus") != std::string::npos);
  CHECK(text.find("11") != std::string::npos);
  // serialized json parses back to the same document
  CHECK(json::parse(j.dump(2)) == j);
}

TEST_CASE("symbolic reports render forms with null values") {
  TypeCounts c;
  c.n = {0, 2, 0, 0, 0, 0};
  auto rep = decompose_counts(GroupTag::D5, c, std::nullopt);
  auto j = decomposition_to_json(rep);
  CHECK(j["signature"]["genus"].is_null());
  CHECK(j["closure_genus"]["value"].is_null());
  CHECK(j["factors"][0]["dimension"]["value"].is_null());
}

TEST_CASE("cover report rejects inputs the group cannot carry") {
  // [4,1] branches have no home in the dihedral group
  CHECK_THROWS_AS(cover_report(GroupTag::D5, counts(RD("g=0; 4,1:4,1")), 0),
                  group_not_possible_error);
  // two [2,2,1] branches on the line: degree 4 < 8, not realizable
  CHECK_THROWS_AS(cover_report(GroupTag::S5, counts(RD("g=1; 2,2,1:2,2,1")), 0),
                  group_not_possible_error);
}
