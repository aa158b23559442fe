#include "doctest.h"

#include "galois5/classify.hpp"
#include "galois5/genvec.hpp"

using namespace galois5;

namespace {
RamData RD(const char* s) { return parse_ramdata(s); }
using GT = GroupTag;
std::set<GT> S(std::initializer_list<GT> l) { return {l}; }
}  // namespace

TEST_CASE("positive genus clauses") {
  CHECK(classify(RD("g=1;")).possible == S({GT::C5}));
  CHECK(classify(RD("g=1;")).rule == "GP.N=0");
  CHECK(classify(RD("g=2;")).possible ==
        S({GT::C5, GT::D5, GT::AffF5, GT::A5, GT::S5}));
  CHECK(classify(RD("g=1; 3,2:3,2")).possible == S({GT::S5}));
  CHECK(classify(RD("g=1; 3,2:3,2")).rule == "GP.32or2111");
  CHECK(classify(RD("g=3; 2,1,1,1:5:2,1,1,1")).possible == S({GT::S5}));
  CHECK(classify(RD("g=1; 3,1,1:4,1:4,1")).possible == S({GT::S5}));
  CHECK(classify(RD("g=1; 3,1,1:4,1:4,1")).rule == "GP.311and41");
  CHECK(classify(RD("g=1; 4,1:4,1")).possible == S({GT::S5, GT::AffF5}));
  CHECK(classify(RD("g=1; 4,1:4,1")).rule == "GP.S5orGA");
  CHECK(classify(RD("g=1; 3,1,1")).possible == S({GT::S5, GT::A5}));
  CHECK(classify(RD("g=1; 3,1,1")).rule == "GP.S5orA5");
  CHECK(classify(RD("g=1; 2,2,1")).possible == S({GT::S5}));
  CHECK(classify(RD("g=1; 2,2,1")).rule == "GP.221a");
  CHECK(classify(RD("g=2; 2,2,1")).possible == S({GT::S5, GT::A5}));
  CHECK(classify(RD("g=2; 2,2,1")).rule == "GP.221b");
  CHECK(classify(RD("g=1; 2,2,1:2,2,1:2,2,1")).possible == S({GT::S5, GT::A5}));
  CHECK(classify(RD("g=1; 2,2,1:2,2,1")).possible ==
        S({GT::D5, GT::AffF5, GT::A5, GT::S5}));
  CHECK(classify(RD("g=1; 2,2,1:2,2,1")).rule == "GP.221c");
  CHECK(classify(RD("g=1; 5")).possible == S({GT::D5, GT::AffF5, GT::A5, GT::S5}));
  CHECK(classify(RD("g=1; 5")).rule == "GP.only5a");
  CHECK(classify(RD("g=1; 5:5")).possible ==
        S({GT::C5, GT::D5, GT::AffF5, GT::A5, GT::S5}));
  CHECK(classify(RD("g=1; 5:5")).rule == "GP.only5b");
}

TEST_CASE("genus zero clauses") {
  CHECK(classify(RD("g=0; 3,2:3,2:2,2,1")).possible == S({GT::S5}));
  CHECK(classify(RD("g=0; 3,2:3,2:2,2,1")).rule == "G0.32or2111");
  CHECK(classify(RD("g=0; 3,1,1:4,1:2,1,1,1:5")).rule == "G0.32or2111");
  CHECK(classify(RD("g=0; 3,1,1:3,1,1:4,1:4,1")).possible == S({GT::S5}));
  CHECK(classify(RD("g=0; 3,1,1:3,1,1:4,1:4,1")).rule == "G0.311and41");
  CHECK(classify(RD("g=0; 4,1:4,1:2,2,1")).possible == S({GT::AffF5}));
  CHECK(classify(RD("g=0; 4,1:4,1:2,2,1")).rule == "G0.S5orGA.a");
  CHECK(classify(RD("g=0; 4,1:4,1:5")).possible == S({GT::AffF5, GT::S5}));
  CHECK(classify(RD("g=0; 4,1:4,1:5")).rule == "G0.S5orGA.b");
  CHECK(classify(RD("g=0; 3,1,1:3,1,1:3,1,1:3,1,1")).possible == S({GT::A5}));
  CHECK(classify(RD("g=0; 3,1,1:3,1,1:3,1,1:3,1,1")).rule == "G0.A5");
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:2,2,1:2,2,1")).possible == S({GT::D5}));
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:2,2,1:2,2,1")).rule == "G0.221a");
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:5")).possible == S({GT::D5}));
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:2,2,1:5")).possible == S({GT::A5}));
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:2,2,1:5")).rule == "G0.221b");
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:5:5")).possible == S({GT::D5, GT::A5}));
  CHECK(classify(RD("g=0; 2,2,1:2,2,1:5:5")).rule == "G0.221c");
  CHECK(classify(RD("g=0; 5:5")).possible == S({GT::C5}));
  CHECK(classify(RD("g=0; 5:5:5")).possible == S({GT::C5, GT::A5}));
  CHECK(classify(RD("g=0; 5:5:5")).rule == "G0.only5");
}

TEST_CASE("unrealizable data yields the empty set") {
  CHECK(classify(RD("g=0; 2,1,1,1:2,1,1,1")).possible.empty());
  CHECK(classify(RD("g=0; 2,1,1,1:2,1,1,1")).rule == "unrealizable");
  CHECK(classify(RD("g=2; 4,1")).possible.empty());
  for (int g = 0; g <= 2; ++g)
    for (int a = 0; a <= 6; ++a)
      for (int b = a; b <= 6; ++b) {
        RamData d;
        d.base_genus = g;
        for (int s : {a, b})
          if (s < 6) d.types.push_back(CycleType::from_slot(s));
        CHECK(classify(d).possible.empty() == !is_realizable(d));
      }
}

TEST_CASE("classification depends only on the type multiset") {
  auto a = classify(RD("g=0; 4,1:2,2,1:4,1"));
  auto b = classify(RD("g=0; 2,2,1:4,1:4,1"));
  CHECK(a.possible == b.possible);
  CHECK(a.rule == b.rule);
}

TEST_CASE("every admitted group contains all the branch types") {
  for (int g = 0; g <= 1; ++g)
    for (int a = 0; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        for (int c = b; c <= 6; ++c) {
          RamData d;
          d.base_genus = g;
          for (int s : {a, b, c})
            if (s < 6) d.types.push_back(CycleType::from_slot(s));
          for (GroupTag t : classify(d).possible) {
            const auto& avail = element_types(t);
            for (const auto& ty : d.types) CHECK(avail.count(ty) == 1);
          }
        }
}

TEST_CASE("explanations cite the facts used") {
  auto d1 = RD("g=1; 2,2,1");
  auto r1 = classify(d1);
  CHECK(explain(d1, r1).find("signature (1;2)") != std::string::npos);

  auto d2 = RD("g=0; 4,1:4,1:2,2,1");
  auto r2 = classify(d2);
  CHECK(explain(d2, r2).find("solvable") != std::string::npos);

  auto d3 = RD("g=2;");
  auto r3 = classify(d3);
  CHECK(explain(d3, r3).find("GP.N=0") != std::string::npos);
  CHECK(r3.facts_used.empty());
}

// the classifier equals the exhaustive oracle on a small grid (the full
// grid runs in the acceptance suite)
TEST_CASE("classifier matches the oracle, small grid") {
  for (int g = 0; g <= 1; ++g)
    for (int a = 0; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        for (int c = b; c <= 6; ++c) {
          RamData d;
          d.base_genus = g;
          for (int s : {a, b, c})
            if (s < 6) d.types.push_back(CycleType::from_slot(s));
          if (total_degree(d) > 10) continue;
          CHECK(classify(d).possible == enumerate_monodromy(d));
        }
}
