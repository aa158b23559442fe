#include "doctest.h"

#include "galois5/ram.hpp"

using namespace galois5;

namespace {
RamData RD(const char* s) { return parse_ramdata(s); }
CycleType T(std::vector<int> p) { return CycleType::from_parts(std::move(p)); }
}

TEST_CASE("ramdata parsing") {
  auto d = RD("g=0; 4,1:4,1:2,2,1");
  CHECK(d.base_genus == 0);
  REQUIRE(d.n() == 3);
  CHECK(d.types[0] == T({4, 1}));
  CHECK(d.types[2] == T({2, 2, 1}));
  CHECK(RD("g=2;").n() == 0);
  CHECK(RD(" g = 3 ; 5 ").base_genus == 3);
  CHECK_THROWS_AS(RD("0; 5"), parse_error);
  CHECK_THROWS_AS(RD("g=-1;"), parse_error);
  CHECK_THROWS_AS(RD("g=0; 4,2"), parse_error);
  CHECK_THROWS_AS(RD("g=0; 1,1,1,1,1"), parse_error);
  CHECK_THROWS_AS(RD("g=0; 5:"), parse_error);
  auto round = parse_ramdata(to_string(d));
  CHECK(round.base_genus == d.base_genus);
  CHECK(round.types == d.types);
}

TEST_CASE("type degrees") {
  CHECK(type_degree(T({5})) == 4);
  CHECK(type_degree(T({2, 1, 1, 1})) == 1);
  CHECK(type_degree(T({4, 1})) == 3);
  CHECK(total_degree(RD("g=0; 4,1:4,1:2,2,1")) == 8);
}

TEST_CASE("even tuples") {
  CHECK(is_even_tuple(RD("g=0; 5:5")));
  CHECK_FALSE(is_even_tuple(RD("g=0; 4,1")));
  CHECK(is_even_tuple(RD("g=0; 4,1:4,1:2,2,1")));
  CHECK(is_even_tuple(RD("g=1;")));
  CHECK(is_even_tuple(RD("g=0; 3,2:2,1,1,1")));
}

TEST_CASE("realizability") {
  CHECK(is_realizable(RD("g=1;")));
  CHECK_FALSE(is_realizable(RD("g=0; 2,1,1,1:2,1,1,1")));  // degree 2 < 8
  CHECK(is_realizable(RD("g=0; 5:5")));                    // degree 8
  CHECK_FALSE(is_realizable(RD("g=2; 4,1")));              // odd tuple
  CHECK(is_realizable(RD("g=1; 4,1:4,1")));
  CHECK_FALSE(is_realizable(RD("g=0; 2,2,1:2,2,1:2,2,1")));  // degree 6 < 8
}

TEST_CASE("counts in the fixed order") {
  auto c = counts(RD("g=0; 5:5"));
  CHECK(c.n == std::array<int, 6>{2, 0, 0, 0, 0, 0});
  c = counts(RD("g=0; 4,1:4,1:2,2,1"));
  CHECK(c[1] == 1);  // n2 counts [2,2,1]
  CHECK(c[2] == 2);  // n3 counts [4,1]
  CHECK(c.total() == 3);
  c = counts(RD("g=0; 3,2:2,1,1,1"));
  CHECK(c[4] == 1);  // n5 counts [3,2]
  CHECK(c[5] == 1);  // n6 counts [2,1,1,1]
}

TEST_CASE("counts round trip as a multiset") {
  auto d = RD("g=1; 2,2,1:5:4,1:2,2,1");
  auto back = types_from_counts(counts(d));
  auto sorted_in = d.types;
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(back.begin(), back.end());
  CHECK(back == sorted_in);
}

TEST_CASE("even tuple iff total degree even") {
  // all tuples up to length 3
  std::vector<CycleType> types;
  for (int s = 0; s < kTypeSlots; ++s) types.push_back(CycleType::from_slot(s));
  for (int a = -1; a < 6; ++a)
    for (int b = -1; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        RamData d;
        d.base_genus = 0;
        if (a >= 0) d.types.push_back(types[a]);
        if (b >= 0) d.types.push_back(types[b]);
        d.types.push_back(types[c]);
        CHECK(is_even_tuple(d) == (total_degree(d) % 2 == 0));
      }
}

TEST_CASE("covering surface genus") {
  CHECK(covering_genus(RD("g=0; 5:5")) == 0);     // degree 8: (8 - 8)/2
  CHECK(covering_genus(RD("g=1;")) == 1);
  CHECK(covering_genus(RD("g=2;")) == 6);         // 5g - 4
  CHECK(covering_genus(RD("g=0; 5:5:5")) == 2);
  CHECK_THROWS_AS(covering_genus(RD("g=0; 4,1")), inconsistent_signature_error);
  // realizable data over the line: genus (degree - 8)/2, never negative
  for (int a = 0; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      for (int c = b; c <= 6; ++c)
        for (int e = c; e <= 6; ++e) {
          RamData d;
          d.base_genus = 0;
          for (int s : {a, b, c, e})
            if (s < 6) d.types.push_back(CycleType::from_slot(s));
          if (!is_realizable(d)) continue;
          long gx = covering_genus(d);
          CHECK(gx == (total_degree(d) - 8) / 2);
          CHECK(gx >= 0);
        }
}

TEST_CASE("closure signature") {
  auto s = closure_signature(RD("g=1; 2,2,1"), GroupTag::A5);
  CHECK(s == ClosureSignature{1, {2}});
  s = closure_signature(RD("g=0; 4,1:4,1:2,2,1"), GroupTag::AffF5);
  CHECK(s == ClosureSignature{0, {2, 4, 4}});
  s = closure_signature(RD("g=0; 3,2:5:2,1,1,1"), GroupTag::S5);
  CHECK(s == ClosureSignature{0, {2, 5, 6}});
  CHECK(closure_signature(RD("g=3;"), GroupTag::S5) == ClosureSignature{3, {}});
  // [3,2] has no home outside S5
  CHECK_THROWS_AS(closure_signature(RD("g=0; 3,2:3,2"), GroupTag::A5),
                  not_transitive_error);
}
