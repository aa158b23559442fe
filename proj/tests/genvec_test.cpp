#include "doctest.h"

#include <set>

#include "galois5/classify.hpp"
#include "galois5/genvec.hpp"

using namespace galois5;

namespace {
Perm5 P(const char* s) { return parse_perm(s); }
RamData RD(const char* s) { return parse_ramdata(s); }

Perm5 eval_word_rightmost_first(const Perm5& c1, const Perm5& c2,
                                const std::vector<std::pair<int, int>>& word) {
  Perm5 prod;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    prod = prod * power(it->first == 1 ? c1 : c2, it->second);
  return prod;
}
}  // namespace

TEST_CASE("handle-choice rows close the relation and have type-[5] a1*b1") {
  for (const auto& row : witness_tables::transitive_handle_rows()) {
    CHECK(commutator(row.a1, row.b1) == row.comm);
    CHECK((row.comm * row.product).is_identity());
    CHECK(is_odd(row.a1));
    // transitivity argument: either the product is a 5-cycle or a1*b1 is
    bool product_five = CycleType::of(row.product) == CycleType::from_parts({5});
    bool a1b1_five = CycleType::of(row.a1 * row.b1) == CycleType::from_parts({5});
    CHECK((product_five || a1b1_five));
  }
  // the first row's commutator, pinned
  const auto& r0 = witness_tables::transitive_handle_rows()[0];
  CHECK(r0.a1 == P("(1 3)(2 5 4)"));
  CHECK(r0.b1 == P("(1 3 5 2)"));
  CHECK(r0.comm == P("(1 5 4 3 2)"));
  // any vector built from a row generates the full symmetric group: already
  // the handles and the product do
  for (const auto& row : witness_tables::transitive_handle_rows())
    CHECK(identify_transitive(Subgroup::closure({row.a1, row.b1, row.product})) ==
          GroupTag::S5);
}

TEST_CASE("prescribed-product rows: types and products") {
  for (const auto& row : witness_tables::product_type_rows()) {
    CHECK(CycleType::of(row.c1) == row.t1);
    CHECK(CycleType::of(row.product) == row.target);
    // product column evaluated tail-first
    CHECK(row.tail * row.c1 == row.product);
  }
  CHECK(witness_tables::product_type_rows().size() == 27);
}

TEST_CASE("odd-factor rows produce [5] products") {
  for (const auto& row : witness_tables::odd_five_rows()) {
    CHECK(CycleType::of(row.c1) == row.t1);
    CHECK(row.t1.is_odd());
    CHECK(CycleType::of(row.product) == CycleType::from_parts({5}));
    CHECK(row.tail * row.c1 == row.product);
  }
}

TEST_CASE("degree-two product rows generate transitive groups") {
  for (const auto& row : witness_tables::degree_two_rows()) {
    CHECK(CycleType::of(row.c2) == row.t2);
    CHECK(CycleType::of(row.product12) == row.t3);
    CHECK(row.c2 * row.c1 == row.product12);
    // c3 := inverse of the product closes the relation with type t3
    Perm5 c3 = row.product12.inverse();
    CHECK(CycleType::of(c3) == row.t3);
    Subgroup h = Subgroup::closure({row.c1, row.c2, c3});
    CHECK(h.is_transitive());
    Perm5 w = eval_word_rightmost_first(row.c1, row.c2, row.word);
    CHECK(CycleType::of(w) == CycleType::from_parts({5}));
    CHECK(h.contains(w));
  }
}

TEST_CASE("five-commutator rows generate their group") {
  for (const auto& row : witness_tables::five_commutator_rows()) {
    Subgroup h = Subgroup::closure({row.a1, row.b1});
    CHECK(identify_transitive(h) == row.group);
    CHECK(CycleType::of(commutator(row.a1, row.b1)) == CycleType::from_parts({5}));
  }
}

TEST_CASE("validate: torus with one handle pair") {
  GeneratingVector v;
  v.g = 1;
  v.ab = {P("(1 2 3 4 5)"), Perm5::identity()};
  auto rep = validate(v, RD("g=1;"));
  CHECK(rep.valid());
  CHECK(rep.group == GroupTag::C5);
}

TEST_CASE("validate: non-transitive vector is rejected") {
  GeneratingVector v;
  v.g = 0;
  v.cs = {P("(1 2)"), P("(1 2)")};
  auto rep = validate(v, RD("g=0; 2,1,1,1:2,1,1,1"));
  CHECK(rep.product_ok);
  CHECK(rep.types_ok);
  CHECK_FALSE(rep.transitive);
  CHECK_FALSE(rep.valid());
}

TEST_CASE("validate: length mismatches throw") {
  GeneratingVector v;
  v.g = 0;
  v.cs = {P("(1 2)")};
  CHECK_THROWS_AS(validate(v, RD("g=1; 2,1,1,1")), length_mismatch_error);
  CHECK_THROWS_AS(validate(v, RD("g=0; 2,1,1,1:2,1,1,1")), length_mismatch_error);
}

TEST_CASE("oracle: base cases") {
  CHECK(enumerate_monodromy(RD("g=0; 5:5")) == std::set<GroupTag>{GroupTag::C5});
  CHECK(enumerate_monodromy(RD("g=1;")) == std::set<GroupTag>{GroupTag::C5});
  CHECK(enumerate_monodromy(RD("g=0; 3,2:3,2:2,2,1")) ==
        std::set<GroupTag>{GroupTag::S5});
  CHECK(enumerate_monodromy(RD("g=0; 2,1,1,1:2,1,1,1")).empty());
}

TEST_CASE("oracle: a realizable degree-8 tuple has a transitive witness") {
  // brute-force realizability of (0; [5],[5])
  auto found = enumerate_monodromy(RD("g=0; 5:5"));
  REQUIRE(found.size() == 1);
  auto w = construct_witness(RD("g=0; 5:5"), GroupTag::C5);
  auto rep = validate(w, RD("g=0; 5:5"));
  CHECK(rep.valid());
  CHECK(rep.group == GroupTag::C5);
}

TEST_CASE("oracle is invariant under reordering the branch types") {
  auto a = enumerate_monodromy(RD("g=0; 4,1:2,2,1:4,1"));
  auto b = enumerate_monodromy(RD("g=0; 2,2,1:4,1:4,1"));
  auto c = enumerate_monodromy(RD("g=0; 4,1:4,1:2,2,1"));
  CHECK(a == b);
  CHECK(b == c);
  CHECK(c == std::set<GroupTag>{GroupTag::AffF5});
}

TEST_CASE("oracle is invariant under conjugating the candidate group") {
  RamData d = RD("g=0; 2,2,1:2,2,1:5");
  const auto& g = canonical_group(GroupTag::D5);
  bool base = has_generating_vector(g, d);
  for (const char* cs : {"(1 3)", "(2 4 5)", "(1 2 3 4)"}) {
    Perm5 x = P(cs);
    std::vector<Perm5> conj_gens;
    for (const auto& gen : g.generators()) conj_gens.push_back(conjugate(gen, x));
    CHECK(has_generating_vector(Subgroup::closure(conj_gens), d) == base);
  }
}

TEST_CASE("budget refusal reports the search space") {
  RamData d = RD("g=3; 2,2,1:2,2,1");
  CHECK_THROWS_AS(enumerate_monodromy(d, 1000), budget_exceeded_error);
  try {
    enumerate_monodromy(d, 1000);
  } catch (const budget_exceeded_error& e) {
    CHECK(e.search_space > 1000);
  }
}

TEST_CASE("witness construction: pinned cases") {
  // all-[5] data on the line with alternating target
  auto w = construct_witness(RD("g=0; 5:5:5"), GroupTag::A5);
  REQUIRE(w.cs.size() == 3);
  CHECK(w.cs[0] == P("(1 3 2 5 4)"));
  CHECK(w.cs[1] == P("(1 3 5 4 2)"));
  auto rep = validate(w, RD("g=0; 5:5:5"));
  CHECK(rep.valid());
  CHECK(rep.group == GroupTag::A5);

  // unramified genus-2 data: every group, found by construction or search
  for (GroupTag t : kAllGroups) {
    auto w2 = construct_witness(RD("g=2;"), t);
    auto rep2 = validate(w2, RD("g=2;"));
    CHECK(rep2.valid());
    CHECK(rep2.group == t);
  }

  // affine target from two [4,1] branches
  auto w3 = construct_witness(RD("g=0; 4,1:4,1:2,2,1"), GroupTag::AffF5);
  auto rep3 = validate(w3, RD("g=0; 4,1:4,1:2,2,1"));
  CHECK(rep3.valid());
  CHECK(rep3.group == GroupTag::AffF5);
  CHECK(CycleType::of(w3.cs[0]) == CycleType::from_parts({4, 1}));
  CHECK(CycleType::of(w3.cs[1]) == CycleType::from_parts({4, 1}));
}

TEST_CASE("witness construction rejects impossible targets") {
  CHECK_THROWS_AS(construct_witness(RD("g=0; 5:5"), GroupTag::A5),
                  not_realizable_error);
  CHECK_THROWS_AS(construct_witness(RD("g=1; 2,2,1"), GroupTag::A5),
                  not_realizable_error);
  CHECK_THROWS_AS(construct_witness(RD("g=0; 2,1,1,1:2,1,1,1"), GroupTag::S5),
                  not_realizable_error);
}

TEST_CASE("witness soundness on a small grid") {
  // g <= 2, n <= 3, all type multisets of degree <= 10; slot 6 marks "absent"
  for (int g = 0; g <= 2; ++g)
    for (int a = 0; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        for (int c = b; c <= 6; ++c) {
          RamData d;
          d.base_genus = g;
          for (int s : {a, b, c})
            if (s < 6) d.types.push_back(CycleType::from_slot(s));
          if (total_degree(d) > 10) continue;
          for (GroupTag t : classify(d).possible) {
            auto w = construct_witness(d, t);
            auto rep = validate(w, d);
            CHECK(rep.valid());
            CHECK(rep.group == t);
          }
        }
}

TEST_CASE("witness serialization") {
  GeneratingVector v;
  v.g = 1;
  v.ab = {P("(1 2 3 4 5)"), Perm5::identity()};
  v.cs = {P("(1 2)(3 4)")};
  CHECK(serialize_witness(v) == "a1=(1 2 3 4 5)\nb1=Id\nc1=(1 2)(3 4)\n");
  CHECK(witness_strings(v) ==
        std::vector<std::string>{"a1=(1 2 3 4 5)", "b1=Id", "c1=(1 2)(3 4)"});
}
