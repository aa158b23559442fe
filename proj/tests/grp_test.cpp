#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "galois5/grp.hpp"

using namespace galois5;

namespace {
Perm5 P(const char* s) { return parse_perm(s); }
}

TEST_CASE("closure orders of the named generating sets") {
  CHECK(Subgroup::closure({P("(1 2 3 4 5)")}).order() == 5);
  CHECK(Subgroup::closure({P("(1 2 3 4 5)"), P("(2 3 5 4)")}).order() == 20);
  CHECK(Subgroup::closure({P("(1 5 2 3 4)"), P("(1 3 4 2 5)")}).order() == 60);
  CHECK(Subgroup::closure({P("(1 2 3 4 5)"), P("(1 2)")}).order() == 120);
  CHECK(Subgroup::closure({P("(1 2)")}).order() == 2);
  CHECK(Subgroup().order() == 1);
}

TEST_CASE("transitivity") {
  CHECK(canonical_group(GroupTag::S5).is_transitive());
  CHECK_FALSE(Subgroup::closure({P("(1 2)")}).is_transitive());
  for (GroupTag t : kAllGroups) CHECK(canonical_group(t).is_transitive());
}

TEST_CASE("identify_transitive") {
  CHECK(identify_transitive(Subgroup::closure({P("(1 3 5 2 4)")})) == GroupTag::C5);
  CHECK(identify_transitive(Subgroup::closure({P("(1 2 3 4 5)"), P("(1 2)")})) ==
        GroupTag::S5);
  CHECK(identify_transitive(Subgroup::closure({P("(1 5 2 3 4)"), P("(1 3 4 2 5)")})) ==
        GroupTag::A5);
  CHECK_THROWS_AS(identify_transitive(Subgroup::closure({P("(1 2)")})),
                  not_transitive_error);
}

// every subgroup generated by a pair of elements; Lagrange, and the orders
// of the transitive ones
TEST_CASE("exhaustive two-generator subgroup sweep") {
  std::set<std::pair<uint64_t, uint64_t>> seen;
  std::set<int> transitive_orders;
  int lagrange_failures = 0;
  auto all = Perm5::all();
  for (const auto& a : all)
    for (const auto& b : all) {
      Subgroup h = Subgroup::closure({a, b});
      if (120 % h.order() != 0) ++lagrange_failures;
      if (!seen.insert({h.mask().lo, h.mask().hi}).second) continue;
      if (h.is_transitive()) {
        transitive_orders.insert(h.order());
        CHECK_NOTHROW(identify_transitive(h));
      }
    }
  CHECK(lagrange_failures == 0);
  CHECK(transitive_orders == std::set<int>{5, 10, 20, 60, 120});
}

TEST_CASE("element types per group, identity excluded") {
  auto types = [](GroupTag t) {
    std::set<std::string> r;
    for (const auto& ct : element_types(t)) r.insert(ct.str());
    return r;
  };
  CHECK(types(GroupTag::C5) == std::set<std::string>{"[5]"});
  CHECK(types(GroupTag::D5) == std::set<std::string>{"[5]", "[2,2,1]"});
  CHECK(types(GroupTag::AffF5) == std::set<std::string>{"[5]", "[4,1]", "[2,2,1]"});
  CHECK(types(GroupTag::A5) == std::set<std::string>{"[5]", "[3,1,1]", "[2,2,1]"});
  CHECK(types(GroupTag::S5) ==
        std::set<std::string>{"[5]", "[4,1]", "[3,2]", "[3,1,1]", "[2,2,1]",
                              "[2,1,1,1]"});
}

TEST_CASE("lattice shapes") {
  CHECK(lattice(GroupTag::C5).size() == 2);
  CHECK(lattice(GroupTag::D5).size() == 4);
  CHECK(lattice(GroupTag::AffF5).size() == 5);
  CHECK(lattice(GroupTag::A5).size() == 5);
  CHECK(lattice(GroupTag::S5).size() == 9);

  auto covers = [](GroupTag t, const char* label) {
    return lattice_node(t, label).covers;
  };
  CHECK(covers(GroupTag::D5, "C2") == std::vector<std::string>{"D5"});
  CHECK(covers(GroupTag::D5, "C5") == std::vector<std::string>{"D5"});
  CHECK(covers(GroupTag::A5, "C5") == std::vector<std::string>{"D5"});
  CHECK(covers(GroupTag::A5, "D5") == std::vector<std::string>{"A5"});
  CHECK(covers(GroupTag::S5, "S3") == std::vector<std::string>{"D6", "S4"});
  CHECK_THROWS_AS(lattice_node(GroupTag::D5, "S4"), unknown_subgroup_error);
}

TEST_CASE("lattice containments and normality flags") {
  for (GroupTag t : kAllGroups) {
    const auto& g = canonical_group(t);
    for (const auto& n : lattice(t)) {
      CHECK(n.subgroup.is_subgroup_of(g));
      CHECK(n.normal_in_group == n.subgroup.is_normal_in(g));
      for (const auto& up : n.covers) {
        const auto& over = lattice_node(t, up);
        CHECK(n.subgroup.is_subgroup_of(over.subgroup));
        CHECK(n.subgroup.order() < over.subgroup.order());
      }
    }
  }
  // spot values
  CHECK(lattice_node(GroupTag::D5, "C5").normal_in_group);
  CHECK_FALSE(lattice_node(GroupTag::D5, "C2").normal_in_group);
  CHECK(lattice_node(GroupTag::S5, "A5").normal_in_group);
  CHECK_FALSE(lattice_node(GroupTag::S5, "S4").normal_in_group);
  CHECK_FALSE(lattice_node(GroupTag::AffF5, "C4").normal_in_group);
  CHECK(lattice_node(GroupTag::AffF5, "D5").normal_in_group);
}

TEST_CASE("lattice node orders") {
  auto ord = [](GroupTag t, const char* l) { return lattice_node(t, l).subgroup.order(); };
  CHECK(ord(GroupTag::S5, "S3") == 6);
  CHECK(ord(GroupTag::S5, "A4") == 12);
  CHECK(ord(GroupTag::S5, "D5") == 10);
  CHECK(ord(GroupTag::S5, "D6") == 12);
  CHECK(ord(GroupTag::S5, "S4") == 24);
  CHECK(ord(GroupTag::S5, "A5") == 60);
  CHECK(ord(GroupTag::S5, "AffF5") == 20);
  CHECK(ord(GroupTag::AffF5, "C4") == 4);
  CHECK(ord(GroupTag::D5, "C2") == 2);
}

TEST_CASE("point stabilizers") {
  CHECK(point_stabilizer(GroupTag::D5).label == "C2");
  CHECK(point_stabilizer(GroupTag::AffF5).label == "C4");
  CHECK(point_stabilizer(GroupTag::A5).label == "A4");
  CHECK(point_stabilizer(GroupTag::S5).label == "S4");
  CHECK(point_stabilizer(GroupTag::C5).label == "Id");
}

TEST_CASE("intersections and joins inside S5") {
  const auto& d6 = lattice_node(GroupTag::S5, "D6").subgroup;
  const auto& s4 = lattice_node(GroupTag::S5, "S4").subgroup;
  const auto& s3 = lattice_node(GroupTag::S5, "S3").subgroup;
  const auto& a5 = lattice_node(GroupTag::S5, "A5").subgroup;
  const auto& aff = lattice_node(GroupTag::S5, "AffF5").subgroup;
  const auto& d5 = lattice_node(GroupTag::S5, "D5").subgroup;
  const auto& a4 = lattice_node(GroupTag::S5, "A4").subgroup;
  CHECK(d6.intersect(s4) == s3);
  CHECK(s4.intersect(a5) == a4);
  CHECK(a5.intersect(aff) == d5);
  CHECK(Subgroup::join(d6, s4) == canonical_group(GroupTag::S5));
  CHECK(Subgroup::join(s4, a5) == canonical_group(GroupTag::S5));
  CHECK(Subgroup::join(a5, aff) == canonical_group(GroupTag::S5));
}

TEST_CASE("group names round trip") {
  for (GroupTag t : kAllGroups) CHECK(group_from_name(group_name(t)) == t);
  CHECK_THROWS_AS(group_from_name("Q8"), unknown_subgroup_error);
}

TEST_CASE("conjugacy classes inside each canonical group") {
  std::map<GroupTag, std::vector<size_t>> expected = {
      {GroupTag::C5, {1, 1, 1, 1, 1}},
      {GroupTag::D5, {1, 2, 2, 5}},
      {GroupTag::AffF5, {1, 4, 5, 5, 5}},
      {GroupTag::A5, {1, 12, 12, 15, 20}},
      {GroupTag::S5, {1, 10, 15, 20, 20, 24, 30}},
  };
  for (auto& [tag, sizes] : expected) {
    auto classes = conjugacy_classes(canonical_group(tag));
    std::vector<size_t> got;
    for (auto& c : classes) got.push_back(c.size());
    std::sort(got.begin(), got.end());
    std::sort(sizes.begin(), sizes.end());
    CHECK(got == sizes);
  }
}
