#include "doctest.h"

#include <map>
#include <set>

#include "galois5/perm.hpp"

using namespace galois5;

namespace {
Perm5 P(const char* s) { return parse_perm(s); }
}

TEST_CASE("composition is left to right") {
  CHECK(P("(1 2)") * P("(2 3)") == P("(1 3 2)"));
  CHECK(Perm5::identity() * P("(1 4 2)") == P("(1 4 2)"));
  CHECK(P("(1 2 3 4 5)") * P("(1 2 3 4 5)") == P("(1 3 5 2 4)"));
}

TEST_CASE("inverse and associativity") {
  for (const auto& p : Perm5::all()) {
    CHECK(p * p.inverse() == Perm5::identity());
    CHECK(p.inverse() * p == Perm5::identity());
  }
  auto a = P("(1 2 3)"), b = P("(2 5 4)"), c = P("(1 5)");
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("cycle types") {
  CHECK(CycleType::of(P("(1 2 3 4 5)")) == CycleType::from_parts({5}));
  CHECK(CycleType::of(P("(1 2)(3 4)")) == CycleType::from_parts({2, 2, 1}));
  CHECK(CycleType::of(P("(2 3 5 4)")) == CycleType::from_parts({4, 1}));
  CHECK(CycleType::of(Perm5::identity()).is_trivial());
  CHECK(CycleType::from_parts({1, 4}) == CycleType::from_parts({4, 1}));
  CHECK_THROWS_AS(CycleType::from_parts({3, 3}), parse_error);
  CHECK(CycleType::from_parts({3, 2}).order() == 6);
  CHECK(CycleType::from_parts({2, 2, 1}).order() == 2);
  CHECK(CycleType::from_parts({4, 1}).degree() == 3);
  CHECK(CycleType::from_parts({2, 1, 1, 1}).degree() == 1);
  CHECK(CycleType::from_parts({5}).degree() == 4);
}

TEST_CASE("parity") {
  CHECK(is_odd(P("(1 2)")));
  CHECK_FALSE(is_odd(Perm5::identity()));
  CHECK(is_odd(P("(3 2)")));
  CHECK(is_odd(P("(2 3 5 4)")));
  CHECK(is_odd(P("(1 2 3)(4 5)")));
  CHECK_FALSE(is_odd(P("(1 2 3)")));
  // parity is a homomorphism, exhaustively
  for (const auto& p : Perm5::all())
    for (const auto& q : Perm5::all())
      CHECK(is_odd(p * q) == (is_odd(p) != is_odd(q)));
}

TEST_CASE("conjugation preserves cycle type, exhaustively") {
  CHECK(conjugate(P("(1 4 2)"), Perm5::identity()) == P("(1 4 2)"));
  CHECK(conjugate(P("(1 2)"), P("(1 2)")) == P("(1 2)"));
  for (const auto& p : Perm5::all())
    for (const auto& q : Perm5::all())
      CHECK(CycleType::of(conjugate(p, q)) == CycleType::of(p));
}

TEST_CASE("there are 120 elements with the expected class sizes") {
  std::set<Perm5> all(Perm5::all().begin(), Perm5::all().end());
  CHECK(all.size() == 120);
  std::map<std::string, int> by_type;
  for (const auto& p : all) ++by_type[CycleType::of(p).str()];
  CHECK(by_type["[1,1,1,1,1]"] == 1);
  CHECK(by_type["[2,1,1,1]"] == 10);
  CHECK(by_type["[3,1,1]"] == 20);
  CHECK(by_type["[4,1]"] == 30);
  CHECK(by_type["[5]"] == 24);
  CHECK(by_type["[2,2,1]"] == 15);
  CHECK(by_type["[3,2]"] == 20);
}

TEST_CASE("index round trip and identity is least") {
  CHECK(Perm5::identity().index() == 0);
  for (int i = 0; i < 120; ++i)
    CHECK(Perm5::from_index(static_cast<uint8_t>(i)).index() == i);
}

TEST_CASE("cycle notation parse and print") {
  CHECK(to_string(Perm5::identity()) == "Id");
  CHECK(to_string(P("(1 2 3 4 5)")) == "(1 2 3 4 5)");
  CHECK(to_string(P("(3 4)(1 2)")) == "(1 2)(3 4)");
  CHECK(parse_perm("(1,2)(3,4)") == P("(1 2)(3 4)"));
  CHECK(parse_perm(" Id ") == Perm5::identity());
  CHECK(to_string(P("(2 1)")) == "(1 2)");
  CHECK_THROWS_AS(parse_perm("(1 6)"), parse_error);
  CHECK_THROWS_AS(parse_perm("(1 2)(2 3)"), parse_error);
  CHECK_THROWS_AS(parse_perm(""), parse_error);
  CHECK_THROWS_AS(parse_perm("(1)"), parse_error);
  for (const auto& p : Perm5::all()) CHECK(parse_perm(to_string(p)) == p);
}

TEST_CASE("power helper") {
  auto r = P("(1 2 3 4 5)");
  CHECK(power(r, 0) == Perm5::identity());
  CHECK(power(r, 5) == Perm5::identity());
  CHECK(power(r, -1) == r.inverse());
  CHECK(power(r, 2) == r * r);
}

TEST_CASE("multiplication tables agree with direct products") {
  const auto& T = PermTables::get();
  auto all = Perm5::all();
  for (int a = 0; a < 120; a += 7)
    for (int b = 0; b < 120; ++b)
      CHECK(T.mul[a][b] == (all[a] * all[b]).index());
  for (int a = 0; a < 120; ++a) {
    CHECK(T.inv[a] == all[a].inverse().index());
    CHECK(T.odd[a] == is_odd(all[a]));
    CHECK(T.type_slot[a] == CycleType::of(all[a]).slot());
  }
}
