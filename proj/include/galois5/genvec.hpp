#pragma once

// Generating vectors (a_1, b_1, ..., a_g, b_g, c_1, ..., c_n) for the five
// transitive subgroups of S5: validation of the defining relation
// prod [a_i, b_i] * prod c_j = Id, witness construction, and an exhaustive
// enumeration oracle over a candidate group.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galois5/grp.hpp"
#include "galois5/ram.hpp"

namespace galois5 {

struct length_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_realizable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct budget_exceeded_error : std::runtime_error {
  uint64_t search_space;
  explicit budget_exceeded_error(uint64_t space)
      : std::runtime_error("search space of " + std::to_string(space) +
                           " tuples exceeds the enumeration budget"),
        search_space(space) {}
};

inline constexpr uint64_t kDefaultBudget = 1'000'000'000ULL;

struct GeneratingVector {
  int g = 0;
  std::vector<Perm5> ab;  // a1, b1, ..., a_g, b_g
  std::vector<Perm5> cs;  // c1, ..., cn
};

struct ValidationReport {
  bool product_ok = false;
  bool types_ok = false;
  bool transitive = false;
  std::optional<GroupTag> group;  // set when all three hold
  bool valid() const { return product_ok && types_ok && transitive; }
};

ValidationReport validate(const GeneratingVector& v, const RamData& d);

// witness with generated group exactly `target`; requires that the
// classifier admits the pair, otherwise not_realizable_error
GeneratingVector construct_witness(const RamData& d, GroupTag target,
                                   uint64_t budget = kDefaultBudget);

// exact set of transitive classes realized by some generating vector for d
std::set<GroupTag> enumerate_monodromy(const RamData& d,
                                       uint64_t budget = kDefaultBudget);

// existence of a generating vector for d inside an explicit group whose
// closure is the whole of `group` (test hook; used for conjugation
// invariance of the oracle)
bool has_generating_vector(const Subgroup& group, const RamData& d,
                           uint64_t budget = kDefaultBudget);

std::string serialize_witness(const GeneratingVector& v);           // one line per entry
std::vector<std::string> witness_strings(const GeneratingVector& v);  // same, as a list

// fixed construction tables; the product columns of the last three are
// stated for right-to-left evaluation (tail first, then c1)
namespace witness_tables {

struct HandleChoice {
  Perm5 product;   // prod of the c_i
  Perm5 a1, b1;
  Perm5 comm;      // [a1,b1], closes the relation against `product`
};
const std::array<HandleChoice, 3>& transitive_handle_rows();

struct ProductTypeCase {
  CycleType target;  // type of the full product
  Perm5 tail;        // prod of c_2..c_n
  CycleType t1;
  Perm5 c1;
  Perm5 product;     // tail-then-c1 product
};
const std::vector<ProductTypeCase>& product_type_rows();

struct OddFiveCase {
  Perm5 tail;
  CycleType t1;
  Perm5 c1;
  Perm5 product;
};
const std::vector<OddFiveCase>& odd_five_rows();

struct DegreeTwoCase {
  CycleType t3;
  Perm5 c1;
  CycleType t2;
  Perm5 c2;
  Perm5 product12;  // c2-then-c1 product
  // word over {1:c1, 2:c2} as (letter, exponent) pairs, written left to
  // right but evaluated rightmost factor first; lands on a [5] element
  std::vector<std::pair<int, int>> word;
};
const std::vector<DegreeTwoCase>& degree_two_rows();

struct CommutatorChoice {
  GroupTag group;
  Perm5 a1, b1;
};
const std::array<CommutatorChoice, 3>& five_commutator_rows();

}  // namespace witness_tables

}  // namespace galois5
