#pragma once

// Ramification data for degree-5 coverings: the base genus plus an ordered
// tuple of branch types, realizability tests, and the translation to the
// signature of the Galois closure.
//
// Text grammar:  ramdata := "g=" int ";" typelist?
//                typelist := type (":" type)*
//                type     := int ("," int)*   (parts summing to 5)
// e.g. "g=0; 4,1:4,1:2,2,1".

#include <string>
#include <string_view>
#include <vector>

#include "galois5/grp.hpp"
#include "galois5/perm.hpp"

namespace galois5 {

struct RamData {
  int base_genus = 0;
  std::vector<CycleType> types;
  int n() const { return static_cast<int>(types.size()); }
};

RamData parse_ramdata(std::string_view text);  // throws parse_error
std::string to_string(const RamData& d);

// branch counts in the fixed order
// n1:[5]  n2:[2,2,1]  n3:[4,1]  n4:[3,1,1]  n5:[3,2]  n6:[2,1,1,1]
struct TypeCounts {
  std::array<int, 6> n{};
  int operator[](int slot) const { return n[slot]; }
  int total() const;
  bool operator==(const TypeCounts&) const = default;
};

int type_degree(const CycleType& t);    // sum of (part - 1)
bool is_even_tuple(const RamData& d);   // even number of odd types
int total_degree(const RamData& d);
bool is_realizable(const RamData& d);   // g>=1: even; g=0: even and degree >= 8
TypeCounts counts(const RamData& d);
std::vector<CycleType> types_from_counts(const TypeCounts& c);  // multiset round-trip

// genus of the covering surface X from degree-5 Riemann-Hurwitz,
// 2 g_X - 2 = 5(2g - 2) + deg(R_f); throws inconsistent_signature_error
// when the tuple is odd (non-integral genus)
long covering_genus(const RamData& d);

struct inconsistent_signature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// signature (g; m_1,...,m_n) of the Galois closure, m_i = lcm of the parts
// of t_i, periods sorted ascending; every type must occur in cls
struct ClosureSignature {
  int genus = 0;
  std::vector<int> periods;
  bool operator==(const ClosureSignature&) const = default;
};

ClosureSignature closure_signature(const RamData& d, GroupTag cls);

}  // namespace galois5
