#pragma once

// Decision procedure: ramification data -> the exact set of possible
// monodromy groups, with the clause that fired and the external facts the
// derivation leans on.

#include <set>
#include <string>
#include <vector>

#include "galois5/grp.hpp"
#include "galois5/ram.hpp"

namespace galois5 {

// the two facts imported from the classification of group actions on
// surfaces of low genus
inline constexpr std::string_view kFactNoA5OnSignature12 =
    "no A5 action with signature (1;2) exists on a surface of genus 16";
inline constexpr std::string_view kFactGenus1Solvable =
    "the automorphism group of a genus-1 surface is solvable (Z^2 x| C_k, "
    "k in {2,4,6})";

struct ClassificationResult {
  std::set<GroupTag> possible;
  std::string rule;                          // e.g. "GP.32or2111", "G0.221a"
  std::vector<std::string> facts_used;
};

ClassificationResult classify(const RamData& d);
std::string explain(const RamData& d, const ClassificationResult& r);

}  // namespace galois5
