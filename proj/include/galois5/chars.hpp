#pragma once

// Rational character tables of the five transitive subgroups of S5,
// permutation characters induced by trivial characters of subgroups, and
// their decomposition into rational irreducibles by Frobenius reciprocity.
// Induced character values come from fixed-coset counts, so the stored
// tables are the only transcribed ingredient.

#include <string>
#include <string_view>
#include <vector>

#include "galois5/affine.hpp"
#include "galois5/grp.hpp"

namespace galois5 {

struct not_decomposable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RationalClass {
  Perm5 rep;
  int size = 0;
};

struct RationalCharRow {
  std::string label;
  int degree = 0;
  std::vector<long> values;      // one per class
  long norm = 0;                 // <chi,chi> under the class-weighted pairing
  int schur_index = 1;
  int constituent_degree = 0;    // degree of an associated complex constituent
};

struct RationalCharacterTable {
  GroupTag group{};
  std::vector<RationalClass> classes;
  std::vector<RationalCharRow> rows;

  int class_index_of(const Perm5& p) const;  // by cycle type
};

const RationalCharacterTable& character_table(GroupTag tag);

using CharacterVector = std::vector<long>;  // values per rational class

// permutation character of the right-coset action of the canonical group;
// value at x = #{ cosets Hg : Hgx = Hg }
CharacterVector induced_trivial(GroupTag tag, std::string_view label);
CharacterVector induced_trivial(GroupTag tag, const Subgroup& h);

// multiplicities of the rational irreducibles in chi, in table row order;
// reconstruction must be exact and non-negative
std::vector<std::pair<std::string, int>> decompose(const CharacterVector& chi,
                                                   GroupTag tag);

// number of group-algebra factors attached to a rational irreducible:
// the degree of an associated complex constituent over its Schur index
int multiplicity_l(GroupTag tag, std::string_view row_label);

// class-weighted inner product of two class functions
Rational class_inner_product(GroupTag tag, const CharacterVector& a,
                             const CharacterVector& b);

// coefficients of chi_M + chi_N - chi_N1 - chi_N2 in the rational
// irreducible basis, M = N1 cap N2 and N = <N1, N2>; defined where every
// rational irreducible is absolutely irreducible (the full symmetric group)
std::vector<std::pair<std::string, int>> pair_prym_coefficients(
    GroupTag tag, std::string_view n1_label, std::string_view n2_label);

}  // namespace galois5
