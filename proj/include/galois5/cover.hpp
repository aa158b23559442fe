#pragma once

// Galois-closure analysis: geometric signature, genus of the closure, and
// genus/ramification of every intermediate quotient via orbits of the local
// monodromy generators on coset spaces. Closed forms for the four lattices
// are kept as transcribed data and cross-checked against the orbit engine.

#include <optional>
#include <string>
#include <vector>

#include "galois5/affine.hpp"
#include "galois5/genvec.hpp"
#include "galois5/grp.hpp"
#include "galois5/ram.hpp"

namespace galois5 {

struct BranchEntry {
  int order = 1;   // m_i = lcm of the parts of the branch type
  Perm5 rep;       // local monodromy generator c_i
};

struct GeometricSignature {
  int base_genus = 0;
  std::vector<BranchEntry> branches;
};

// requires validate(v, d) to pass
GeometricSignature geometric_signature(const GeneratingVector& v, const RamData& d);

// 2 g' - 2 = |G|(2g - 2) + sum |G|(1 - 1/m_i); exact, rejects non-integral
// or negative genus
long closure_genus(const GeometricSignature& sig, int group_order);

struct IntermediateCovering {
  std::string label;
  int degree_over_base = 1;                   // [G:H]
  long genus = 0;                             // of the quotient by H
  long deg_ram_to_base = 0;                   // deg R of the induced map to Y
  long deg_ram_from_closure = 0;              // deg R of the quotient map
  std::vector<std::vector<int>> ram_profile;  // orbit lengths per branch
};

IntermediateCovering intermediate(const GeometricSignature& sig, const Subgroup& G,
                                  const Subgroup& H);  // not_a_subgroup_error

struct BetweenCovering {
  int degree = 1;  // [N:H]
  long deg_ram = 0;
};

BetweenCovering intermediate_between(const GeometricSignature& sig,
                                     const Subgroup& G, const Subgroup& H,
                                     const Subgroup& N);

struct CoverForms {
  AffineForm genus;
  AffineForm deg_ram_from_closure;
  AffineForm deg_ram_to_base;
};

// symbolic covering data derived from coset orbits (one orbit count per
// branch type, checked independent of the chosen representative)
CoverForms orbit_forms(GroupTag tag, const Subgroup& h);
CoverForms orbit_forms(GroupTag tag, std::string_view label);
AffineForm between_orbit_form(GroupTag tag, std::string_view h_label,
                              std::string_view n_label);

// transcribed closed forms per lattice row
const CoverForms& table_forms(GroupTag tag, std::string_view label);

struct BetweenEq {
  std::string from, to;
  AffineForm deg;
};
const std::vector<BetweenEq>& between_table(GroupTag tag);

// counts supported by the group: zero on absent types, even n2 for D5,
// even n3 for AffF5, even n3+n5+n6 for S5
bool counts_admissible(GroupTag tag, const TypeCounts& c);

AffineForm closure_genus_form(GroupTag tag);

// a formal signature from counts alone (representatives by least element of
// each type inside the canonical group); rejects inadmissible counts
GeometricSignature signature_from_counts(GroupTag tag, const TypeCounts& c,
                                         int base_genus);

}  // namespace galois5
