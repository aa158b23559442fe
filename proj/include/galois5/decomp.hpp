#pragma once

// Group algebra decomposition of the Jacobian of the Galois closure: one
// factor per rational irreducible, each presented as the base Jacobian, the
// Prym of an intermediate covering, or the Prym of a pair of coverings.
// Factor kinds and dimensions are derived from the permutation-character
// decompositions and the coset-orbit genus forms; the closed forms stated
// alongside are kept as transcribed data and used as cross-checks only.

#include <optional>
#include <string>
#include <vector>

#include "galois5/chars.hpp"
#include "galois5/classify.hpp"
#include "galois5/cover.hpp"

namespace galois5 {

struct group_not_possible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolarizationEntry {
  long divisor = 1;
  AffineForm count_form;
  std::optional<long> count_value;
};

struct PolarizationType {
  std::vector<PolarizationEntry> entries;
};

enum class FactorKind { BaseJacobian, PrymOfIntermediate, PrymOfPair, PrymNotIdentified };

std::string_view factor_kind_name(FactorKind k);

struct DecompositionFactor {
  std::string irrep;
  int multiplicity = 1;
  FactorKind kind = FactorKind::PrymNotIdentified;
  std::vector<std::string> subgroups;  // [], [H,N], or [M,N1,N2]
  AffineForm dim_form;
  std::optional<long> dim_value;
  std::optional<PolarizationType> polarization;  // nullopt: not determined
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DecompositionReport {
  GroupTag group{};
  TypeCounts counts;
  std::optional<long> genus;  // base genus; nullopt in symbolic mode
  std::vector<int> periods;   // closure signature periods, ascending
  AffineForm closure_genus_form;
  std::optional<long> closure_genus_value;
  std::vector<DecompositionFactor> factors;
  std::vector<CheckResult> checks;
};

DecompositionReport decompose_jacobian(const RamData& d, GroupTag cls);
DecompositionReport decompose_counts(GroupTag cls, const TypeCounts& c,
                                     std::optional<long> genus);

std::vector<CheckResult> consistency_check(const DecompositionReport& r);

// the independently tabulated dimension forms, in character-table row order
const std::vector<std::pair<std::string, AffineForm>>& stated_dims(GroupTag tag);

// stated polarization type of a factor, with the etale branch selected by
// the counts; nullopt where no type is stated
std::optional<PolarizationType> stated_polarization(GroupTag tag,
                                                    std::string_view irrep,
                                                    const TypeCounts& c,
                                                    std::optional<long> genus);

// order of the kernel of the pullback along the factor's covering
int pullback_kernel_order(GroupTag tag, std::string_view irrep,
                          const TypeCounts& c);

// expected factor multiplicities per group, in row order
const std::vector<int>& expected_multiplicities(GroupTag tag);

}  // namespace galois5
