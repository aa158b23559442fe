#pragma once

// Exhaustive self-verification: the classifier against the enumeration
// oracle over a bounded grid, point values, table reproduction, character
// identities, decomposition checksums, polarization bookkeeping, witness
// soundness, and the pair-dimension cross-checks.

#include <cstdint>
#include <string>
#include <vector>

#include "galois5/genvec.hpp"

namespace galois5 {

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int gmax = 1;
  int nmax = 4;
  int degmax = 12;
  bool extended_genus0 = true;  // also sweep g = 0, n <= 5, degree <= 14
  uint64_t budget = kDefaultBudget;
};

std::vector<VerifyItem> run_verification(const VerifyOptions& opt);
bool verification_passes(const std::vector<VerifyItem>& items);
std::string render_verification(const std::vector<VerifyItem>& items);

// every ramification multiset with n <= nmax branch types, total degree
// <= degmax, at base genus g
std::vector<RamData> ramification_grid(int g, int nmax, int degmax);

}  // namespace galois5
