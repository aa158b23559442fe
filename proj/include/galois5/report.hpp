#pragma once

// Text and JSON renderings of the library's outputs. JSON field names are
// part of the external interface and stay frozen.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "galois5/classify.hpp"
#include "galois5/decomp.hpp"
#include "galois5/genvec.hpp"

namespace galois5 {

using json = nlohmann::json;

// ---- classification ----
json classification_to_json(const RamData& d, const ClassificationResult& r);
std::string classification_to_text(const RamData& d, const ClassificationResult& r);

// ---- witnesses ----
struct WitnessReport {
  RamData input;
  std::vector<std::pair<GroupTag, GeneratingVector>> witnesses;
};
json witness_to_json(const WitnessReport& w);
std::string witness_to_text(const WitnessReport& w);

// ---- intermediate coverings ----
struct CoverReportRow {
  std::string label;
  int degree = 1;
  AffineForm genus_form;
  std::optional<long> genus_value;
  AffineForm from_closure_form;
  std::optional<long> from_closure_value;
  AffineForm to_base_form;
  std::optional<long> to_base_value;
};
struct CoverBetweenRow {
  std::string from, to;
  int degree = 1;
  AffineForm form;
  std::optional<long> value;
};
struct CoverReport {
  GroupTag group{};
  TypeCounts counts;
  std::optional<long> genus;
  std::vector<int> periods;
  std::vector<CoverReportRow> rows;
  std::vector<CoverBetweenRow> between;
};

CoverReport cover_report(GroupTag tag, const TypeCounts& c, std::optional<long> genus);
json cover_to_json(const CoverReport& r);
std::string cover_to_text(const CoverReport& r);

// ---- decomposition ----
json decomposition_to_json(const DecompositionReport& r);
std::string decomposition_to_text(const DecompositionReport& r);

}  // namespace galois5
