#pragma once

// Subgroup machinery for S5: closure, transitivity, the five transitive
// subgroups up to conjugacy, and the fixed subgroup lattices used by the
// closure analysis. Subgroups are stored as explicit element sets (a
// 120-bit membership mask); at this scale exhaustiveness beats cleverness.

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galois5/perm.hpp"

namespace galois5 {

struct not_transitive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unknown_subgroup_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_a_subgroup_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mask120 {
  uint64_t lo = 0, hi = 0;
  bool test(int i) const {
    return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
  }
  void set(int i) {
    if (i < 64)
      lo |= uint64_t{1} << i;
    else
      hi |= uint64_t{1} << (i - 64);
  }
  int count() const;
  bool operator==(const Mask120&) const = default;
  bool subset_of(const Mask120& o) const {
    return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
  }
  Mask120 operator&(const Mask120& o) const { return {lo & o.lo, hi & o.hi}; }
};

class Subgroup {
public:
  Subgroup();  // trivial group
  static Subgroup closure(std::span<const Perm5> gens);
  static Subgroup closure(std::initializer_list<Perm5> gens);

  int order() const { return order_; }
  bool contains(const Perm5& p) const { return mask_.test(p.index()); }
  bool contains_id(uint8_t idx) const { return mask_.test(idx); }
  const Mask120& mask() const { return mask_; }
  const std::vector<Perm5>& generators() const { return gens_; }
  std::vector<Perm5> elements() const;          // sorted by index
  std::vector<uint8_t> element_ids() const;     // sorted

  bool is_transitive() const;
  bool is_subgroup_of(const Subgroup& g) const { return mask_.subset_of(g.mask_); }
  bool is_normal_in(const Subgroup& g) const;
  Subgroup intersect(const Subgroup& o) const;
  static Subgroup join(const Subgroup& a, const Subgroup& b);

  bool operator==(const Subgroup& o) const { return mask_ == o.mask_; }

private:
  Mask120 mask_;
  int order_ = 1;
  std::vector<Perm5> gens_;
};

enum class GroupTag { C5, D5, AffF5, A5, S5 };

inline constexpr std::array<GroupTag, 5> kAllGroups = {
    GroupTag::C5, GroupTag::D5, GroupTag::AffF5, GroupTag::A5, GroupTag::S5};

std::string_view group_name(GroupTag tag);           // "C5", ..., "AffF5", "S5"
GroupTag group_from_name(std::string_view name);     // throws unknown_subgroup_error
int group_order(GroupTag tag);
const Subgroup& canonical_group(GroupTag tag);
const std::vector<Perm5>& canonical_generators(GroupTag tag);

// conjugacy class of a transitive subgroup, decided by order
// (5, 10, 20, 60, 120 are pairwise distinct)
GroupTag identify_transitive(const Subgroup& h);  // throws not_transitive_error

// cycle types occurring in the group, identity excluded
const std::set<CycleType>& element_types(GroupTag tag);

struct LatticeNode {
  std::string label;                // "Id","C2","C4","C5","S3","D5","D6","A4","S4","A5","AffF5","S5"
  Subgroup subgroup;
  std::vector<std::string> covers;  // labels of immediate overgroups
  bool normal_in_group = false;
};

const std::vector<LatticeNode>& lattice(GroupTag tag);
const LatticeNode& lattice_node(GroupTag tag, std::string_view label);  // throws unknown_subgroup_error
const LatticeNode& point_stabilizer(GroupTag tag);  // node fixing point 1

// conjugacy classes *inside* g (not S5-classes); each class sorted, classes
// ordered by least element
std::vector<std::vector<uint8_t>> conjugacy_classes(const Subgroup& g);

}  // namespace galois5
