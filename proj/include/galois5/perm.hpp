#pragma once

// Exact arithmetic on permutations of {1,...,5}.
//
// Products are read left to right: (p * q) applies p first, then q, so a
// word written c1 c2 ... cn is folded as ((c1 * c2) * ...) * cn and the
// commutator is [a,b] = a^{-1} * b^{-1} * a * b. Cycle notation uses points
// 1..5, disjoint cycles sorted by smallest moved point, identity printed
// as "Id".

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace galois5 {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Perm5 {
public:
  constexpr Perm5() : img_{0, 1, 2, 3, 4} {}

  // images given 1-based: images[i] = image of point i+1
  static Perm5 from_images(const std::array<int, 5>& images);

  static constexpr Perm5 identity() { return Perm5{}; }

  // 1-based application
  int operator()(int point) const { return img_[point - 1] + 1; }

  // apply *this first, then rhs
  Perm5 operator*(const Perm5& rhs) const {
    Perm5 r;
    for (int i = 0; i < 5; ++i) r.img_[i] = rhs.img_[img_[i]];
    return r;
  }

  Perm5 inverse() const {
    Perm5 r;
    for (int i = 0; i < 5; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  bool is_identity() const { return *this == Perm5{}; }

  auto operator<=>(const Perm5&) const = default;

  // rank in the lexicographic enumeration of all 120 permutations
  uint8_t index() const;
  static Perm5 from_index(uint8_t idx);
  static std::span<const Perm5, 120> all();

  const std::array<uint8_t, 5>& raw() const { return img_; }

private:
  std::array<uint8_t, 5> img_;  // 0-based images
};

// one of the six partitions of 5, parts descending
class CycleType {
public:
  static CycleType of(const Perm5& p);
  static CycleType from_parts(std::vector<int> parts);  // throws parse_error

  std::vector<int> parts() const;
  int degree() const;  // sum of (part - 1)
  int order() const;   // lcm of parts
  bool is_odd() const;
  std::string str() const;  // e.g. "[2,2,1]"

  // position in the fixed bookkeeping order
  // [5], [2,2,1], [4,1], [3,1,1], [3,2], [2,1,1,1], and 6 for [1^5]
  int slot() const { return slot_; }
  static CycleType from_slot(int slot);
  bool is_trivial() const { return slot_ == 6; }

  auto operator<=>(const CycleType&) const = default;

private:
  explicit CycleType(int slot) : slot_(slot) {}
  int slot_;
};

inline constexpr int kTypeSlots = 6;

Perm5 conjugate(const Perm5& p, const Perm5& by);   // by^{-1} * p * by
Perm5 commutator(const Perm5& a, const Perm5& b);   // a^{-1} b^{-1} a b
Perm5 power(const Perm5& p, int k);
bool is_odd(const Perm5& p);

Perm5 parse_perm(std::string_view text);  // "Id" or disjoint cycles
std::string to_string(const Perm5& p);

// index-based lookup tables for enumeration-heavy code
struct PermTables {
  std::array<std::array<uint8_t, 120>, 120> mul;  // mul[a][b] = index of a*b
  std::array<uint8_t, 120> inv;
  std::array<uint8_t, 120> type_slot;
  std::array<bool, 120> odd;
  static const PermTables& get();
};

}  // namespace galois5
