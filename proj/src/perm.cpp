#include "galois5/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace galois5 {

namespace {

// the six non-trivial partitions in bookkeeping order n1..n6, then [1^5]
constexpr std::array<std::array<int, 5>, 7> kParts = {{
    {5, 0, 0, 0, 0},
    {2, 2, 1, 0, 0},
    {4, 1, 0, 0, 0},
    {3, 1, 1, 0, 0},
    {3, 2, 0, 0, 0},
    {2, 1, 1, 1, 0},
    {1, 1, 1, 1, 1},
}};

constexpr std::array<int, 7> kOrder = {5, 2, 4, 3, 6, 2, 1};
constexpr std::array<int, 7> kDegree = {4, 2, 3, 2, 3, 1, 0};
constexpr std::array<bool, 7> kOdd = {false, false, true, false, true, true, false};

struct Universe {
  std::array<Perm5, 120> all;  // sorted lexicographically by images
  Universe() {
    std::array<int, 5> base = {1, 2, 3, 4, 5};
    int k = 0;
    do {
      all[k++] = Perm5::from_images(base);
    } while (std::next_permutation(base.begin(), base.end()));
  }
};

const Universe& universe() {
  static const Universe u;
  return u;
}

int slot_of_parts(const std::vector<int>& parts) {
  for (int s = 0; s < 7; ++s) {
    std::vector<int> ref;
    for (int p : kParts[s])
      if (p) ref.push_back(p);
    if (ref == parts) return s;
  }
  return -1;
}

}  // namespace

Perm5 Perm5::from_images(const std::array<int, 5>& images) {
  Perm5 r;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (images[i] < 1 || images[i] > 5 || seen[images[i] - 1])
      throw parse_error("images do not form a bijection of {1,...,5}");
    seen[images[i] - 1] = true;
    r.img_[i] = static_cast<uint8_t>(images[i] - 1);
  }
  return r;
}

uint8_t Perm5::index() const {
  const auto& all = universe().all;
  auto it = std::lower_bound(all.begin(), all.end(), *this);
  return static_cast<uint8_t>(it - all.begin());
}

Perm5 Perm5::from_index(uint8_t idx) { return universe().all[idx]; }

std::span<const Perm5, 120> Perm5::all() { return universe().all; }

CycleType CycleType::of(const Perm5& p) {
  std::vector<int> parts;
  std::array<bool, 5> seen{};
  for (int i = 1; i <= 5; ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    do {
      seen[j - 1] = true;
      ++len;
      j = p(j);
    } while (j != i);
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return CycleType(slot_of_parts(parts));
}

CycleType CycleType::from_parts(std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  int slot = parts.empty() ? -1 : slot_of_parts(parts);
  if (slot < 0) throw parse_error("not a partition of 5");
  return CycleType(slot);
}

CycleType CycleType::from_slot(int slot) {
  if (slot < 0 || slot > 6) throw parse_error("bad type slot");
  return CycleType(slot);
}

std::vector<int> CycleType::parts() const {
  std::vector<int> r;
  for (int p : kParts[slot_])
    if (p) r.push_back(p);
  return r;
}

int CycleType::degree() const { return kDegree[slot_]; }
int CycleType::order() const { return kOrder[slot_]; }
bool CycleType::is_odd() const { return kOdd[slot_]; }

std::string CycleType::str() const {
  std::string s = "[";
  bool first = true;
  for (int p : parts()) {
    if (!first) s += ',';
    first = false;
    s += static_cast<char>('0' + p);
  }
  return s + "]";
}

Perm5 conjugate(const Perm5& p, const Perm5& by) {
  return by.inverse() * p * by;
}

Perm5 commutator(const Perm5& a, const Perm5& b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm5 power(const Perm5& p, int k) {
  Perm5 base = p;
  if (k < 0) {
    base = p.inverse();
    k = -k;
  }
  Perm5 r;
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

bool is_odd(const Perm5& p) { return CycleType::of(p).is_odd(); }

Perm5 parse_perm(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i, 2) == "Id") {
    i += 2;
    skip_ws();
    if (i != text.size()) throw parse_error("trailing input after Id");
    return Perm5::identity();
  }
  std::array<int, 5> images = {1, 2, 3, 4, 5};
  std::array<bool, 5> moved{};
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw parse_error("expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
      if (i >= text.size()) throw parse_error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '1' || text[i] > '5') throw parse_error("points must be 1..5");
      int pt = text[i] - '0';
      ++i;
      if (moved[pt - 1]) throw parse_error("cycles must be disjoint");
      moved[pt - 1] = true;
      cyc.push_back(pt);
    }
    if (cyc.size() < 2) throw parse_error("cycles need at least two points");
    for (size_t k = 0; k < cyc.size(); ++k)
      images[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    any = true;
  }
  if (!any) throw parse_error("empty permutation text");
  return Perm5::from_images(images);
}

std::string to_string(const Perm5& p) {
  if (p.is_identity()) return "Id";
  std::string s;
  std::array<bool, 5> seen{};
  for (int i = 1; i <= 5; ++i) {
    if (seen[i - 1] || p(i) == i) continue;
    s += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) s += ' ';
      first = false;
      s += static_cast<char>('0' + j);
      seen[j - 1] = true;
      j = p(j);
    } while (j != i);
    s += ')';
  }
  return s;
}

const PermTables& PermTables::get() {
  static const PermTables t = [] {
    PermTables t;
    auto all = Perm5::all();
    for (int a = 0; a < 120; ++a) {
      t.inv[a] = all[a].inverse().index();
      t.type_slot[a] = static_cast<uint8_t>(CycleType::of(all[a]).slot());
      t.odd[a] = is_odd(all[a]);
      for (int b = 0; b < 120; ++b) t.mul[a][b] = (all[a] * all[b]).index();
    }
    return t;
  }();
  return t;
}

}  // namespace galois5
