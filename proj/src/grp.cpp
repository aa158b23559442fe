#include "galois5/grp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace galois5 {

int Mask120::count() const { return std::popcount(lo) + std::popcount(hi); }

Subgroup::Subgroup() {
  mask_.set(Perm5::identity().index());
  order_ = 1;
}

Subgroup Subgroup::closure(std::span<const Perm5> gens) {
  const auto& T = PermTables::get();
  Subgroup g;
  g.gens_.assign(gens.begin(), gens.end());
  std::vector<uint8_t> queue = {Perm5::identity().index()};
  g.mask_ = Mask120{};
  g.mask_.set(queue[0]);
  std::vector<uint8_t> gen_ids;
  for (const auto& p : gens) gen_ids.push_back(p.index());
  for (uint8_t id : gen_ids) {
    if (!g.mask_.test(id)) {
      g.mask_.set(id);
      queue.push_back(id);
    }
  }
  while (!queue.empty()) {
    uint8_t x = queue.back();
    queue.pop_back();
    for (uint8_t id : gen_ids) {
      uint8_t y = T.mul[x][id];
      if (!g.mask_.test(y)) {
        g.mask_.set(y);
        queue.push_back(y);
      }
    }
  }
  g.order_ = g.mask_.count();
  return g;
}

Subgroup Subgroup::closure(std::initializer_list<Perm5> gens) {
  return closure(std::span<const Perm5>(gens.begin(), gens.size()));
}

std::vector<Perm5> Subgroup::elements() const {
  std::vector<Perm5> r;
  r.reserve(order_);
  for (int i = 0; i < 120; ++i)
    if (mask_.test(i)) r.push_back(Perm5::from_index(static_cast<uint8_t>(i)));
  return r;
}

std::vector<uint8_t> Subgroup::element_ids() const {
  std::vector<uint8_t> r;
  r.reserve(order_);
  for (int i = 0; i < 120; ++i)
    if (mask_.test(i)) r.push_back(static_cast<uint8_t>(i));
  return r;
}

bool Subgroup::is_transitive() const {
  std::array<bool, 5> orbit{};
  orbit[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int pt = 1; pt <= 5; ++pt) {
      if (!orbit[pt - 1]) continue;
      for (const auto& p : elements()) {
        int q = p(pt);
        if (!orbit[q - 1]) {
          orbit[q - 1] = true;
          grew = true;
        }
      }
    }
  }
  return orbit[0] && orbit[1] && orbit[2] && orbit[3] && orbit[4];
}

bool Subgroup::is_normal_in(const Subgroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const auto& x : g.elements())
    for (const auto& h : elements())
      if (!contains(conjugate(h, x))) return false;
  return true;
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
  Subgroup r;
  r.mask_ = mask_ & o.mask_;
  r.order_ = r.mask_.count();
  r.gens_.clear();
  for (int i = 0; i < 120; ++i)
    if (r.mask_.test(i)) r.gens_.push_back(Perm5::from_index(static_cast<uint8_t>(i)));
  return r;
}

Subgroup Subgroup::join(const Subgroup& a, const Subgroup& b) {
  std::vector<Perm5> gens = a.elements();
  auto be = b.elements();
  gens.insert(gens.end(), be.begin(), be.end());
  return closure(gens);
}

namespace {

Perm5 P(std::string_view s) { return parse_perm(s); }

struct CanonicalGroups {
  std::array<std::vector<Perm5>, 5> gens;
  std::array<Subgroup, 5> groups;
  CanonicalGroups() {
    gens[0] = {P("(1 2 3 4 5)")};
    gens[1] = {P("(1 2 3 4 5)"), P("(2 5)(3 4)")};
    gens[2] = {P("(1 2 3 4 5)"), P("(2 3 5 4)")};
    gens[3] = {P("(1 2 3 4 5)"), P("(1 3 4 5 2)")};
    gens[4] = {P("(1 2 3 4 5)"), P("(1 2)")};
    constexpr std::array<int, 5> expected = {5, 10, 20, 60, 120};
    for (int i = 0; i < 5; ++i) {
      groups[i] = Subgroup::closure(gens[i]);
      if (groups[i].order() != expected[i])
        throw std::logic_error("canonical transitive subgroup has wrong order");
    }
  }
};

const CanonicalGroups& canon() {
  static const CanonicalGroups c;
  return c;
}

int tag_idx(GroupTag t) { return static_cast<int>(t); }

struct LatticeSet {
  std::array<std::vector<LatticeNode>, 5> lat;

  static LatticeNode node(std::string label, std::vector<Perm5> gens,
                          std::vector<std::string> covers) {
    LatticeNode n;
    n.label = std::move(label);
    n.subgroup = gens.empty() ? Subgroup() : Subgroup::closure(gens);
    n.covers = std::move(covers);
    return n;
  }

  LatticeSet() {
    const Perm5 r = P("(1 2 3 4 5)");

    lat[tag_idx(GroupTag::C5)] = {
        node("Id", {}, {"C5"}),
        node("C5", {r}, {}),
    };
    lat[tag_idx(GroupTag::D5)] = {
        node("Id", {}, {"C2", "C5"}),
        node("C2", {P("(2 5)(3 4)")}, {"D5"}),
        node("C5", {r}, {"D5"}),
        node("D5", {r, P("(2 5)(3 4)")}, {}),
    };
    lat[tag_idx(GroupTag::AffF5)] = {
        node("Id", {}, {"C4", "C5"}),
        node("C4", {P("(2 3 5 4)")}, {"AffF5"}),
        node("C5", {r}, {"D5"}),
        node("D5", {r, P("(2 5)(3 4)")}, {"AffF5"}),
        node("AffF5", {r, P("(2 3 5 4)")}, {}),
    };
    lat[tag_idx(GroupTag::A5)] = {
        node("Id", {}, {"C5", "A4"}),
        node("C5", {r}, {"D5"}),
        node("D5", {r, P("(2 5)(3 4)")}, {"A5"}),
        node("A4", {P("(2 3 4)"), P("(3 4 5)")}, {"A5"}),
        node("A5", {r, P("(1 3 4 5 2)")}, {}),
    };
    lat[tag_idx(GroupTag::S5)] = {
        node("Id", {}, {"S3", "A4", "D5"}),
        node("S3", {P("(3 4 5)"), P("(3 4)")}, {"D6", "S4"}),
        node("A4", {P("(2 3 4)"), P("(3 4 5)")}, {"S4", "A5"}),
        node("D5", {r, P("(2 5)(3 4)")}, {"A5", "AffF5"}),
        node("D6", {P("(1 2)"), P("(3 4)"), P("(3 4 5)")}, {"S5"}),
        node("S4", {P("(2 3 4 5)"), P("(2 3)")}, {"S5"}),
        node("A5", {r, P("(1 3 4 5 2)")}, {"S5"}),
        node("AffF5", {r, P("(2 3 5 4)")}, {"S5"}),
        node("S5", {r, P("(1 2)")}, {}),
    };

    for (int t = 0; t < 5; ++t) {
      const Subgroup& g = canon().groups[t];
      for (auto& n : lat[t]) {
        if (!n.subgroup.is_subgroup_of(g))
          throw std::logic_error("lattice node not contained in its group");
        n.normal_in_group = n.subgroup.is_normal_in(g);
        for (const auto& up : n.covers) {
          const LatticeNode* upn = nullptr;
          for (const auto& m : lat[t])
            if (m.label == up) upn = &m;
          if (!upn || !n.subgroup.is_subgroup_of(upn->subgroup) ||
              n.subgroup.order() >= upn->subgroup.order())
            throw std::logic_error("lattice containment check failed");
          // immediate cover: no lattice node strictly between
          for (const auto& m : lat[t]) {
            if (m.label == n.label || m.label == up) continue;
            if (n.subgroup.is_subgroup_of(m.subgroup) &&
                m.subgroup.is_subgroup_of(upn->subgroup) &&
                m.subgroup.order() > n.subgroup.order() &&
                m.subgroup.order() < upn->subgroup.order())
              throw std::logic_error("cover edge is not immediate");
          }
        }
      }
      // the full group must be the unique maximal node
      const LatticeNode* top = nullptr;
      for (const auto& n : lat[t])
        if (n.covers.empty()) {
          if (top) throw std::logic_error("lattice has two maximal nodes");
          top = &n;
        }
      if (!top || !(top->subgroup == g))
        throw std::logic_error("lattice top is not the group itself");
    }
  }
};

const LatticeSet& lattices() {
  static const LatticeSet l;
  return l;
}

}  // namespace

std::string_view group_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::C5: return "C5";
    case GroupTag::D5: return "D5";
    case GroupTag::AffF5: return "AffF5";
    case GroupTag::A5: return "A5";
    case GroupTag::S5: return "S5";
  }
  throw std::logic_error("bad tag");
}

GroupTag group_from_name(std::string_view name) {
  for (GroupTag t : kAllGroups)
    if (group_name(t) == name) return t;
  throw unknown_subgroup_error("unknown group name: " + std::string(name));
}

int group_order(GroupTag tag) { return canon().groups[tag_idx(tag)].order(); }

const Subgroup& canonical_group(GroupTag tag) { return canon().groups[tag_idx(tag)]; }

const std::vector<Perm5>& canonical_generators(GroupTag tag) {
  return canon().gens[tag_idx(tag)];
}

GroupTag identify_transitive(const Subgroup& h) {
  if (!h.is_transitive()) throw not_transitive_error("subgroup is not transitive");
  switch (h.order()) {
    case 5: return GroupTag::C5;
    case 10: return GroupTag::D5;
    case 20: return GroupTag::AffF5;
    case 60: return GroupTag::A5;
    case 120: return GroupTag::S5;
    default:
      throw not_transitive_error("transitive subgroup of unexpected order");
  }
}

const std::set<CycleType>& element_types(GroupTag tag) {
  static const std::array<std::set<CycleType>, 5> sets = [] {
    std::array<std::set<CycleType>, 5> r;
    for (int t = 0; t < 5; ++t)
      for (const auto& p : canon().groups[t].elements())
        if (!p.is_identity()) r[t].insert(CycleType::of(p));
    return r;
  }();
  return sets[tag_idx(tag)];
}

const std::vector<LatticeNode>& lattice(GroupTag tag) {
  return lattices().lat[tag_idx(tag)];
}

const LatticeNode& lattice_node(GroupTag tag, std::string_view label) {
  for (const auto& n : lattice(tag))
    if (n.label == label) return n;
  throw unknown_subgroup_error("no lattice node " + std::string(label) + " in " +
                               std::string(group_name(tag)));
}

const LatticeNode& point_stabilizer(GroupTag tag) {
  const auto& g = canonical_group(tag);
  const LatticeNode* best = nullptr;
  for (const auto& n : lattice(tag)) {
    bool fixes = true;
    for (const auto& p : n.subgroup.elements())
      if (p(1) != 1) fixes = false;
    if (!fixes) continue;
    if (!best || n.subgroup.order() > best->subgroup.order()) best = &n;
  }
  // the stabilizer has order |G|/5 by transitivity; the lattice must hold it
  if (!best || best->subgroup.order() * 5 != g.order())
    throw std::logic_error("point stabilizer missing from lattice");
  return *best;
}

std::vector<std::vector<uint8_t>> conjugacy_classes(const Subgroup& g) {
  const auto ids = g.element_ids();
  std::vector<std::vector<uint8_t>> classes;
  std::array<bool, 120> seen{};
  for (uint8_t x : ids) {
    if (seen[x]) continue;
    std::vector<uint8_t> cls;
    for (uint8_t y : ids) {
      Perm5 c = conjugate(Perm5::from_index(x), Perm5::from_index(y));
      uint8_t ci = c.index();
      if (!seen[ci]) {
        seen[ci] = true;
        cls.push_back(ci);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace galois5
