#include "galois5/cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace galois5 {

namespace {

// right cosets Hx of h in g, labeled by their least element id
struct CosetSpace {
  std::array<uint8_t, 120> label_of_elem;  // 255 = outside g
  std::vector<uint8_t> cosets;             // distinct labels, ascending

  CosetSpace(const Subgroup& g, const Subgroup& h) {
    const auto& T = PermTables::get();
    label_of_elem.fill(255);
    for (uint8_t x : g.element_ids()) {
      if (label_of_elem[x] != 255) continue;
      uint8_t least = 255;
      std::vector<uint8_t> members;
      for (uint8_t hh : h.element_ids()) {
        uint8_t y = T.mul[hh][x];
        members.push_back(y);
        least = std::min(least, y);
      }
      for (uint8_t y : members) label_of_elem[y] = least;
      cosets.push_back(least);
    }
    std::sort(cosets.begin(), cosets.end());
  }

  int index_of(uint8_t label) const {
    return static_cast<int>(std::lower_bound(cosets.begin(), cosets.end(), label) -
                            cosets.begin());
  }

  // right translation by c as a permutation of coset indices
  std::vector<int> action(const Perm5& c) const {
    const auto& T = PermTables::get();
    std::vector<int> img(cosets.size());
    for (size_t i = 0; i < cosets.size(); ++i)
      img[i] = index_of(label_of_elem[T.mul[cosets[i]][c.index()]]);
    return img;
  }
};

std::vector<int> orbit_ids(const std::vector<int>& img) {
  std::vector<int> id(img.size(), -1);
  int next = 0;
  for (size_t i = 0; i < img.size(); ++i) {
    if (id[i] >= 0) continue;
    size_t j = i;
    do {
      id[j] = next;
      j = static_cast<size_t>(img[j]);
    } while (j != i);
    ++next;
  }
  return id;
}

std::vector<int> orbit_lengths(const std::vector<int>& img) {
  auto ids = orbit_ids(img);
  std::vector<int> lens(*std::max_element(ids.begin(), ids.end()) + 1, 0);
  for (int id : ids) ++lens[static_cast<size_t>(id)];
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

Rational closure_genus_rational(const GeometricSignature& sig, int group_order) {
  Rational acc = 0;
  for (const auto& b : sig.branches) {
    if (b.order < 2) throw inconsistent_signature_error("branch period below 2");
    if (group_order % b.order != 0)
      throw inconsistent_signature_error(
          "branch period does not divide the group order");
    acc = acc + Rational(group_order) * (Rational(1) - Rational(1, b.order));
  }
  return Rational(1) + Rational(group_order) * Rational(sig.base_genus - 1) +
         acc * Rational(1, 2);
}

AffineForm AF(Rational c, Rational g, Rational k1, Rational k2, Rational k3,
              Rational k4, Rational k5, Rational k6) {
  return AffineForm::make(c, g, {k1, k2, k3, k4, k5, k6});
}

struct TableData {
  std::map<std::pair<GroupTag, std::string>, CoverForms> rows;
  std::map<GroupTag, std::vector<BetweenEq>> between;

  void row(GroupTag t, const char* label, AffineForm genus,
           AffineForm from_closure, AffineForm to_base) {
    rows[{t, label}] = CoverForms{genus, from_closure, to_base};
  }

  TableData() {
    using G = GroupTag;
    const Rational h(1, 2);

    row(G::C5, "Id", AF(-4, 5, 2, 0, 0, 0, 0, 0), AF(0, 0, 0, 0, 0, 0, 0, 0),
        AF(0, 0, 4, 0, 0, 0, 0, 0));
    row(G::C5, "C5", AF(0, 1, 0, 0, 0, 0, 0, 0), AF(0, 0, 4, 0, 0, 0, 0, 0),
        AF(0, 0, 0, 0, 0, 0, 0, 0));

    row(G::D5, "Id", AF(-9, 10, 4, Rational(5, 2), 0, 0, 0, 0),
        AF(0, 0, 0, 0, 0, 0, 0, 0), AF(0, 0, 8, 5, 0, 0, 0, 0));
    row(G::D5, "C2", AF(-4, 5, 2, 1, 0, 0, 0, 0), AF(0, 0, 0, 1, 0, 0, 0, 0),
        AF(0, 0, 4, 2, 0, 0, 0, 0));
    row(G::D5, "C5", AF(-1, 2, 0, h, 0, 0, 0, 0), AF(0, 0, 8, 0, 0, 0, 0, 0),
        AF(0, 0, 0, 1, 0, 0, 0, 0));
    row(G::D5, "D5", AF(0, 1, 0, 0, 0, 0, 0, 0), AF(0, 0, 8, 5, 0, 0, 0, 0),
        AF(0, 0, 0, 0, 0, 0, 0, 0));

    row(G::AffF5, "Id", AF(-19, 20, 8, 5, Rational(15, 2), 0, 0, 0),
        AF(0, 0, 0, 0, 0, 0, 0, 0), AF(0, 0, 16, 10, 15, 0, 0, 0));
    row(G::AffF5, "C4", AF(-4, 5, 2, 1, Rational(3, 2), 0, 0, 0),
        AF(0, 0, 0, 2, 3, 0, 0, 0), AF(0, 0, 4, 2, 3, 0, 0, 0));
    row(G::AffF5, "C5", AF(-3, 4, 0, 1, Rational(3, 2), 0, 0, 0),
        AF(0, 0, 16, 0, 0, 0, 0, 0), AF(0, 0, 0, 2, 3, 0, 0, 0));
    row(G::AffF5, "D5", AF(-1, 2, 0, 0, h, 0, 0, 0),
        AF(0, 0, 16, 10, 5, 0, 0, 0), AF(0, 0, 0, 0, 1, 0, 0, 0));
    row(G::AffF5, "AffF5", AF(0, 1, 0, 0, 0, 0, 0, 0),
        AF(0, 0, 16, 10, 15, 0, 0, 0), AF(0, 0, 0, 0, 0, 0, 0, 0));
    between[G::AffF5].push_back({"C5", "D5", AF(0, 0, 0, 2, 1, 0, 0, 0)});

    row(G::A5, "Id", AF(-59, 60, 24, 15, 0, 20, 0, 0),
        AF(0, 0, 0, 0, 0, 0, 0, 0), AF(0, 0, 48, 30, 0, 40, 0, 0));
    row(G::A5, "C5", AF(-11, 12, 4, 3, 0, 4, 0, 0), AF(0, 0, 8, 0, 0, 0, 0, 0),
        AF(0, 0, 8, 6, 0, 8, 0, 0));
    row(G::A5, "D5", AF(-5, 6, 2, 1, 0, 2, 0, 0), AF(0, 0, 8, 10, 0, 0, 0, 0),
        AF(0, 0, 4, 2, 0, 4, 0, 0));
    row(G::A5, "A4", AF(-4, 5, 2, 1, 0, 1, 0, 0), AF(0, 0, 0, 6, 0, 16, 0, 0),
        AF(0, 0, 4, 2, 0, 2, 0, 0));
    row(G::A5, "A5", AF(0, 1, 0, 0, 0, 0, 0, 0), AF(0, 0, 48, 30, 0, 40, 0, 0),
        AF(0, 0, 0, 0, 0, 0, 0, 0));
    between[G::A5].push_back({"C5", "D5", AF(0, 0, 0, 2, 0, 0, 0, 0)});

    row(G::S5, "Id", AF(-119, 120, 48, 30, 45, 40, 50, 30),
        AF(0, 0, 0, 0, 0, 0, 0, 0), AF(0, 0, 96, 60, 90, 80, 100, 60));
    row(G::S5, "S3",
        AF(-19, 20, 8, 5, Rational(15, 2), 6, Rational(15, 2), Rational(7, 2)),
        AF(0, 0, 0, 0, 0, 8, 10, 18), AF(0, 0, 16, 10, 15, 12, 15, 7));
    row(G::S5, "D5", AF(-11, 12, 4, 2, 4, 4, 5, 3),
        AF(0, 0, 16, 20, 10, 0, 0, 0), AF(0, 0, 8, 4, 8, 8, 10, 6));
    row(G::S5, "A4",
        AF(-9, 10, 4, 2, Rational(7, 2), 2, Rational(7, 2), Rational(5, 2)),
        AF(0, 0, 0, 12, 6, 32, 16, 0), AF(0, 0, 8, 4, 7, 4, 7, 5));
    row(G::S5, "D6",
        AF(-9, 10, 4, 2, Rational(7, 2), 3, Rational(7, 2), Rational(3, 2)),
        AF(0, 0, 0, 12, 6, 8, 16, 24), AF(0, 0, 8, 4, 7, 6, 7, 3));
    row(G::S5, "AffF5",
        AF(-5, 6, 2, 1, Rational(3, 2), 2, Rational(5, 2), Rational(3, 2)),
        AF(0, 0, 16, 20, 30, 0, 0, 0), AF(0, 0, 4, 2, 3, 4, 5, 3));
    row(G::S5, "S4",
        AF(-4, 5, 2, 1, Rational(3, 2), 1, Rational(3, 2), h),
        AF(0, 0, 0, 12, 18, 32, 28, 36), AF(0, 0, 4, 2, 3, 2, 3, 1));
    row(G::S5, "A5", AF(-1, 2, 0, 0, h, 0, h, h),
        AF(0, 0, 96, 60, 30, 80, 40, 0), AF(0, 0, 0, 0, 1, 0, 1, 1));
    row(G::S5, "S5", AF(0, 1, 0, 0, 0, 0, 0, 0),
        AF(0, 0, 96, 60, 90, 80, 100, 60), AF(0, 0, 0, 0, 0, 0, 0, 0));
    between[G::S5].push_back({"S3", "D6", AF(0, 0, 0, 2, 1, 0, 1, 1)});
    between[G::S5].push_back({"A4", "S4", AF(0, 0, 0, 0, 1, 0, 1, 3)});
    between[G::S5].push_back({"D5", "A5", AF(0, 0, 8, 4, 2, 8, 4, 0)});
  }
};

const TableData& tables() {
  static const TableData t;
  return t;
}

// orbit count of a type representative on the cosets of h, checked equal
// for every group element of that type
int orbits_of_type(const Subgroup& g, const CosetSpace& cs, int slot) {
  std::optional<int> count;
  for (uint8_t e : g.element_ids()) {
    if (PermTables::get().type_slot[e] != slot) continue;
    int c = static_cast<int>(orbit_lengths(cs.action(Perm5::from_index(e))).size());
    if (count && *count != c)
      throw std::logic_error("orbit count depends on the class representative");
    count = c;
  }
  return count.value_or(-1);  // -1: type absent from g
}

std::optional<Perm5> type_rep_in(const Subgroup& g, int slot) {
  for (uint8_t e : g.element_ids())
    if (PermTables::get().type_slot[e] == slot) return Perm5::from_index(e);
  return std::nullopt;
}

}  // namespace

GeometricSignature geometric_signature(const GeneratingVector& v, const RamData& d) {
  auto rep = validate(v, d);
  if (!rep.valid())
    throw std::invalid_argument("generating vector does not validate for the data");
  GeometricSignature sig;
  sig.base_genus = d.base_genus;
  for (const auto& c : v.cs) sig.branches.push_back({CycleType::of(c).order(), c});
  return sig;
}

long closure_genus(const GeometricSignature& sig, int group_order) {
  Rational g = closure_genus_rational(sig, group_order);
  if (!g.is_integer())
    throw inconsistent_signature_error("closure genus " + g.str() +
                                       " is not an integer");
  if (g.num < 0)
    throw inconsistent_signature_error("closure genus " + g.str() + " is negative");
  return g.as_integer();
}

IntermediateCovering intermediate(const GeometricSignature& sig, const Subgroup& G,
                                  const Subgroup& H) {
  if (!H.is_subgroup_of(G)) throw not_a_subgroup_error("H is not a subgroup of G");
  for (const auto& b : sig.branches)
    if (!G.contains(b.rep))
      throw not_a_subgroup_error("branch representative lies outside the group");

  CosetSpace cs(G, H);
  const int deg = G.order() / H.order();

  IntermediateCovering out;
  out.degree_over_base = deg;
  long to_base = 0, from_closure = 0;
  for (const auto& b : sig.branches) {
    auto lens = orbit_lengths(cs.action(b.rep));
    to_base += deg - static_cast<long>(lens.size());
    from_closure += static_cast<long>(H.order()) * static_cast<long>(lens.size()) -
                    G.order() / b.order;
    out.ram_profile.push_back(std::move(lens));
  }
  out.deg_ram_to_base = to_base;
  out.deg_ram_from_closure = from_closure;

  long two_g_minus_2 = deg * (2L * sig.base_genus - 2) + to_base;
  if (two_g_minus_2 % 2 != 0)
    throw inconsistent_signature_error("quotient genus is not integral");
  out.genus = two_g_minus_2 / 2 + 1;

  // multiplicativity along closure -> quotient -> base
  Rational chain = Rational(2) * closure_genus_rational(sig, G.order()) -
                   Rational(2) - Rational(H.order()) * Rational(2 * out.genus - 2) -
                   Rational(from_closure);
  if (!chain.is_zero()) throw std::logic_error("ramification chain rule violated");
  return out;
}

BetweenCovering intermediate_between(const GeometricSignature& sig,
                                     const Subgroup& G, const Subgroup& H,
                                     const Subgroup& N) {
  if (!H.is_subgroup_of(N) || !N.is_subgroup_of(G))
    throw not_a_subgroup_error("need H <= N <= G");
  CosetSpace hs(G, H), ns(G, N);
  BetweenCovering out;
  out.degree = N.order() / H.order();
  long total = 0;
  for (const auto& b : sig.branches) {
    auto himg = hs.action(b.rep);
    auto nimg = ns.action(b.rep);
    auto hid = orbit_ids(himg);
    auto nid = orbit_ids(nimg);
    std::vector<int> hlen(*std::max_element(hid.begin(), hid.end()) + 1, 0);
    for (int id : hid) ++hlen[static_cast<size_t>(id)];
    std::vector<int> nlen(*std::max_element(nid.begin(), nid.end()) + 1, 0);
    for (int id : nid) ++nlen[static_cast<size_t>(id)];
    std::vector<bool> seen(hlen.size(), false);
    for (size_t i = 0; i < hs.cosets.size(); ++i) {
      int oid = hid[i];
      if (seen[static_cast<size_t>(oid)]) continue;
      seen[static_cast<size_t>(oid)] = true;
      int nidx = ns.index_of(ns.label_of_elem[hs.cosets[i]]);
      int below = nlen[static_cast<size_t>(nid[static_cast<size_t>(nidx)])];
      int ratio = hlen[static_cast<size_t>(oid)] / below;
      if (ratio * below != hlen[static_cast<size_t>(oid)])
        throw std::logic_error("orbit length not divisible by image orbit length");
      total += ratio - 1;
    }
  }
  out.deg_ram = total;
  return out;
}

CoverForms orbit_forms(GroupTag tag, const Subgroup& h) {
  const Subgroup& g = canonical_group(tag);
  if (!h.is_subgroup_of(g)) throw not_a_subgroup_error("H is not a subgroup of G");
  CosetSpace cs(g, h);
  const int deg = g.order() / h.order();

  CoverForms f;
  f.genus = AffineForm::constant(1 - deg) + AffineForm::genus(deg);
  for (int slot = 0; slot < kTypeSlots; ++slot) {
    int orbits = orbits_of_type(g, cs, slot);
    if (orbits < 0) continue;  // type absent from the group
    int m = CycleType::from_slot(slot).order();
    f.deg_ram_to_base = f.deg_ram_to_base + AffineForm::count(slot, deg - orbits);
    f.deg_ram_from_closure =
        f.deg_ram_from_closure +
        AffineForm::count(slot, h.order() * orbits - g.order() / m);
  }
  f.genus = f.genus + f.deg_ram_to_base * Rational(1, 2);
  return f;
}

CoverForms orbit_forms(GroupTag tag, std::string_view label) {
  return orbit_forms(tag, lattice_node(tag, label).subgroup);
}

AffineForm between_orbit_form(GroupTag tag, std::string_view h_label,
                              std::string_view n_label) {
  const Subgroup& g = canonical_group(tag);
  const Subgroup& h = lattice_node(tag, h_label).subgroup;
  const Subgroup& n = lattice_node(tag, n_label).subgroup;
  if (!h.is_subgroup_of(n)) throw not_a_subgroup_error("need H <= N");
  AffineForm out;
  for (int slot = 0; slot < kTypeSlots; ++slot) {
    auto rep = type_rep_in(g, slot);
    if (!rep) continue;
    GeometricSignature sig;
    sig.base_genus = 0;
    sig.branches.push_back({CycleType::from_slot(slot).order(), *rep});
    out = out + AffineForm::count(slot, intermediate_between(sig, g, h, n).deg_ram);
  }
  return out;
}

const CoverForms& table_forms(GroupTag tag, std::string_view label) {
  auto it = tables().rows.find({tag, std::string(label)});
  if (it == tables().rows.end())
    throw unknown_subgroup_error("no tabulated forms for " + std::string(label));
  return it->second;
}

const std::vector<BetweenEq>& between_table(GroupTag tag) {
  static const std::vector<BetweenEq> empty;
  auto it = tables().between.find(tag);
  return it == tables().between.end() ? empty : it->second;
}

bool counts_admissible(GroupTag tag, const TypeCounts& c) {
  const auto& avail = element_types(tag);
  for (int slot = 0; slot < kTypeSlots; ++slot)
    if (c[slot] > 0 && !avail.count(CycleType::from_slot(slot))) return false;
  switch (tag) {
    case GroupTag::D5: return c[1] % 2 == 0;
    case GroupTag::AffF5: return c[2] % 2 == 0;
    case GroupTag::S5: return (c[2] + c[4] + c[5]) % 2 == 0;
    default: return true;
  }
}

AffineForm closure_genus_form(GroupTag tag) {
  return orbit_forms(tag, Subgroup()).genus;
}

GeometricSignature signature_from_counts(GroupTag tag, const TypeCounts& c,
                                         int base_genus) {
  if (!counts_admissible(tag, c))
    throw not_a_subgroup_error("branch counts not admissible for " +
                               std::string(group_name(tag)));
  const Subgroup& g = canonical_group(tag);
  GeometricSignature sig;
  sig.base_genus = base_genus;
  for (int slot = 0; slot < kTypeSlots; ++slot) {
    if (c[slot] == 0) continue;
    auto rep = type_rep_in(g, slot);
    for (int k = 0; k < c[slot]; ++k)
      sig.branches.push_back({CycleType::from_slot(slot).order(), *rep});
  }
  return sig;
}

}  // namespace galois5
