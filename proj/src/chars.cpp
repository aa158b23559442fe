#include "galois5/chars.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace galois5 {

namespace {

Perm5 P(const char* s) { return parse_perm(s); }

RationalCharRow row(const char* label, int degree, std::vector<long> values,
                    long norm, int constituent) {
  return {label, degree, std::move(values), norm, 1, constituent};
}

RationalCharacterTable build_table(GroupTag tag) {
  RationalCharacterTable t;
  t.group = tag;
  switch (tag) {
    case GroupTag::C5:
      t.classes = {{Perm5::identity(), 1}, {P("(1 2 3 4 5)"), 4}};
      t.rows = {row("U", 1, {1, 1}, 1, 1), row("V", 4, {4, -1}, 4, 1)};
      break;
    case GroupTag::D5:
      t.classes = {{Perm5::identity(), 1}, {P("(2 5)(3 4)"), 5},
                   {P("(1 2 3 4 5)"), 4}};
      t.rows = {row("U", 1, {1, 1, 1}, 1, 1), row("W", 1, {1, -1, 1}, 1, 1),
                row("V", 4, {4, 0, -1}, 2, 2)};
      break;
    case GroupTag::AffF5:
      t.classes = {{Perm5::identity(), 1},
                   {P("(1 2 3 4 5)"), 4},
                   {P("(2 3 5 4)"), 10},
                   {P("(1 4)(2 3)"), 5}};
      t.rows = {row("U", 1, {1, 1, 1, 1}, 1, 1),
                row("Ut", 1, {1, 1, -1, 1}, 1, 1),
                row("WW*", 2, {2, 2, 0, -2}, 2, 1),
                row("V", 4, {4, -1, 0, 0}, 1, 4)};
      break;
    case GroupTag::A5:
      t.classes = {{Perm5::identity(), 1},
                   {P("(1 2 3)"), 20},
                   {P("(1 2)(3 4)"), 15},
                   {P("(1 2 3 4 5)"), 24}};
      t.rows = {row("U", 1, {1, 1, 1, 1}, 1, 1),
                row("V", 4, {4, 1, 0, -1}, 1, 4),
                row("W", 5, {5, -1, 1, 0}, 1, 5),
                row("L2V", 6, {6, 0, -2, 1}, 2, 3)};
      break;
    case GroupTag::S5:
      t.classes = {{Perm5::identity(), 1}, {P("(1 2)"), 10},
                   {P("(1 2 3)"), 20},     {P("(1 2 3 4)"), 30},
                   {P("(1 2 3 4 5)"), 24}, {P("(1 2)(3 4)"), 15},
                   {P("(1 2)(3 4 5)"), 20}};
      t.rows = {row("U", 1, {1, 1, 1, 1, 1, 1, 1}, 1, 1),
                row("Ut", 1, {1, -1, 1, -1, 1, 1, -1}, 1, 1),
                row("V", 4, {4, 2, 1, 0, -1, 0, -1}, 1, 4),
                row("Vt", 4, {4, -2, 1, 0, -1, 0, 1}, 1, 4),
                row("L2V", 6, {6, 0, 0, 0, 1, -2, 0}, 1, 6),
                row("W", 5, {5, 1, -1, -1, 0, 1, 1}, 1, 5),
                row("Wt", 5, {5, -1, -1, 1, 0, 1, -1}, 1, 5)};
      break;
  }
  return t;
}

Rational inner(const RationalCharacterTable& t, const CharacterVector& a,
               const CharacterVector& b) {
  Rational acc = 0;
  for (size_t i = 0; i < t.classes.size(); ++i)
    acc = acc + Rational(t.classes[i].size) * Rational(a[i]) * Rational(b[i]);
  return acc * Rational(1, group_order(t.group));
}

void verify_table(const RationalCharacterTable& t) {
  const Subgroup& g = canonical_group(t.group);
  int size_sum = 0;
  for (const auto& cls : t.classes) {
    if (!g.contains(cls.rep))
      throw std::logic_error("class representative outside the group");
    int count = 0;
    for (const auto& p : g.elements())
      if (CycleType::of(p) == CycleType::of(cls.rep)) ++count;
    if (count != cls.size) throw std::logic_error("rational class size is wrong");
    size_sum += cls.size;
  }
  if (size_sum != g.order()) throw std::logic_error("class equation fails");

  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& ri = t.rows[i];
    if (ri.values.size() != t.classes.size())
      throw std::logic_error("row width mismatch");
    if (ri.values[0] != ri.degree) throw std::logic_error("degree mismatch");
    if (ri.schur_index != 1) throw std::logic_error("unexpected Schur index");
    for (size_t j = 0; j < t.rows.size(); ++j) {
      Rational ip = inner(t, ri.values, t.rows[j].values);
      Rational expect = (i == j) ? Rational(ri.norm) : Rational(0);
      if (!(ip == expect)) throw std::logic_error("row orthogonality fails");
    }
  }
  // regular character: sum of l * chi over the rows vanishes off the identity
  for (size_t c = 0; c < t.classes.size(); ++c) {
    long acc = 0;
    for (const auto& r : t.rows)
      acc += static_cast<long>(r.constituent_degree / r.schur_index) * r.values[c];
    long expect = (c == 0) ? g.order() : 0;
    if (acc != expect) throw std::logic_error("regular character check fails");
  }
}

struct Tables {
  std::array<RationalCharacterTable, 5> t;
  Tables() {
    for (int i = 0; i < 5; ++i) {
      t[i] = build_table(static_cast<GroupTag>(i));
      verify_table(t[i]);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

int RationalCharacterTable::class_index_of(const Perm5& p) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (CycleType::of(classes[i].rep) == CycleType::of(p))
      return static_cast<int>(i);
  throw not_decomposable_error("element type has no rational class here");
}

const RationalCharacterTable& character_table(GroupTag tag) {
  return tables().t[static_cast<int>(tag)];
}

CharacterVector induced_trivial(GroupTag tag, const Subgroup& h) {
  const Subgroup& g = canonical_group(tag);
  if (!h.is_subgroup_of(g))
    throw unknown_subgroup_error("subgroup does not sit inside the group");
  const auto& t = character_table(tag);
  CharacterVector chi;
  for (const auto& cls : t.classes) {
    // fixed cosets of x: #{ y in G : y x y^{-1} in H } / |H|
    int count = 0;
    for (const auto& y : g.elements())
      if (h.contains(conjugate(cls.rep, y.inverse()))) ++count;
    if (count % h.order() != 0)
      throw std::logic_error("fixed-coset count is not divisible by |H|");
    chi.push_back(count / h.order());
  }
  return chi;
}

CharacterVector induced_trivial(GroupTag tag, std::string_view label) {
  return induced_trivial(tag, lattice_node(tag, label).subgroup);
}

Rational class_inner_product(GroupTag tag, const CharacterVector& a,
                             const CharacterVector& b) {
  return inner(character_table(tag), a, b);
}

std::vector<std::pair<std::string, int>> decompose(const CharacterVector& chi,
                                                   GroupTag tag) {
  const auto& t = character_table(tag);
  if (chi.size() != t.classes.size())
    throw not_decomposable_error("character vector has the wrong width");
  std::vector<std::pair<std::string, int>> out;
  CharacterVector recon(t.classes.size(), 0);
  for (const auto& r : t.rows) {
    Rational m = inner(t, chi, r.values) * Rational(1, r.norm);
    if (!m.is_integer() || m.num < 0)
      throw not_decomposable_error("multiplicity of " + r.label + " is " + m.str());
    int mult = static_cast<int>(m.as_integer());
    out.push_back({r.label, mult});
    for (size_t c = 0; c < recon.size(); ++c) recon[c] += mult * r.values[c];
  }
  if (recon != chi)
    throw not_decomposable_error("reconstruction from multiplicities fails");
  return out;
}

int multiplicity_l(GroupTag tag, std::string_view row_label) {
  for (const auto& r : character_table(tag).rows)
    if (r.label == row_label) return r.constituent_degree / r.schur_index;
  throw unknown_subgroup_error("no irreducible labeled " + std::string(row_label));
}

std::vector<std::pair<std::string, int>> pair_prym_coefficients(
    GroupTag tag, std::string_view n1_label, std::string_view n2_label) {
  // needs every rational irreducible absolutely irreducible: the full group
  if (tag != GroupTag::S5)
    throw std::invalid_argument(
        "pair decomposition needs absolutely irreducible rational characters");
  const auto& t = character_table(tag);
  const Subgroup& n1 = lattice_node(tag, n1_label).subgroup;
  const Subgroup& n2 = lattice_node(tag, n2_label).subgroup;
  Subgroup m = n1.intersect(n2);
  Subgroup n = Subgroup::join(n1, n2);
  auto cm = induced_trivial(tag, m);
  auto cn = induced_trivial(tag, n);
  auto c1 = induced_trivial(tag, n1);
  auto c2 = induced_trivial(tag, n2);
  CharacterVector combo(t.classes.size());
  for (size_t i = 0; i < combo.size(); ++i)
    combo[i] = cm[i] + cn[i] - c1[i] - c2[i];
  std::vector<std::pair<std::string, int>> out;
  for (const auto& r : t.rows) {
    Rational s = inner(t, combo, r.values) * Rational(1, r.norm);
    if (!s.is_integer() || s.num < 0)
      throw not_decomposable_error("pair coefficient of " + r.label + " is " +
                                   s.str());
    out.push_back({r.label, static_cast<int>(s.as_integer())});
  }
  return out;
}

}  // namespace galois5
