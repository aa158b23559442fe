#include "galois5/genvec.hpp"

#include <algorithm>
#include <unordered_map>

#include "galois5/classify.hpp"

namespace galois5 {

namespace {

Perm5 P(const char* s) { return parse_perm(s); }

uint64_t saturating_mul(uint64_t a, uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(p);
}

struct MaskElemKey {
  uint64_t lo, hi;
  uint8_t e;
  bool operator==(const MaskElemKey&) const = default;
};
struct MaskElemHash {
  size_t operator()(const MaskElemKey& k) const {
    uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= k.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= k.e + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

// closure of a subgroup mask extended by one element
struct ClosureMemo {
  std::unordered_map<MaskElemKey, Mask120, MaskElemHash> memo;

  Mask120 extend(const Mask120& m, uint8_t e) {
    if (m.test(e)) return m;
    MaskElemKey key{m.lo, m.hi, e};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const auto& T = PermTables::get();
    Mask120 r = m;
    std::vector<uint8_t> elems;
    for (int i = 0; i < 120; ++i)
      if (r.test(i)) elems.push_back(static_cast<uint8_t>(i));
    r.set(e);
    elems.push_back(e);
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        uint8_t p = T.mul[elems[i]][elems[j]];
        if (!r.test(p)) {
          r.set(p);
          elems.push_back(p);
        }
      }
    memo.emplace(key, r);
    return r;
  }
};

// DFS over tuples (a_1, b_1, ..., a_g, b_g, c_1, ..., c_n) inside one group,
// the last c eliminated through the product relation. Deterministic: slots
// are filled in ascending element order, so the first hit is the
// lexicographically least solution.
struct Searcher {
  const Subgroup* group = nullptr;
  int g = 0;
  std::vector<int> c_slots;            // required type slot per c entry
  std::vector<uint8_t> accept;         // admissible total products (usually {Id})
  bool require_exact_closure = true;   // closure of all entries == group
  bool normalize_first = false;        // first slot over conjugacy class reps
  uint64_t budget = kDefaultBudget;

  // derived state
  std::vector<uint8_t> handle_cands;
  std::vector<std::vector<uint8_t>> c_cands;
  std::vector<uint8_t> first_reps;
  ClosureMemo closure;
  std::vector<uint8_t> chosen;
  std::optional<std::vector<uint8_t>> found;

  int n() const { return static_cast<int>(c_slots.size()); }

  uint64_t estimate() {
    prepare();
    uint64_t total = 1;
    int slots = 2 * g + std::max(0, n() - 1);
    for (int s = 0; s < slots; ++s) {
      uint64_t width = slot_candidates(s).size();
      if (s == 0 && normalize_first) width = first_reps.size();
      total = saturating_mul(total, std::max<uint64_t>(width, 1));
    }
    return saturating_mul(total, std::max<uint64_t>(accept.size(), 1));
  }

  const std::vector<uint8_t>& slot_candidates(int s) const {
    return s < 2 * g ? handle_cands : c_cands[s - 2 * g];
  }

  void prepare() {
    if (!handle_cands.empty() || group == nullptr) return;
    handle_cands = group->element_ids();
    const auto& T = PermTables::get();
    c_cands.clear();
    for (int j = 0; j + 1 < n(); ++j) {
      std::vector<uint8_t> cands;
      for (uint8_t e : handle_cands)
        if (T.type_slot[e] == c_slots[j]) cands.push_back(e);
      c_cands.push_back(std::move(cands));
    }
    if (normalize_first) {
      int total_slots = 2 * g + std::max(0, n() - 1);
      if (total_slots > 0) {
        const auto& cands = slot_candidates(0);
        for (const auto& cls : conjugacy_classes(*group)) {
          uint8_t least = cls.front();
          if (std::binary_search(cands.begin(), cands.end(), least))
            first_reps.push_back(least);
        }
        std::sort(first_reps.begin(), first_reps.end());
      }
    }
  }

  std::optional<std::vector<uint8_t>> run() {
    prepare();
    uint64_t space = estimate();
    if (space > budget) throw budget_exceeded_error(space);
    Mask120 trivial;
    trivial.set(Perm5::identity().index());
    dfs(0, Perm5::identity().index(), trivial);
    return found;
  }

  void dfs(int slot, uint8_t prefix, Mask120 reached) {
    if (found) return;
    const auto& T = PermTables::get();
    int free_slots = 2 * g + std::max(0, n() - 1);
    if (slot == free_slots) {
      leaf(prefix, reached);
      return;
    }
    const auto& cands =
        (slot == 0 && normalize_first) ? first_reps : slot_candidates(slot);
    bool is_a_slot = slot < 2 * g && slot % 2 == 0;
    for (uint8_t e : cands) {
      uint8_t next_prefix = prefix;
      if (is_a_slot) {
        // commutator folded in when b is chosen
      } else if (slot < 2 * g) {
        uint8_t a = chosen.back();
        uint8_t comm =
            T.mul[T.mul[T.mul[T.inv[a]][T.inv[e]]][a]][e];  // a^-1 b^-1 a b
        next_prefix = T.mul[prefix][comm];
      } else {
        next_prefix = T.mul[prefix][e];
      }
      chosen.push_back(e);
      dfs(slot + 1, next_prefix, closure.extend(reached, e));
      chosen.pop_back();
      if (found) return;
    }
  }

  void leaf(uint8_t prefix, Mask120 reached) {
    const auto& T = PermTables::get();
    if (n() == 0) {
      // total product is the handle prefix itself
      for (uint8_t m : accept) {
        if (prefix != m) continue;
        if (!require_exact_closure || reached == group->mask()) {
          found = chosen;
          return;
        }
      }
      return;
    }
    for (uint8_t m : accept) {
      uint8_t forced = T.mul[T.inv[prefix]][m];
      if (T.type_slot[forced] != c_slots[n() - 1]) continue;
      if (!group->contains_id(forced)) continue;
      Mask120 closed = closure.extend(reached, forced);
      if (require_exact_closure && !(closed == group->mask())) continue;
      auto tuple = chosen;
      tuple.push_back(forced);
      found = std::move(tuple);
      return;
    }
  }
};

std::vector<int> c_slots_of(const RamData& d) {
  std::vector<int> r;
  for (const auto& t : d.types) r.push_back(t.slot());
  return r;
}

bool types_available(const RamData& d, GroupTag tag) {
  const auto& avail = element_types(tag);
  for (const auto& t : d.types)
    if (!avail.count(t)) return false;
  return true;
}

GeneratingVector tuple_to_vector(const RamData& d, const std::vector<uint8_t>& ids) {
  GeneratingVector v;
  v.g = d.base_genus;
  for (int i = 0; i < 2 * d.base_genus; ++i)
    v.ab.push_back(Perm5::from_index(ids[i]));
  for (int i = 0; i < d.n(); ++i)
    v.cs.push_back(Perm5::from_index(ids[2 * d.base_genus + i]));
  return v;
}

Perm5 fold(const std::vector<Perm5>& ps) {
  Perm5 r;
  for (const auto& p : ps) r = r * p;
  return r;
}

std::optional<Perm5> least_of_type(const Subgroup& g, const CycleType& t) {
  for (uint8_t e : g.element_ids()) {
    Perm5 p = Perm5::from_index(e);
    if (!p.is_identity() && CycleType::of(p) == t) return p;
  }
  return std::nullopt;
}

// conjugacy class of x inside g, as element ids
std::vector<uint8_t> class_of(const Subgroup& g, const Perm5& x) {
  std::vector<uint8_t> cls;
  std::array<bool, 120> seen{};
  for (uint8_t e : g.element_ids()) {
    Perm5 c = conjugate(x, Perm5::from_index(e));
    if (!seen[c.index()]) {
      seen[c.index()] = true;
      cls.push_back(c.index());
    }
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

// deterministic search for c_1..c_n in `group` with prescribed types and
// total product conjugate (in group) to `needed`; conjugated afterwards so
// the product equals `needed` exactly
std::optional<std::vector<Perm5>> c_tuple_with_product(const Subgroup& group,
                                                       const RamData& d,
                                                       const Perm5& needed,
                                                       uint64_t budget) {
  if (d.n() == 0) return std::nullopt;
  Searcher s;
  s.group = &group;
  s.g = 0;
  s.c_slots = c_slots_of(d);
  s.accept = class_of(group, needed);
  s.require_exact_closure = false;
  s.budget = budget;
  auto tuple = s.run();
  if (!tuple) return std::nullopt;
  std::vector<Perm5> cs;
  for (uint8_t e : *tuple) cs.push_back(Perm5::from_index(e));
  Perm5 got = fold(cs);
  for (uint8_t e : group.element_ids()) {
    Perm5 x = Perm5::from_index(e);
    if (conjugate(got, x) == needed) {
      for (auto& c : cs) c = conjugate(c, x);
      return cs;
    }
  }
  return std::nullopt;
}

GeneratingVector with_handles(const RamData& d, std::vector<Perm5> handles,
                              std::vector<Perm5> cs) {
  GeneratingVector v;
  v.g = d.base_genus;
  v.ab = std::move(handles);
  v.ab.resize(2 * d.base_genus, Perm5::identity());
  v.cs = std::move(cs);
  return v;
}

// the constructive cases; nullopt where no fixed construction applies
std::optional<GeneratingVector> constructive_witness(const RamData& d,
                                                     GroupTag target,
                                                     uint64_t budget) {
  const Subgroup& G = canonical_group(target);
  const Perm5 r = P("(1 2 3 4 5)");
  const int g = d.base_genus, n = d.n();

  if (target == GroupTag::C5) {
    if (n == 0) return with_handles(d, {r}, {});
    std::vector<Perm5> cs(n, r);
    for (int first = 1; first <= 2; ++first) {
      cs[0] = power(r, first);
      Perm5 prod;
      for (int i = 0; i + 1 < n; ++i) prod = prod * cs[i];
      cs[n - 1] = prod.inverse();
      if (!cs[n - 1].is_identity()) return with_handles(d, {}, cs);
    }
    return std::nullopt;
  }

  if (n == 0 && g >= 2) {
    const auto& gens = canonical_generators(target);
    std::vector<Perm5> handles = {gens[0], Perm5::identity()};
    if (gens.size() > 1) {
      handles.push_back(gens[1]);
      handles.push_back(Perm5::identity());
    }
    return with_handles(d, std::move(handles), {});
  }

  if (target == GroupTag::S5 && g >= 1 && n >= 1) {
    std::vector<Perm5> cs;
    for (const auto& t : d.types) {
      auto c = least_of_type(canonical_group(GroupTag::S5), t);
      if (!c) return std::nullopt;
      cs.push_back(*c);
    }
    Perm5 prod = fold(cs);
    if (prod.is_identity()) {
      // at most one choice of the last entry kills the product
      for (const auto& p : Perm5::all()) {
        if (p.is_identity() || CycleType::of(p) != d.types.back()) continue;
        cs.back() = p;
        prod = fold(cs);
        if (!prod.is_identity()) break;
      }
      if (prod.is_identity()) return std::nullopt;
    }
    for (const auto& row : witness_tables::transitive_handle_rows()) {
      if (CycleType::of(row.product) != CycleType::of(prod)) continue;
      for (const auto& x : Perm5::all()) {
        if (conjugate(prod, x) != row.product) continue;
        for (auto& c : cs) c = conjugate(c, x);
        return with_handles(d, {row.a1, row.b1}, std::move(cs));
      }
    }
    return std::nullopt;
  }

  if (target == GroupTag::A5 && g == 0 && n >= 3) {
    bool all_five = true;
    for (const auto& t : d.types)
      if (t != CycleType::from_parts({5})) all_five = false;
    if (all_five) {
      std::vector<Perm5> cs = {P("(1 3 2 5 4)"), P("(1 3 5 4 2)")};
      for (int i = 2; i + 1 < n; ++i) cs.push_back(r);
      for (int k = 1; k <= 4; ++k) {
        auto trial = cs;
        if (n > 3) trial.back() = power(r, k);
        Perm5 last = fold(trial).inverse();
        if (CycleType::of(last) == CycleType::from_parts({5})) {
          trial.push_back(last);
          return with_handles(d, {}, trial);
        }
        if (n == 3) break;
      }
      return std::nullopt;
    }
  }

  if ((target == GroupTag::D5 || target == GroupTag::AffF5 ||
       target == GroupTag::A5) &&
      g >= 1 && n >= 1 && types_available(d, target)) {
    std::vector<std::pair<Perm5, Perm5>> handle_pairs;
    for (const auto& row : witness_tables::five_commutator_rows())
      if (row.group == target) handle_pairs.push_back({row.a1, row.b1});
    if (target == GroupTag::A5) {
      handle_pairs.push_back({P("(1 5 2 3 4)"), P("(1 3 4 2 5)")});
      handle_pairs.push_back({P("(1 4 3 2 5)"), P("(1 5 2 4 3)")});
    }
    for (const auto& [a1, b1] : handle_pairs) {
      Perm5 needed = commutator(a1, b1).inverse();
      auto cs = c_tuple_with_product(G, d, needed, budget);
      if (cs) return with_handles(d, {a1, b1}, std::move(*cs));
    }
    // two-handle fallback with a [2,2,1] commutator product
    if (target == GroupTag::A5 && g >= 2) {
      std::vector<Perm5> hs = {P("(1 3 4 2 5)"), P("(1 5 2 3 4)"),
                               P("(1 3 2 4 5)"), P("(1 5 4 3 2)")};
      Perm5 needed =
          (commutator(hs[0], hs[1]) * commutator(hs[2], hs[3])).inverse();
      auto cs = c_tuple_with_product(G, d, needed, budget);
      if (cs) return with_handles(d, hs, std::move(*cs));
    }
    return std::nullopt;
  }

  return std::nullopt;
}

}  // namespace

ValidationReport validate(const GeneratingVector& v, const RamData& d) {
  if (v.g != d.base_genus)
    throw length_mismatch_error("genus of vector and data disagree");
  if (static_cast<int>(v.ab.size()) != 2 * v.g)
    throw length_mismatch_error("expected 2g handle entries");
  if (static_cast<int>(v.cs.size()) != d.n())
    throw length_mismatch_error("expected one c entry per branch type");

  ValidationReport rep;
  Perm5 prod;
  for (int i = 0; i < v.g; ++i) prod = prod * commutator(v.ab[2 * i], v.ab[2 * i + 1]);
  for (const auto& c : v.cs) prod = prod * c;
  rep.product_ok = prod.is_identity();

  rep.types_ok = true;
  for (int i = 0; i < d.n(); ++i)
    if (v.cs[i].is_identity() || CycleType::of(v.cs[i]) != d.types[i])
      rep.types_ok = false;

  std::vector<Perm5> all = v.ab;
  all.insert(all.end(), v.cs.begin(), v.cs.end());
  Subgroup h = all.empty() ? Subgroup() : Subgroup::closure(all);
  rep.transitive = h.is_transitive();
  if (rep.valid()) rep.group = identify_transitive(h);
  return rep;
}

bool has_generating_vector(const Subgroup& group, const RamData& d,
                           uint64_t budget) {
  Searcher s;
  s.group = &group;
  s.g = d.base_genus;
  s.c_slots = c_slots_of(d);
  s.accept = {Perm5::identity().index()};
  s.require_exact_closure = true;
  s.normalize_first = true;
  s.budget = budget;
  return s.run().has_value();
}

std::set<GroupTag> enumerate_monodromy(const RamData& d, uint64_t budget) {
  std::vector<GroupTag> candidates;
  uint64_t total = 0;
  for (GroupTag tag : kAllGroups) {
    if (!types_available(d, tag)) continue;
    candidates.push_back(tag);
    Searcher s;
    s.group = &canonical_group(tag);
    s.g = d.base_genus;
    s.c_slots = c_slots_of(d);
    s.accept = {Perm5::identity().index()};
    s.normalize_first = true;
    uint64_t est = s.estimate();
    total = total > UINT64_MAX - est ? UINT64_MAX : total + est;
  }
  if (total > budget) throw budget_exceeded_error(total);

  std::set<GroupTag> out;
  for (GroupTag tag : candidates)
    if (has_generating_vector(canonical_group(tag), d, UINT64_MAX))
      out.insert(tag);
  return out;
}

GeneratingVector construct_witness(const RamData& d, GroupTag target,
                                   uint64_t budget) {
  auto cls = classify(d);
  if (!cls.possible.count(target))
    throw not_realizable_error(std::string(group_name(target)) +
                               " is not a possible monodromy group for " +
                               to_string(d));

  if (auto w = constructive_witness(d, target, budget)) {
    auto rep = validate(*w, d);
    if (rep.valid() && rep.group == target) return *w;
  }

  Searcher s;
  s.group = &canonical_group(target);
  s.g = d.base_genus;
  s.c_slots = c_slots_of(d);
  s.accept = {Perm5::identity().index()};
  s.require_exact_closure = true;
  s.normalize_first = false;  // lexicographically least witness
  s.budget = budget;
  auto tuple = s.run();
  if (!tuple)
    throw not_realizable_error("no generating vector found for " +
                               to_string(d) + " in " +
                               std::string(group_name(target)));
  return tuple_to_vector(d, *tuple);
}

std::vector<std::string> witness_strings(const GeneratingVector& v) {
  std::vector<std::string> out;
  for (int i = 0; i < v.g; ++i) {
    out.push_back("a" + std::to_string(i + 1) + "=" + to_string(v.ab[2 * i]));
    out.push_back("b" + std::to_string(i + 1) + "=" + to_string(v.ab[2 * i + 1]));
  }
  for (size_t i = 0; i < v.cs.size(); ++i)
    out.push_back("c" + std::to_string(i + 1) + "=" + to_string(v.cs[i]));
  return out;
}

std::string serialize_witness(const GeneratingVector& v) {
  std::string s;
  for (const auto& line : witness_strings(v)) {
    s += line;
    s += '\n';
  }
  return s;
}

namespace witness_tables {

const std::array<HandleChoice, 3>& transitive_handle_rows() {
  static const std::array<HandleChoice, 3> rows = {{
      {P("(1 2 3 4 5)"), P("(1 3)(2 5 4)"), P("(1 3 5 2)"), P("(1 5 4 3 2)")},
      {P("(1 2)(3 4)"), P("(1 3)(2 4 5)"), P("(1 2 4 5)"), P("(1 2)(3 4)")},
      {P("(1 2 3)"), P("(1 5 2)(3 4)"), P("(1 3 5 4)"), P("(1 3 2)")},
  }};
  return rows;
}

namespace {
CycleType T(std::initializer_list<int> parts) {
  return CycleType::from_parts(std::vector<int>(parts));
}
}  // namespace

const std::vector<ProductTypeCase>& product_type_rows() {
  static const std::vector<ProductTypeCase> rows = [] {
    std::vector<ProductTypeCase> r;
    auto row = [&r](std::initializer_list<int> target, const char* tail,
                    std::initializer_list<int> t1, const char* c1,
                    const char* product) {
      r.push_back({T(target), P(tail), T(t1), P(c1), P(product)});
    };
    row({5}, "(1 2 3 4 5)", {5}, "(1 2 3 4 5)", "(1 3 5 2 4)");
    row({5}, "(1 2 3 4 5)", {2, 2, 1}, "(1 3)(2 4)", "(1 4 5 3 2)");
    row({5}, "(1 2 3 4 5)", {3, 1, 1}, "(1 2 5)", "(1 5 2 3 4)");
    row({5}, "(1 2)(3 4)", {5}, "(1 3 2 4 5)", "(1 4 2 3 5)");
    row({5}, "(1 2)(3 4)", {2, 2, 1}, "(1 5)(2 3)", "(1 3 4 2 5)");
    row({5}, "(1 2)(3 4)", {3, 1, 1}, "(1 5 3)", "(1 2 5 3 4)");
    row({5}, "(1 2 3)", {5}, "(1 2 5 4 3)", "(1 5 4 3 2)");
    row({5}, "(1 2 3)", {2, 2, 1}, "(1 5)(3 4)", "(1 2 4 3 5)");
    row({5}, "(1 2 3)", {3, 1, 1}, "(2 4 5)", "(1 4 5 2 3)");
    row({2, 2, 1}, "(1 2 3 4 5)", {5}, "(1 3 2 4 5)", "(1 4)(3 5)");
    row({2, 2, 1}, "(1 2 3 4 5)", {2, 2, 1}, "(1 5)(2 4)", "(1 4)(2 3)");
    row({2, 2, 1}, "(1 2 3 4 5)", {3, 1, 1}, "(1 4 3)", "(1 2)(4 5)");
    row({2, 2, 1}, "(1 2)(3 4)", {5}, "(1 4 5 3 2)", "(2 4)(3 5)");
    row({2, 2, 1}, "(1 2)(3 4)", {2, 2, 1}, "(1 4)(2 3)", "(1 3)(2 4)");
    row({2, 2, 1}, "(1 2)(3 4)", {3, 1, 1}, "(1 2 5)", "(1 5)(3 4)");
    row({2, 2, 1}, "(1 2 3)", {5}, "(1 4 3 2 5)", "(1 5)(3 4)");
    row({2, 2, 1}, "(1 2 3)", {2, 2, 1}, "(2 3)(4 5)", "(1 3)(4 5)");
    row({2, 2, 1}, "(1 2 3)", {3, 1, 1}, "(1 5 3)", "(1 2)(3 5)");
    row({3, 1, 1}, "(1 2 3 4 5)", {5}, "(1 4 5 3 2)", "(3 5 4)");
    row({3, 1, 1}, "(1 2 3 4 5)", {2, 2, 1}, "(1 5)(3 4)", "(1 2 4)");
    row({3, 1, 1}, "(1 2 3 4 5)", {3, 1, 1}, "(1 5 4)", "(1 2 3)");
    row({3, 1, 1}, "(1 2)(3 4)", {5}, "(1 5 4 3 2)", "(2 5 4)");
    row({3, 1, 1}, "(1 2)(3 4)", {2, 2, 1}, "(1 5)(3 4)", "(1 2 5)");
    row({3, 1, 1}, "(1 2)(3 4)", {3, 1, 1}, "(1 3 4)", "(1 2 3)");
    row({3, 1, 1}, "(1 2 3)", {5}, "(1 5 4 3 2)", "(3 5 4)");
    row({3, 1, 1}, "(1 2 3)", {2, 2, 1}, "(1 5)(2 3)", "(1 3 5)");
    row({3, 1, 1}, "(1 2 3)", {3, 1, 1}, "(1 2 3)", "(1 3 2)");
    return r;
  }();
  return rows;
}

const std::vector<OddFiveCase>& odd_five_rows() {
  static const std::vector<OddFiveCase> rows = [] {
    std::vector<OddFiveCase> r;
    auto row = [&r](const char* tail, std::initializer_list<int> t1,
                    const char* c1, const char* product) {
      r.push_back({P(tail), T(t1), P(c1), P(product)});
    };
    row("(1 2)", {3, 2}, "(1 5 3)(2 4)", "(1 4 2 5 3)");
    row("(1 2)", {4, 1}, "(1 5 3 4)", "(1 2 5 3 4)");
    row("(1 2 3 4)", {3, 2}, "(1 3 4)(2 5)", "(1 5 2 4 3)");
    row("(1 2 3 4)", {4, 1}, "(2 3 4 5)", "(1 3 5 2 4)");
    row("(1 2 3)(4 5)", {3, 2}, "(1 5 3)(2 4)", "(1 4 3 5 2)");
    row("(1 2 3)(4 5)", {4, 1}, "(1 5 2 3)", "(1 3 5 4 2)");
    return r;
  }();
  return rows;
}

const std::vector<DegreeTwoCase>& degree_two_rows() {
  static const std::vector<DegreeTwoCase> rows = [] {
    std::vector<DegreeTwoCase> r;
    auto row = [&r](std::initializer_list<int> t3, const char* c1,
                    std::initializer_list<int> t2, const char* c2,
                    const char* product12, std::vector<std::pair<int, int>> word) {
      r.push_back({T(t3), P(c1), T(t2), P(c2), P(product12), std::move(word)});
    };
    row({2, 2, 1}, "(1 2 3)(4 5)", {3, 2}, "(1 4 2)(3 5)", "(1 5)(3 4)",
        {{2, -1}, {1, 1}, {2, -2}, {1, 2}});
    row({2, 2, 1}, "(1 2 3)(4 5)", {4, 1}, "(2 3 4 5)", "(1 2)(3 5)",
        {{1, -2}, {2, -1}, {1, 3}, {2, 1}, {1, -1}, {1, -2}});
    row({2, 2, 1}, "(1 2 3 4)", {4, 1}, "(2 4 5 3)", "(1 2)(4 5)",
        {{1, 1}, {2, -1}});
    row({3, 1, 1}, "(1 2 3)(4 5)", {3, 2}, "(1 4 5)(2 3)", "(1 5 2)",
        {{2, 1}, {1, 2}, {2, 3}});
    row({3, 1, 1}, "(1 2 3)(4 5)", {4, 1}, "(2 5 4 3)", "(1 2 4)",
        {{1, -1}, {2, -1}, {1, -2}, {2, -1}, {1, 3}});
    row({3, 1, 1}, "(1 2 3 4)", {4, 1}, "(2 5 4 3)", "(1 2 5)",
        {{1, -1}, {2, 1}, {1, -1}, {2, 1}});
    return r;
  }();
  return rows;
}

const std::array<CommutatorChoice, 3>& five_commutator_rows() {
  static const std::array<CommutatorChoice, 3> rows = {{
      {GroupTag::A5, P("(1 2 5 3 4)"), P("(1 5 3 2 4)")},
      {GroupTag::AffF5, P("(1 3 2 5)"), P("(3 2 4 5)")},
      {GroupTag::D5, P("(1 3 5 2 4)"), P("(1 2)(3 5)")},
  }};
  return rows;
}

}  // namespace witness_tables

}  // namespace galois5
