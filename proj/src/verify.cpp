#include "galois5/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "galois5/decomp.hpp"

namespace galois5 {

namespace {

using Item = VerifyItem;

std::string gname(GroupTag t) { return std::string(group_name(t)); }

std::vector<TypeCounts> admissible_counts(GroupTag tag, int per_type_max) {
  std::vector<TypeCounts> out;
  std::function<void(int, TypeCounts&)> rec = [&](int slot, TypeCounts& c) {
    if (slot == kTypeSlots) {
      if (counts_admissible(tag, c)) out.push_back(c);
      return;
    }
    for (int k = 0; k <= per_type_max; ++k) {
      c.n[slot] = k;
      rec(slot + 1, c);
    }
    c.n[slot] = 0;
  };
  TypeCounts c;
  rec(0, c);
  return out;
}

Item check_classification_equivalence(const VerifyOptions& opt) {
  long cases = 0;
  std::vector<std::string> bad;
  auto sweep = [&](int gmax, int nmax, int degmax, int gmin) {
    for (int g = gmin; g <= gmax; ++g)
      for (const auto& d : ramification_grid(g, nmax, degmax)) {
        ++cases;
        auto expect = classify(d).possible;
        auto got = enumerate_monodromy(d, opt.budget);
        if (expect != got && bad.size() < 5) bad.push_back(to_string(d));
      }
  };
  sweep(opt.gmax, opt.nmax, opt.degmax, 0);
  if (opt.extended_genus0) sweep(0, 5, 14, 0);
  std::ostringstream os;
  os << cases << " ramification data classified and enumerated";
  if (!bad.empty()) {
    os << "; disagreements at:";
    for (const auto& s : bad) os << " " << s;
  }
  return {"classification equivalence", bad.empty(), os.str()};
}

Item check_point_values() {
  bool ok = true;
  std::ostringstream os;

  GeometricSignature s1;
  s1.base_genus = 1;
  s1.branches.push_back({2, parse_perm("(1 2)(3 4)")});
  long g1 = closure_genus(s1, 60);
  ok = ok && g1 == 16;
  os << "closure genus of the alternating (1;2) action: " << g1;

  GeometricSignature s2;
  s2.base_genus = 0;
  s2.branches.push_back({4, parse_perm("(2 3 5 4)")});
  s2.branches.push_back({4, parse_perm("(2 3 5 4)")});
  s2.branches.push_back({2, parse_perm("(1 4)(2 3)")});
  long g2 = closure_genus(s2, 20);
  ok = ok && g2 == 1;
  os << "; affine (0;4,4,2): " << g2;

  GeometricSignature s3;
  s3.base_genus = 0;
  s3.branches.push_back({2, parse_perm("(1 2)(3 4)")});
  s3.branches.push_back({2, parse_perm("(1 3)(2 4)")});
  s3.branches.push_back({5, parse_perm("(1 2 3 4 5)")});
  bool rejected = false;
  std::string msg;
  try {
    closure_genus(s3, 60);
  } catch (const inconsistent_signature_error& e) {
    rejected = true;
    msg = e.what();
  }
  ok = ok && rejected;
  os << "; alternating (0;2,2,5) rejected: " << (rejected ? msg : "NO");
  return {"reference point values", ok, os.str()};
}

Item check_table_reproduction() {
  long equalities = 0;
  bool ok = true;
  std::ostringstream bad;
  for (GroupTag t : kAllGroups) {
    // symbolic identity per lattice row
    for (const auto& node : lattice(t)) {
      auto derived = orbit_forms(t, node.label);
      const auto& stated = table_forms(t, node.label);
      if (!(derived.genus == stated.genus &&
            derived.deg_ram_from_closure == stated.deg_ram_from_closure &&
            derived.deg_ram_to_base == stated.deg_ram_to_base)) {
        ok = false;
        bad << " " << gname(t) << ":" << node.label;
      }
    }
    for (const auto& eq : between_table(t))
      if (!(between_orbit_form(t, eq.from, eq.to) == eq.deg)) {
        ok = false;
        bad << " " << gname(t) << ":" << eq.from << "->" << eq.to;
      }
    // numeric sweep over admissible counts
    for (const auto& c : admissible_counts(t, 3))
      for (long g = 0; g <= 3; ++g) {
        for (const auto& node : lattice(t)) {
          auto sig = signature_from_counts(t, c, static_cast<int>(g));
          auto concrete =
              intermediate(sig, canonical_group(t), node.subgroup);
          const auto& stated = table_forms(t, node.label);
          if (concrete.genus != stated.genus.eval_int(g, c) ||
              concrete.deg_ram_to_base != stated.deg_ram_to_base.eval_int(g, c) ||
              concrete.deg_ram_from_closure !=
                  stated.deg_ram_from_closure.eval_int(g, c))
            ok = false;
          equalities += 3;
        }
        for (const auto& eq : between_table(t)) {
          auto sig = signature_from_counts(t, c, static_cast<int>(g));
          auto b = intermediate_between(sig, canonical_group(t),
                                        lattice_node(t, eq.from).subgroup,
                                        lattice_node(t, eq.to).subgroup);
          if (b.deg_ram != eq.deg.eval_int(g, c)) ok = false;
          ++equalities;
        }
      }
  }
  std::ostringstream os;
  os << equalities << " tabulated integers reproduced by the orbit engine";
  if (!ok) os << "; mismatches at" << bad.str();
  return {"table reproduction", ok, os.str()};
}

Item check_character_identities() {
  bool ok = true;
  std::ostringstream os;
  try {
    auto want = [&ok](GroupTag t, const char* label,
                      std::vector<std::pair<std::string, int>> expect) {
      auto got = decompose(induced_trivial(t, label), t);
      std::map<std::string, int> gm, em;
      for (auto& [l, k] : got)
        if (k) gm[l] = k;
      for (auto& [l, k] : expect) em[l] = k;
      if (gm != em) ok = false;
    };
    want(GroupTag::C5, "Id", {{"U", 1}, {"V", 1}});
    want(GroupTag::C5, "C5", {{"U", 1}});
    want(GroupTag::D5, "C5", {{"U", 1}, {"W", 1}});
    want(GroupTag::D5, "C2", {{"U", 1}, {"V", 1}});
    want(GroupTag::D5, "D5", {{"U", 1}});
    want(GroupTag::AffF5, "D5", {{"U", 1}, {"Ut", 1}});
    want(GroupTag::AffF5, "C5", {{"U", 1}, {"Ut", 1}, {"WW*", 1}});
    want(GroupTag::AffF5, "C4", {{"U", 1}, {"V", 1}});
    want(GroupTag::A5, "A4", {{"U", 1}, {"V", 1}});
    want(GroupTag::A5, "D5", {{"U", 1}, {"W", 1}});
    want(GroupTag::A5, "C5", {{"U", 1}, {"W", 1}, {"L2V", 1}});
    want(GroupTag::S5, "AffF5", {{"U", 1}, {"Wt", 1}});
    want(GroupTag::S5, "A5", {{"U", 1}, {"Ut", 1}});
    want(GroupTag::S5, "S4", {{"U", 1}, {"V", 1}});
    want(GroupTag::S5, "D6", {{"U", 1}, {"V", 1}, {"W", 1}});
    want(GroupTag::S5, "D5", {{"U", 1}, {"Ut", 1}, {"W", 1}, {"Wt", 1}});
    want(GroupTag::S5, "A4", {{"U", 1}, {"Ut", 1}, {"V", 1}, {"Vt", 1}});
    want(GroupTag::S5, "S3", {{"U", 1}, {"V", 2}, {"L2V", 1}, {"W", 1}});

    // Frobenius reciprocity over every lattice pair and row
    long pairs = 0;
    for (GroupTag t : kAllGroups) {
      const auto& table = character_table(t);  // startup checks run here
      for (const auto& node : lattice(t)) {
        auto ind = induced_trivial(t, node.label);
        for (const auto& r : table.rows) {
          Rational lhs = class_inner_product(t, ind, r.values);
          long sum = 0;
          for (const auto& h : node.subgroup.elements())
            sum += r.values[table.class_index_of(h)];
          if (!(lhs == Rational(sum, node.subgroup.order()))) ok = false;
          ++pairs;
        }
      }
    }
    os << "18 induced-character decompositions and " << pairs
       << " reciprocity identities";
  } catch (const std::exception& e) {
    ok = false;
    os << "exception: " << e.what();
  }
  return {"character identities", ok, os.str()};
}

Item check_decomposition_checksums() {
  bool ok = true;
  std::ostringstream os;
  TypeCounts zero;
  for (GroupTag t : kAllGroups) {
    auto r = decompose_counts(t, zero, std::nullopt);
    for (const auto& c : r.checks)
      if (!c.pass) {
        ok = false;
        os << " " << gname(t) << ":" << c.name;
      }
    const auto& mult = expected_multiplicities(t);
    for (size_t i = 0; i < r.factors.size(); ++i)
      if (r.factors[i].multiplicity != mult[i]) ok = false;
  }
  if (ok)
    os << "symbolic genus checksum, stated dimensions and multiplicities for "
          "all five groups";
  return {"decomposition consistency", ok, os.str()};
}

Item check_polarizations() {
  bool ok = true;
  long points = 0;
  std::ostringstream bad;
  for (GroupTag t : kAllGroups) {
    for (const auto& c : admissible_counts(t, 3))
      for (long g = 0; g <= 3; ++g) {
        // only points where this group actually occurs
        RamData d;
        d.base_genus = static_cast<int>(g);
        d.types = types_from_counts(c);
        if (!classify(d).possible.count(t)) continue;
        auto r = decompose_counts(t, c, g);
        ++points;
        for (const auto& f : r.factors) {
          if (!f.polarization) continue;
          long total = 0;
          for (const auto& e : f.polarization->entries)
            total += e.count_value.value_or(0);
          if (!f.dim_value || total != *f.dim_value) {
            ok = false;
            bad << " " << gname(t) << ":" << f.irrep << "@g=" << g;
          }
        }
        for (const auto& chk : r.checks)
          if (!chk.pass) {
            ok = false;
            bad << " " << gname(t) << ":" << chk.name << "@g=" << g;
          }
      }
  }
  std::ostringstream os;
  os << points
     << " realizable evaluation points: entry counts equal dimensions and "
        "etale branches switch with the ramification";
  if (!ok) os << "; failures at" << bad.str();
  return {"polarization bookkeeping", ok, os.str()};
}

Item check_witness_soundness(const VerifyOptions& opt) {
  long witnesses = 0;
  bool ok = true;
  std::ostringstream bad;
  auto sweep = [&](int gmax, int nmax, int degmax) {
    for (int g = 0; g <= gmax; ++g)
      for (const auto& d : ramification_grid(g, nmax, degmax))
        for (GroupTag t : classify(d).possible) {
          auto w = construct_witness(d, t, opt.budget);
          auto rep = validate(w, d);
          ++witnesses;
          if (!rep.valid() || rep.group != t) {
            ok = false;
            if (bad.tellp() < 200) bad << " " << to_string(d) << "/" << gname(t);
          }
        }
  };
  sweep(opt.gmax, opt.nmax, opt.degmax);
  if (opt.extended_genus0) sweep(0, 5, 14);
  std::ostringstream os;
  os << witnesses << " witnesses constructed and validated";
  if (!ok) os << "; failures at" << bad.str();
  return {"witness soundness", ok, os.str()};
}

Item check_pair_dimensions() {
  bool ok = true;
  long points = 0;
  std::ostringstream os;
  auto r = decompose_counts(GroupTag::S5, TypeCounts{}, std::nullopt);
  int formula = 0, literal = 0;
  for (const auto& c : r.checks) {
    if (c.name.rfind("pair_dimension_literal_", 0) == 0) {
      ++literal;
      if (!c.pass) ok = false;
    } else if (c.name.rfind("pair_dimension_", 0) == 0) {
      ++formula;
      if (!c.pass) ok = false;
    }
  }
  if (formula != 3 || literal != 2) ok = false;

  // numeric sweep of the genus-difference dimensions against the formula
  for (const auto& f : r.factors) {
    if (f.kind != FactorKind::PrymOfPair) continue;
    for (const auto& c : admissible_counts(GroupTag::S5, 2))
      for (long g = 0; g <= 3; ++g) {
        const auto& m = lattice_node(GroupTag::S5, f.subgroups[0]).subgroup;
        const auto& n1 = lattice_node(GroupTag::S5, f.subgroups[1]).subgroup;
        const auto& n2 = lattice_node(GroupTag::S5, f.subgroups[2]).subgroup;
        int d1 = n1.order() / m.order();
        int lead = 120 / m.order() - 120 / n1.order() - 120 / n2.order() + 1;
        long rf1 =
            between_orbit_form(GroupTag::S5, f.subgroups[0], f.subgroups[1])
                .eval_int(g, c);
        long rg1 = orbit_forms(GroupTag::S5, f.subgroups[1])
                       .deg_ram_to_base.eval_int(g, c);
        long rg2 = orbit_forms(GroupTag::S5, f.subgroups[2])
                       .deg_ram_to_base.eval_int(g, c);
        long bracket = rf1 + (d1 - 1) * rg1 - rg2;
        if (bracket % 2 != 0) {
          ok = false;
          continue;
        }
        long expect = static_cast<long>(lead) * (g - 1) + bracket / 2;
        if (f.dim_form.eval_int(g, c) != expect) ok = false;
        ++points;
      }
  }
  os << "three pair factors; 2 cartesian squares carry the literal "
        "(d1-1)(d2-1) coefficient, the S3 square is a fiber-product "
        "component (coefficient [G:M]-[G:N1]-[G:N2]+1); " << points
     << " numeric points checked";
  return {"pair dimension cross-check", ok, os.str()};
}

}  // namespace

std::vector<RamData> ramification_grid(int g, int nmax, int degmax) {
  std::vector<RamData> out;
  std::vector<int> slots;
  std::function<void(int, int)> rec = [&](int from, int deg) {
    RamData d;
    d.base_genus = g;
    for (int s : slots) d.types.push_back(CycleType::from_slot(s));
    out.push_back(d);
    if (static_cast<int>(slots.size()) == nmax) return;
    for (int s = from; s < kTypeSlots; ++s) {
      int nd = deg + CycleType::from_slot(s).degree();
      if (nd > degmax) continue;
      slots.push_back(s);
      rec(s, nd);
      slots.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<VerifyItem> run_verification(const VerifyOptions& opt) {
  std::vector<VerifyItem> items;
  items.push_back(check_classification_equivalence(opt));
  items.push_back(check_point_values());
  items.push_back(check_table_reproduction());
  items.push_back(check_character_identities());
  items.push_back(check_decomposition_checksums());
  items.push_back(check_polarizations());
  items.push_back(check_witness_soundness(opt));
  items.push_back(check_pair_dimensions());
  return items;
}

bool verification_passes(const std::vector<VerifyItem>& items) {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string render_verification(const std::vector<VerifyItem>& items) {
  std::ostringstream os;
  for (const auto& it : items)
    os << (it.pass ? "PASS" : "FAIL") << "  " << it.name << ": " << it.detail
       << "\n";
  os << (verification_passes(items) ? "all checks passed" : "THERE WERE FAILURES")
     << "\n";
  return os.str();
}

}  // namespace galois5
