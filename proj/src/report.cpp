#include "galois5/report.hpp"

#include <sstream>

namespace galois5 {

namespace {

json form_value(const AffineForm& form, const std::optional<long>& value) {
  json j;
  j["form"] = form.str();
  if (value)
    j["value"] = *value;
  else
    j["value"] = nullptr;
  return j;
}

json counts_json(const TypeCounts& c) {
  json j;
  for (int i = 0; i < 6; ++i) j["n" + std::to_string(i + 1)] = c[i];
  return j;
}

std::string fv(const AffineForm& form, const std::optional<long>& value) {
  std::string s = form.str();
  if (value) s += " = " + std::to_string(*value);
  return s;
}

}  // namespace

json classification_to_json(const RamData& d, const ClassificationResult& r) {
  json j;
  j["input"] = to_string(d);
  j["realizable"] = !r.possible.empty();
  j["possible"] = json::array();
  for (GroupTag t : r.possible) j["possible"].push_back(std::string(group_name(t)));
  j["rule"] = r.rule;
  j["facts_used"] = r.facts_used;
  j["explanation"] = explain(d, r);
  return j;
}

std::string classification_to_text(const RamData& d, const ClassificationResult& r) {
  return explain(d, r);
}

json witness_to_json(const WitnessReport& w) {
  json j;
  j["input"] = to_string(w.input);
  j["witnesses"] = json::array();
  for (const auto& [tag, v] : w.witnesses) {
    json e;
    e["group"] = std::string(group_name(tag));
    e["entries"] = witness_strings(v);
    j["witnesses"].push_back(e);
  }
  return j;
}

std::string witness_to_text(const WitnessReport& w) {
  std::ostringstream os;
  os << "input " << to_string(w.input) << "\n";
  for (const auto& [tag, v] : w.witnesses) {
    os << "group " << group_name(tag) << ":\n";
    for (const auto& line : witness_strings(v)) os << "  " << line << "\n";
  }
  return os.str();
}

CoverReport cover_report(GroupTag tag, const TypeCounts& c,
                         std::optional<long> genus) {
  if (!counts_admissible(tag, c))
    throw group_not_possible_error("branch counts not admissible for " +
                                   std::string(group_name(tag)));
  if (genus) {
    RamData d;
    d.base_genus = static_cast<int>(*genus);
    d.types = types_from_counts(c);
    if (!classify(d).possible.count(tag))
      throw group_not_possible_error(std::string(group_name(tag)) +
                                     " is not a possible monodromy group for " +
                                     to_string(d));
  }
  CoverReport r;
  r.group = tag;
  r.counts = c;
  r.genus = genus;
  for (int slot = 0; slot < kTypeSlots; ++slot)
    for (int k = 0; k < c[slot]; ++k)
      r.periods.push_back(CycleType::from_slot(slot).order());
  std::sort(r.periods.begin(), r.periods.end());

  for (const auto& node : lattice(tag)) {
    auto f = orbit_forms(tag, node.label);
    CoverReportRow row;
    row.label = node.label;
    row.degree = group_order(tag) / node.subgroup.order();
    row.genus_form = f.genus;
    row.from_closure_form = f.deg_ram_from_closure;
    row.to_base_form = f.deg_ram_to_base;
    if (genus) {
      row.genus_value = f.genus.eval_int(*genus, c);
      row.from_closure_value = f.deg_ram_from_closure.eval_int(*genus, c);
      row.to_base_value = f.deg_ram_to_base.eval_int(*genus, c);
    }
    r.rows.push_back(std::move(row));
  }
  for (const auto& eq : between_table(tag)) {
    CoverBetweenRow row;
    row.from = eq.from;
    row.to = eq.to;
    row.degree = lattice_node(tag, eq.to).subgroup.order() /
                 lattice_node(tag, eq.from).subgroup.order();
    row.form = between_orbit_form(tag, eq.from, eq.to);
    if (genus) row.value = row.form.eval_int(*genus, c);
    r.between.push_back(std::move(row));
  }
  return r;
}

json cover_to_json(const CoverReport& r) {
  json j;
  j["group"] = std::string(group_name(r.group));
  j["counts"] = counts_json(r.counts);
  j["signature"]["genus"] = r.genus ? json(*r.genus) : json(nullptr);
  j["signature"]["periods"] = r.periods;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json e;
    e["subgroup"] = row.label;
    e["degree"] = row.degree;
    e["genus"] = form_value(row.genus_form, row.genus_value);
    e["ram_from_closure"] = form_value(row.from_closure_form, row.from_closure_value);
    e["ram_to_base"] = form_value(row.to_base_form, row.to_base_value);
    j["rows"].push_back(e);
  }
  j["between"] = json::array();
  for (const auto& row : r.between) {
    json e;
    e["from"] = row.from;
    e["to"] = row.to;
    e["degree"] = row.degree;
    e["deg_ram"] = form_value(row.form, row.value);
    j["between"].push_back(e);
  }
  return j;
}

std::string cover_to_text(const CoverReport& r) {
  std::ostringstream os;
  os << "group " << group_name(r.group) << ", signature (";
  if (r.genus)
    os << *r.genus;
  else
    os << "g";
  for (size_t i = 0; i < r.periods.size(); ++i)
    os << (i ? ", " : "; ") << r.periods[i];
  os << ")\n";
  os << "quotients of the closure:\n";
  for (const auto& row : r.rows) {
    os << "  " << row.label << " (degree " << row.degree
       << " over the base)\n";
    os << "    genus            " << fv(row.genus_form, row.genus_value) << "\n";
    os << "    ram from closure " << fv(row.from_closure_form, row.from_closure_value)
       << "\n";
    os << "    ram to base      " << fv(row.to_base_form, row.to_base_value) << "\n";
  }
  if (!r.between.empty()) {
    os << "maps between quotients:\n";
    for (const auto& row : r.between)
      os << "  " << row.from << " -> " << row.to << " (degree " << row.degree
         << "): deg ram " << fv(row.form, row.value) << "\n";
  }
  return os.str();
}

json decomposition_to_json(const DecompositionReport& r) {
  json j;
  j["group"] = std::string(group_name(r.group));
  j["counts"] = counts_json(r.counts);
  j["signature"]["genus"] = r.genus ? json(*r.genus) : json(nullptr);
  j["signature"]["periods"] = r.periods;
  j["closure_genus"] = form_value(r.closure_genus_form, r.closure_genus_value);
  j["factors"] = json::array();
  for (const auto& f : r.factors) {
    json e;
    e["irrep"] = f.irrep;
    e["multiplicity"] = f.multiplicity;
    e["kind"] = std::string(factor_kind_name(f.kind));
    e["subgroups"] = f.subgroups;
    e["dimension"] = form_value(f.dim_form, f.dim_value);
    if (!f.polarization) {
      e["polarization"] = "not_determined";
    } else {
      json pol = json::array();
      for (const auto& entry : f.polarization->entries) {
        json pe;
        pe["divisor"] = entry.divisor;
        pe["count_form"] = entry.count_form.str();
        pe["count_value"] =
            entry.count_value ? json(*entry.count_value) : json(nullptr);
        pol.push_back(pe);
      }
      e["polarization"] = pol;
    }
    j["factors"].push_back(e);
  }
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    j["checks"].push_back(e);
  }
  return j;
}

std::string decomposition_to_text(const DecompositionReport& r) {
  std::ostringstream os;
  os << "group " << group_name(r.group) << ", signature (";
  if (r.genus)
    os << *r.genus;
  else
    os << "g";
  for (size_t i = 0; i < r.periods.size(); ++i)
    os << (i ? ", " : "; ") << r.periods[i];
  os << ")\n";
  os << "closure genus " << fv(r.closure_genus_form, r.closure_genus_value) << "\n";
  os << "factors:\n";
  for (const auto& f : r.factors) {
    os << "  " << f.irrep;
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
    os << ": ";
    switch (f.kind) {
      case FactorKind::BaseJacobian:
        os << "Jacobian of the base";
        break;
      case FactorKind::PrymOfIntermediate:
        os << "Prym of " << f.subgroups[0] << " -> " << f.subgroups[1];
        break;
      case FactorKind::PrymOfPair:
        os << "Prym of the pair " << f.subgroups[0] << " -> (" << f.subgroups[1]
           << ", " << f.subgroups[2] << ")";
        break;
      case FactorKind::PrymNotIdentified:
        os << "not identified";
        break;
    }
    os << "\n    dim " << fv(f.dim_form, f.dim_value) << "\n";
    if (!f.polarization) {
      os << "    polarization not determined\n";
    } else if (f.polarization->entries.empty()) {
      os << "    polarization ()\n";
    } else {
      os << "    polarization";
      for (const auto& e : f.polarization->entries) {
        os << " " << e.divisor << " x (" << e.count_form.str();
        if (e.count_value) os << " = " << *e.count_value;
        os << ")";
      }
      os << "\n";
    }
  }
  os << "checks:\n";
  for (const auto& c : r.checks)
    os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
  return os.str();
}

}  // namespace galois5
