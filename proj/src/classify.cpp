#include "galois5/classify.hpp"

namespace galois5 {

namespace {

const std::set<GroupTag> kAll = {GroupTag::C5, GroupTag::D5, GroupTag::AffF5,
                                 GroupTag::A5, GroupTag::S5};
const std::set<GroupTag> kAllButC5 = {GroupTag::D5, GroupTag::AffF5,
                                      GroupTag::A5, GroupTag::S5};

ClassificationResult result(std::set<GroupTag> possible, std::string rule,
                            std::vector<std::string> facts = {}) {
  return {std::move(possible), std::move(rule), std::move(facts)};
}

std::string fact_i() { return std::string(kFactNoA5OnSignature12); }
std::string fact_ii() { return std::string(kFactGenus1Solvable); }

ClassificationResult classify_positive_genus(const RamData& d) {
  const auto c = counts(d);
  const int n = d.n();
  const int g = d.base_genus;
  const int n221 = c[1], n41 = c[2], n311 = c[3], n32 = c[4], n2111 = c[5];

  if (n == 0)
    return g == 1 ? result({GroupTag::C5}, "GP.N=0")
                  : result(kAll, "GP.N=0");
  if (n32 > 0 || n2111 > 0) return result({GroupTag::S5}, "GP.32or2111");
  if (n311 > 0 && n41 > 0) return result({GroupTag::S5}, "GP.311and41");
  if (n41 > 0)
    return result({GroupTag::S5, GroupTag::AffF5}, "GP.S5orGA");
  if (n311 > 0) return result({GroupTag::S5, GroupTag::A5}, "GP.S5orA5");
  if (n221 > 0) {
    if (n == 1 && g == 1) return result({GroupTag::S5}, "GP.221a", {fact_i()});
    if (n221 % 2 == 1)
      return result({GroupTag::S5, GroupTag::A5}, "GP.221b");
    return result(kAllButC5, "GP.221c");
  }
  // only [5] remains
  return n == 1 ? result(kAllButC5, "GP.only5a") : result(kAll, "GP.only5b");
}

ClassificationResult classify_genus_zero(const RamData& d) {
  const auto c = counts(d);
  const int deg = total_degree(d);
  const int n221 = c[1], n41 = c[2], n311 = c[3], n32 = c[4], n2111 = c[5];

  if (n32 > 0 || n2111 > 0) return result({GroupTag::S5}, "G0.32or2111");
  if (n311 > 0 && n41 > 0) return result({GroupTag::S5}, "G0.311and41");
  if (n41 > 0) {
    if (deg == 8) return result({GroupTag::AffF5}, "G0.S5orGA.a", {fact_ii()});
    return result({GroupTag::AffF5, GroupTag::S5}, "G0.S5orGA.b");
  }
  if (n311 > 0) return result({GroupTag::A5}, "G0.A5");
  if (n221 > 0) {
    if (deg == 8) return result({GroupTag::D5}, "G0.221a", {fact_ii()});
    if (n221 % 2 == 1) return result({GroupTag::A5}, "G0.221b");
    return result({GroupTag::D5, GroupTag::A5}, "G0.221c");
  }
  // only [5]: degree 4n >= 8 forces n >= 2
  return d.n() == 2 ? result({GroupTag::C5}, "G0.only5")
                    : result({GroupTag::C5, GroupTag::A5}, "G0.only5");
}

}  // namespace

ClassificationResult classify(const RamData& d) {
  if (!is_realizable(d)) return result({}, "unrealizable");
  return d.base_genus >= 1 ? classify_positive_genus(d) : classify_genus_zero(d);
}

std::string explain(const RamData& d, const ClassificationResult& r) {
  std::string s = "input " + to_string(d) + "\n";
  if (r.rule == "unrealizable") {
    s += "not realizable: ";
    s += is_even_tuple(d)
             ? "total ramification degree below 8 on the projective line\n"
             : "odd number of odd branch types\n";
    return s;
  }
  s += "clause " + r.rule + " applies: possible monodromy groups {";
  bool first = true;
  for (GroupTag t : r.possible) {
    if (!first) s += ", ";
    first = false;
    s += group_name(t);
  }
  s += "}\n";
  for (const auto& f : r.facts_used) s += "uses: " + f + "\n";
  return s;
}

}  // namespace galois5
