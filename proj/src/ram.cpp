#include "galois5/ram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace galois5 {

namespace {

void skip_ws(std::string_view s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(std::string_view s, size_t& i) {
  skip_ws(s, i);
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw parse_error("expected integer");
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i++] - '0');
    if (v > 1000000) throw parse_error("integer out of range");
  }
  return static_cast<int>(neg ? -v : v);
}

}  // namespace

RamData parse_ramdata(std::string_view text) {
  size_t i = 0;
  skip_ws(text, i);
  if (text.substr(i, 1) != "g") throw parse_error("ramification data must start with g=");
  ++i;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '=') throw parse_error("expected '=' after g");
  ++i;
  RamData d;
  d.base_genus = parse_int(text, i);
  if (d.base_genus < 0) throw parse_error("base genus must be non-negative");
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ';') throw parse_error("expected ';' after genus");
  ++i;
  skip_ws(text, i);
  while (i < text.size()) {
    std::vector<int> parts;
    parts.push_back(parse_int(text, i));
    skip_ws(text, i);
    while (i < text.size() && text[i] == ',') {
      ++i;
      parts.push_back(parse_int(text, i));
      skip_ws(text, i);
    }
    CycleType t = CycleType::from_parts(parts);
    if (t.is_trivial()) throw parse_error("[1,1,1,1,1] is not a branch type");
    d.types.push_back(t);
    if (i < text.size()) {
      if (text[i] != ':') throw parse_error("expected ':' between types");
      ++i;
      skip_ws(text, i);
      if (i == text.size()) throw parse_error("trailing ':'");
    }
  }
  return d;
}

std::string to_string(const RamData& d) {
  std::string s = "g=" + std::to_string(d.base_genus) + ";";
  for (size_t k = 0; k < d.types.size(); ++k) {
    s += k ? ":" : " ";
    auto parts = d.types[k].parts();
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(parts[j]);
    }
  }
  return s;
}

int TypeCounts::total() const { return std::accumulate(n.begin(), n.end(), 0); }

int type_degree(const CycleType& t) { return t.degree(); }

bool is_even_tuple(const RamData& d) {
  int odd = 0;
  for (const auto& t : d.types) odd += t.is_odd() ? 1 : 0;
  return odd % 2 == 0;
}

int total_degree(const RamData& d) {
  int deg = 0;
  for (const auto& t : d.types) deg += t.degree();
  return deg;
}

bool is_realizable(const RamData& d) {
  if (!is_even_tuple(d)) return false;
  return d.base_genus >= 1 || total_degree(d) >= 8;
}

TypeCounts counts(const RamData& d) {
  TypeCounts c;
  for (const auto& t : d.types) ++c.n[t.slot()];
  return c;
}

std::vector<CycleType> types_from_counts(const TypeCounts& c) {
  std::vector<CycleType> r;
  for (int s = 0; s < kTypeSlots; ++s)
    for (int k = 0; k < c.n[s]; ++k) r.push_back(CycleType::from_slot(s));
  return r;
}

long covering_genus(const RamData& d) {
  long rhs = 5L * (2L * d.base_genus - 2) + total_degree(d);
  if (rhs % 2 != 0)
    throw inconsistent_signature_error("odd tuple: covering genus is not integral");
  return rhs / 2 + 1;
}

ClosureSignature closure_signature(const RamData& d, GroupTag cls) {
  const auto& avail = element_types(cls);
  ClosureSignature s;
  s.genus = d.base_genus;
  for (const auto& t : d.types) {
    if (!avail.count(t))
      throw not_transitive_error(std::string("type ") + t.str() +
                                 " does not occur in " + std::string(group_name(cls)));
    s.periods.push_back(t.order());
  }
  std::sort(s.periods.begin(), s.periods.end());
  return s;
}

}  // namespace galois5
