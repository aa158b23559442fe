#include "galois5.h"

#include <cstring>
#include <optional>
#include <string>

#include "galois5/report.hpp"
#include "galois5/verify.hpp"

using namespace galois5;

extern "C" {

struct g5_ramdata {
  RamData rep;
};

struct g5_result {
  std::string text;
  std::string json_text;
};

}  // extern "C"

namespace {

thread_local std::string t_last_error;

g5_status fail(g5_status s, const char* what) {
  t_last_error = what;
  return s;
}

g5_result* make_result(std::string text, const json& j) {
  auto* r = new g5_result;
  r->text = std::move(text);
  r->json_text = j.dump(2);
  return r;
}

// maps library exceptions onto status codes
template <typename Fn>
g5_status guarded(g5_result** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    return fn();
  } catch (const parse_error& e) {
    return fail(G5_ERR_PARSE, e.what());
  } catch (const unknown_subgroup_error& e) {
    return fail(G5_ERR_PARSE, e.what());
  } catch (const budget_exceeded_error& e) {
    return fail(G5_ERR_BUDGET, e.what());
  } catch (const not_realizable_error& e) {
    return fail(G5_ERR_UNREALIZABLE, e.what());
  } catch (const group_not_possible_error& e) {
    return fail(G5_ERR_UNREALIZABLE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(G5_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(G5_ERR_INTERNAL, e.what());
  }
}

std::optional<GroupTag> parse_group(const char* group) {
  if (!group || !*group) return std::nullopt;
  return group_from_name(group);  // throws unknown_subgroup_error
}

// "n1=2,n3=1[,g=2]": counts in the fixed order, optional numeric genus
std::pair<TypeCounts, std::optional<long>> parse_counts(const char* text) {
  if (!text) throw parse_error("missing branch counts");
  TypeCounts c;
  std::optional<long> genus;
  std::string s(text);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string item = s.substr(pos, next - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw parse_error("expected key=value: " + item);
    std::string key = item.substr(0, eq);
    while (!key.empty() && key.front() == ' ') key.erase(key.begin());
    while (!key.empty() && key.back() == ' ') key.pop_back();
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (...) {
      throw parse_error("bad integer in: " + item);
    }
    if (key == "g") {
      genus = value;
    } else if (key.size() == 2 && key[0] == 'n' && key[1] >= '1' && key[1] <= '6') {
      if (value < 0) throw parse_error("negative count in: " + item);
      c.n[key[1] - '1'] = static_cast<int>(value);
    } else {
      throw parse_error("unknown key: " + key);
    }
    pos = next + 1;
  }
  return {c, genus};
}

GroupTag resolve_group(const RamData& d, const char* group) {
  if (auto tag = parse_group(group)) return *tag;
  auto cls = classify(d);
  if (cls.possible.empty())
    throw not_realizable_error("ramification data is not realizable");
  if (cls.possible.size() > 1)
    throw parse_error(
        "several monodromy groups are possible; pick one with --group");
  return *cls.possible.begin();
}

}  // namespace

extern "C" {

const char* g5_version(void) { return "1.0.0"; }

const char* g5_last_error(void) { return t_last_error.c_str(); }

g5_status g5_ramdata_parse(const char* text, g5_ramdata** out) {
  if (!out) return fail(G5_ERR_PARSE, "null output handle");
  *out = nullptr;
  try {
    auto* rd = new g5_ramdata{parse_ramdata(text ? text : "")};
    *out = rd;
    return G5_OK;
  } catch (const std::exception& e) {
    return fail(G5_ERR_PARSE, e.what());
  }
}

void g5_ramdata_free(g5_ramdata* rd) { delete rd; }

int g5_ramdata_genus(const g5_ramdata* rd) { return rd->rep.base_genus; }

int g5_ramdata_branch_count(const g5_ramdata* rd) { return rd->rep.n(); }

int g5_ramdata_is_realizable(const g5_ramdata* rd) {
  return is_realizable(rd->rep) ? 1 : 0;
}

g5_status g5_classify(const g5_ramdata* rd, g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    auto r = classify(rd->rep);
    *out = make_result(classification_to_text(rd->rep, r),
                       classification_to_json(rd->rep, r));
    return r.possible.empty() ? fail(G5_ERR_UNREALIZABLE, "not realizable")
                              : G5_OK;
  });
}

g5_status g5_witness(const g5_ramdata* rd, const char* group,
                     unsigned long long budget, g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    uint64_t b = budget ? budget : kDefaultBudget;
    auto cls = classify(rd->rep);
    if (cls.possible.empty())
      return fail(G5_ERR_UNREALIZABLE, "ramification data is not realizable");
    WitnessReport w;
    w.input = rd->rep;
    if (auto tag = parse_group(group)) {
      w.witnesses.push_back({*tag, construct_witness(rd->rep, *tag, b)});
    } else {
      for (GroupTag tag : cls.possible)
        w.witnesses.push_back({tag, construct_witness(rd->rep, tag, b)});
    }
    *out = make_result(witness_to_text(w), witness_to_json(w));
    return G5_OK;
  });
}

g5_status g5_cover(const g5_ramdata* rd, const char* group, g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    GroupTag tag = resolve_group(rd->rep, group);
    auto r = cover_report(tag, counts(rd->rep), rd->rep.base_genus);
    *out = make_result(cover_to_text(r), cover_to_json(r));
    return G5_OK;
  });
}

g5_status g5_cover_counts(const char* group, const char* counts_text,
                          g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    auto tag = parse_group(group);
    if (!tag) return fail(G5_ERR_PARSE, "counts mode needs an explicit group");
    auto [c, genus] = parse_counts(counts_text);
    auto r = cover_report(*tag, c, genus);
    *out = make_result(cover_to_text(r), cover_to_json(r));
    return G5_OK;
  });
}

g5_status g5_decompose(const g5_ramdata* rd, const char* group, g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    GroupTag tag = resolve_group(rd->rep, group);
    auto r = decompose_jacobian(rd->rep, tag);
    *out = make_result(decomposition_to_text(r), decomposition_to_json(r));
    return G5_OK;
  });
}

g5_status g5_decompose_counts(const char* group, const char* counts_text,
                              g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    auto tag = parse_group(group);
    if (!tag) return fail(G5_ERR_PARSE, "counts mode needs an explicit group");
    auto [c, genus] = parse_counts(counts_text);
    auto r = decompose_counts(*tag, c, genus);
    *out = make_result(decomposition_to_text(r), decomposition_to_json(r));
    return G5_OK;
  });
}

g5_status g5_verify(int gmax, int nmax, int degmax, unsigned long long budget,
                    g5_result** out) {
  return guarded(out, [&]() -> g5_status {
    VerifyOptions opt;
    if (gmax >= 0) opt.gmax = gmax;
    if (nmax >= 0) opt.nmax = nmax;
    if (degmax >= 0) opt.degmax = degmax;
    if (budget) opt.budget = budget;
    opt.extended_genus0 = false;
    auto items = run_verification(opt);
    json j;
    j["grid"] = {{"gmax", opt.gmax}, {"nmax", opt.nmax}, {"degmax", opt.degmax}};
    j["items"] = json::array();
    for (const auto& it : items)
      j["items"].push_back(
          {{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    j["pass"] = verification_passes(items);
    *out = make_result(render_verification(items), j);
    return verification_passes(items)
               ? G5_OK
               : fail(G5_ERR_VERIFY, "verification failed");
  });
}

const char* g5_result_text(const g5_result* r) { return r->text.c_str(); }

const char* g5_result_json(const g5_result* r) { return r->json_text.c_str(); }

void g5_result_free(g5_result* r) { delete r; }

}  // extern "C"
