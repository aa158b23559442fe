// galois5 — command-line front end over the shared library's C interface.
//
//   galois5 classify  "g=0; 4,1:4,1:2,2,1"
//   galois5 witness   "g=1; 2,2,1" --group S5
//   galois5 cover     "g=1; 5" --group D5 --format json
//   galois5 cover     --group S5 --counts n1=1,n5=2
//   galois5 decompose "g=2;" --group C5 --format json
//   galois5 verify    --grid 1,4,12
//
// Exit codes: 0 ok, 1 failed verification, 2 parse/usage error,
// 3 unrealizable data, 4 enumeration budget exceeded.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "galois5.h"

namespace {

int finish(g5_status status, g5_result* result, bool as_json) {
  if (result) {
    std::fputs(as_json ? g5_result_json(result) : g5_result_text(result), stdout);
    std::fputc('\n', stdout);
    g5_result_free(result);
  }
  if (status != G5_OK && !result)
    std::fprintf(stderr, "error: %s\n", g5_last_error());
  return status == G5_ERR_INTERNAL ? 1 : static_cast<int>(status);
}

struct RamHandle {
  g5_ramdata* rd = nullptr;
  ~RamHandle() { g5_ramdata_free(rd); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monodromy and Jacobian decomposition of degree-5 coverings"};
  app.require_subcommand(1);

  std::string ramdata, group, counts, format = "text", grid = "1,4,12";
  unsigned long long budget = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_ramdata) {
    if (needs_ramdata)
      cmd->add_option("ramdata", ramdata,
                      "ramification data, e.g. \"g=0; 4,1:4,1:2,2,1\"");
    cmd->add_option("--group", group, "monodromy group (C5, D5, AffF5, A5, S5)");
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", budget, "enumeration budget in tuples");
    return cmd;
  };

  auto* c_classify = add_common(app.add_subcommand("classify",
                                                   "possible monodromy groups"),
                                true);
  auto* c_witness = add_common(
      app.add_subcommand("witness", "explicit generating vectors"), true);
  auto* c_cover = add_common(
      app.add_subcommand("cover", "intermediate coverings of the closure"), true);
  c_cover->add_option("--counts", counts, "branch counts, e.g. n1=1,n2=2[,g=2]");
  auto* c_decompose = add_common(
      app.add_subcommand("decompose", "group algebra decomposition"), true);
  c_decompose->add_option("--counts", counts,
                          "branch counts, e.g. n1=1,n2=2[,g=2]");
  auto* c_verify =
      add_common(app.add_subcommand("verify", "run the verification sweep"), false);
  c_verify->add_option("--grid", grid, "gmax,nmax,degmax (default 1,4,12)");

  CLI11_PARSE(app, argc, argv);
  bool as_json = format == "json";
  const char* grp = group.empty() ? nullptr : group.c_str();
  g5_result* result = nullptr;

  if (c_verify->parsed()) {
    int gmax, nmax, degmax;
    if (std::sscanf(grid.c_str(), "%d,%d,%d", &gmax, &nmax, &degmax) != 3) {
      std::fprintf(stderr, "error: --grid wants gmax,nmax,degmax\n");
      return 2;
    }
    g5_status s = g5_verify(gmax, nmax, degmax, budget, &result);
    return finish(s, result, as_json);
  }

  if (!counts.empty()) {
    if (c_cover->parsed() || c_decompose->parsed()) {
      g5_status s = c_cover->parsed()
                        ? g5_cover_counts(grp, counts.c_str(), &result)
                        : g5_decompose_counts(grp, counts.c_str(), &result);
      return finish(s, result, as_json);
    }
    std::fprintf(stderr, "error: --counts applies to cover and decompose\n");
    return 2;
  }

  RamHandle h;
  if (g5_status s = g5_ramdata_parse(ramdata.c_str(), &h.rd); s != G5_OK) {
    std::fprintf(stderr, "error: %s\n", g5_last_error());
    return static_cast<int>(s);
  }

  g5_status status = G5_ERR_INTERNAL;
  if (c_classify->parsed())
    status = g5_classify(h.rd, &result);
  else if (c_witness->parsed())
    status = g5_witness(h.rd, grp, budget, &result);
  else if (c_cover->parsed())
    status = g5_cover(h.rd, grp, &result);
  else if (c_decompose->parsed())
    status = g5_decompose(h.rd, grp, &result);
  return finish(status, result, as_json);
}
