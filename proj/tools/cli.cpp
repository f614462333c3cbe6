// Copyright 2026 The cmdih authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch driver over the shared-library C interface. Subcommands: verify,
// psi, bracket, lie, fixed, sl2, report. Exit status: 0 all checks pass,
// 1 some check failed, 2 usage or parameter error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "cmdih/cmdih.h"

namespace {

struct SessionDeleter {
  void operator()(cmdih_session* s) const { cmdih_session_free(s); }
};
using SessionPtr = std::unique_ptr<cmdih_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char* p) const { cmdih_string_free(p); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

SessionPtr open_session(int d, const std::string& a, int t_order) {
  SessionPtr s(cmdih_session_new(d, a.empty() ? nullptr : a.c_str(), t_order));
  if (!s) {
    std::cerr << "error: out of memory\n";
    std::exit(2);
  }
  if (*cmdih_session_error(s.get())) {
    std::cerr << "error: " << cmdih_session_error(s.get()) << "\n";
    std::exit(2);
  }
  return s;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int run_suites(int d, const std::string& a, int t_order, const std::string& suites, int jobs,
               int max_terms, bool timing, const std::string& out_path, bool quiet) {
  if (d > 6)
    std::cerr << "note: d = " << d << " grows the exact computations quickly; expect longer runs\n";
  SessionPtr s = open_session(d, a, t_order);
  StringPtr json;
  char* raw = nullptr;
  cmdih_status st = cmdih_run_suites(s.get(), suites.c_str(), jobs, max_terms, timing ? 1 : 0,
                                     &raw);
  json.reset(raw);
  if (st == CMDIH_ERR_INVALID_ARGUMENT || st == CMDIH_ERR_INTERNAL || !json) {
    std::cerr << "error: " << cmdih_session_error(s.get()) << "\n";
    return 2;
  }
  if (!quiet) {
    // One line per check for terminal use; the JSON carries the details.
    std::string text = json.get();
    size_t pos = 0;
    while ((pos = text.find("\"id\": \"", pos)) != std::string::npos) {
      size_t id_start = pos + 7;
      size_t id_end = text.find('"', id_start);
      size_t st_start = text.find("\"status\": \"", id_end);
      if (st_start == std::string::npos) break;
      st_start += 11;
      size_t st_end = text.find('"', st_start);
      std::cout << (text.compare(st_start, st_end - st_start, "pass") == 0 ? "[pass] " : "[FAIL] ")
                << text.substr(id_start, id_end - id_start) << "\n";
      pos = st_end;
    }
  }
  if (!out_path.empty()) {
    int erc = emit(json.get(), out_path);
    if (erc) return erc;
  } else if (quiet) {
    std::cout << json.get();
  }
  return st == CMDIH_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for the center of the rational Cherednik algebra of "
               "dihedral groups (equal parameters)"};
  app.require_subcommand(1);

  int d = 5, t_order = 2, jobs = 1, max_terms = 50, psi_i = 0;
  std::string a, suite = "all", out, g1, g2;
  bool timing = false, quiet = false;

  auto add_common = [&](CLI::App* cmd, bool with_suite) {
    cmd->add_option("--d", d, "dihedral half-order (group order is 2d), 2..8")->required();
    cmd->add_option("--a", a, "exact rational value p/q for the parameter (default: symbolic)");
    cmd->add_option("--t-order", t_order, "truncation order of the deformation variable")
        ->default_val(2);
    if (with_suite) {
      cmd->add_option("--suite", suite,
                      "comma-separated: psi,z0,zc,horreur,poisson,phi,lie,sl2,tau or all");
      cmd->add_option("--jobs", jobs, "parallelism degree")->default_val(1);
      cmd->add_option("--max-terms", max_terms, "witness truncation")->default_val(50);
      cmd->add_flag("--timing", timing, "include per-suite elapsed_ms in the report");
      cmd->add_flag("--quiet", quiet, "suppress the per-check terminal lines");
      cmd->add_option("--out", out, "write the JSON report to this path");
    }
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, true);

  CLI::App* report = app.add_subcommand("report", "run every suite and write the JSON report");
  add_common(report, true);
  report->get_option("--out")->required();

  CLI::App* psi_cmd = app.add_subcommand("psi", "print a member of the Psi family");
  psi_cmd->add_option("--i", psi_i, "index")->required();

  CLI::App* bracket = app.add_subcommand("bracket", "Poisson bracket of two named generators");
  add_common(bracket, false);
  bool bracket_as_json = false;
  bracket->add_option("--g1", g1, "first generator: q, Q, eu, a0..ad")->required();
  bracket->add_option("--g2", g2, "second generator")->required();
  bracket->add_flag("--json", bracket_as_json, "emit the bracket as JSON, one PBW term per entry");

  CLI::App* lie = app.add_subcommand("lie", "Lie algebra at the cuspidal point (d >= 4)");
  add_common(lie, false);
  lie->add_option("--out", out, "write the JSON to this path");

  CLI::App* fixed = app.add_subcommand("fixed", "fixed locus of the diagram automorphism");
  add_common(fixed, false);
  fixed->add_option("--out", out, "write the JSON to this path");

  CLI::App* sl2 = app.add_subcommand("sl2", "Hermite-correspondence layer report");
  add_common(sl2, false);
  sl2->add_option("--out", out, "write the JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) {
      std::string effective = suite;
      return run_suites(d, a, t_order, effective, jobs, max_terms, timing, out, quiet);
    }
    if (app.got_subcommand(report)) {
      return run_suites(d, a, t_order, "all", jobs, max_terms, timing, out, true);
    }
    if (app.got_subcommand(psi_cmd)) {
      char* raw = nullptr;
      if (cmdih_psi_text(psi_i, &raw) != CMDIH_OK) {
        std::cerr << "error: invalid index\n";
        return 2;
      }
      StringPtr text(raw);
      std::cout << "Psi_" << psi_i << " = " << text.get() << "\n";
      return 0;
    }
    if (app.got_subcommand(bracket)) {
      SessionPtr s = open_session(d, a, t_order);
      char* raw = nullptr;
      cmdih_status st = bracket_as_json
                            ? cmdih_bracket_json(s.get(), g1.c_str(), g2.c_str(), &raw)
                            : cmdih_bracket(s.get(), g1.c_str(), g2.c_str(), &raw);
      if (st != CMDIH_OK) {
        std::cerr << "error: " << cmdih_session_error(s.get()) << "\n";
        return 2;
      }
      StringPtr text(raw);
      std::cout << text.get();
      if (!bracket_as_json) std::cout << "\n";
      return 0;
    }
    auto json_subcommand = [&](CLI::App* cmd,
                               cmdih_status (*fn)(cmdih_session*, char**)) -> int {
      if (!app.got_subcommand(cmd)) return -1;
      SessionPtr s = open_session(d, a, t_order);
      char* raw = nullptr;
      cmdih_status st = fn(s.get(), &raw);
      StringPtr json(raw);
      if (st == CMDIH_ERR_INVALID_ARGUMENT || st == CMDIH_ERR_INTERNAL || !json) {
        std::cerr << "error: " << cmdih_session_error(s.get()) << "\n";
        return 2;
      }
      int erc = emit(json.get(), out);
      if (erc) return erc;
      return st == CMDIH_OK ? 0 : 1;
    };
    int rc;
    if ((rc = json_subcommand(lie, cmdih_lie)) >= 0) return rc;
    if ((rc = json_subcommand(fixed, cmdih_fixed_locus)) >= 0) return rc;
    if ((rc = json_subcommand(sl2, cmdih_sl2)) >= 0) return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
