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

#include "cmdih/cmdih.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "suites.hpp"
#include "verify.hpp"

using namespace cmdih;

struct cmdih_session {
  int d = 0;
  std::optional<Rat> a_value;
  int t_order = 2;
  std::string last_error;
  bool valid = false;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cmdih_status guarded(cmdih_session* s, char** out,
                     const std::function<std::pair<cmdih_status, std::string>()>& body) {
  if (out) *out = nullptr;
  if (!s) return CMDIH_ERR_INVALID_ARGUMENT;
  if (!s->valid) return CMDIH_ERR_INVALID_ARGUMENT;
  try {
    auto [st, text] = body();
    if (out) *out = dup_string(text);
    s->last_error.clear();
    return st;
  } catch (const std::invalid_argument& e) {
    s->last_error = e.what();
    return CMDIH_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return CMDIH_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* cmdih_version(void) { return "cmdih 1.0.0 (report schema cm-report/1)"; }

cmdih_session* cmdih_session_new(int d, const char* a_value, int t_order) {
  auto* s = new (std::nothrow) cmdih_session;
  if (!s) return nullptr;
  s->d = d;
  s->t_order = t_order;
  try {
    if (a_value) s->a_value = rat_from_string(a_value);
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (d > 8) throw std::invalid_argument("d above the supported ceiling of 8");
    if (t_order < 2) throw std::invalid_argument("t_order must be at least 2");
    s->valid = true;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    s->valid = false;
  }
  return s;
}

void cmdih_session_free(cmdih_session* s) { delete s; }

const char* cmdih_session_error(const cmdih_session* s) {
  return s ? s->last_error.c_str() : "null session";
}

cmdih_status cmdih_run_suites(cmdih_session* s, const char* suites, int jobs, int max_terms,
                              int with_timing, char** json_out) {
  return guarded(s, json_out, [&]() -> std::pair<cmdih_status, std::string> {
    RunConfig cfg;
    cfg.d = s->d;
    cfg.a_value = s->a_value;
    cfg.t_order = s->t_order;
    cfg.jobs = jobs < 1 ? 1 : jobs;
    cfg.max_terms = max_terms < 1 ? 50 : max_terms;
    cfg.timing = with_timing != 0;
    cfg.suites.clear();
    std::string src = suites ? suites : "all";
    size_t pos = 0;
    while (pos <= src.size()) {
      size_t comma = src.find(',', pos);
      std::string name = src.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (!name.empty()) cfg.suites.push_back(name);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cfg.suites.empty()) cfg.suites.push_back("all");
    Json report = run_report(cfg);
    return {report_all_pass(report) ? CMDIH_OK : CMDIH_ERR_CHECK_FAILED, report.dump(2) + "\n"};
  });
}

cmdih_status cmdih_psi_text(int i, char** text_out) {
  if (text_out) *text_out = nullptr;
  if (i < 0 || !text_out) return CMDIH_ERR_INVALID_ARGUMENT;
  try {
    *text_out = dup_string(psi(i).to_string());
    return CMDIH_OK;
  } catch (const std::exception&) {
    return CMDIH_ERR_INTERNAL;
  }
}

cmdih_status cmdih_bracket(cmdih_session* s, const char* gen1, const char* gen2, char** text_out) {
  return guarded(s, text_out, [&]() -> std::pair<cmdih_status, std::string> {
    if (!gen1 || !gen2) throw std::invalid_argument("generator names are required");
    return {CMDIH_OK, bracket_text(s->d, gen1, gen2)};
  });
}

cmdih_status cmdih_bracket_json(cmdih_session* s, const char* gen1, const char* gen2,
                                char** json_out) {
  return guarded(s, json_out, [&]() -> std::pair<cmdih_status, std::string> {
    if (!gen1 || !gen2) throw std::invalid_argument("generator names are required");
    return {CMDIH_OK, bracket_json(s->d, gen1, gen2).dump(2) + "\n"};
  });
}

cmdih_status cmdih_lie(cmdih_session* s, char** json_out) {
  return guarded(s, json_out, [&]() -> std::pair<cmdih_status, std::string> {
    return {CMDIH_OK, lie_report(s->d, s->a_value.value_or(Rat(1))).dump(2) + "\n"};
  });
}

cmdih_status cmdih_fixed_locus(cmdih_session* s, char** json_out) {
  return guarded(s, json_out, [&]() -> std::pair<cmdih_status, std::string> {
    Json j = fixed_report(s->d, s->a_value.value_or(Rat(1)));
    return {j["status"] == "pass" ? CMDIH_OK : CMDIH_ERR_CHECK_FAILED, j.dump(2) + "\n"};
  });
}

cmdih_status cmdih_sl2(cmdih_session* s, char** json_out) {
  return guarded(s, json_out, [&]() -> std::pair<cmdih_status, std::string> {
    return {CMDIH_OK, sl2_report(s->d).dump(2) + "\n"};
  });
}

void cmdih_string_free(char* p) { std::free(p); }

}  // extern "C"
