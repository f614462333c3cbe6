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

// Exercises the shared-library C surface the way an embedding client would:
// only cmdih/cmdih.h, opaque handles, and returned strings.

#include <cstdio>
#include <cstring>
#include <string>

#include "cmdih/cmdih.h"

static int failures = 0;

#define EXPECT(cond, what)                                      \
  do {                                                          \
    if (!(cond)) {                                              \
      std::fprintf(stderr, "capi check failed: %s\n", what);    \
      ++failures;                                               \
    }                                                           \
  } while (0)

static bool contains(const char* hay, const char* needle) {
  return hay && std::strstr(hay, needle) != nullptr;
}

int main() {
  EXPECT(contains(cmdih_version(), "cm-report/1"), "version advertises the report schema");

  // Parameter validation surfaces through the session error, not a crash.
  cmdih_session* bad = cmdih_session_new(1, nullptr, 2);
  EXPECT(bad != nullptr, "session allocation");
  EXPECT(cmdih_session_error(bad)[0] != '\0', "d = 1 is rejected");
  char* out = nullptr;
  EXPECT(cmdih_run_suites(bad, "psi", 1, 50, 0, &out) == CMDIH_ERR_INVALID_ARGUMENT,
         "invalid session fails calls");
  EXPECT(out == nullptr, "no output on failure");
  cmdih_session_free(bad);

  bad = cmdih_session_new(4, "not-a-number", 2);
  EXPECT(cmdih_session_error(bad)[0] != '\0', "malformed a is rejected");
  cmdih_session_free(bad);

  // Psi text is stateless.
  char* text = nullptr;
  EXPECT(cmdih_psi_text(2, &text) == CMDIH_OK, "psi text");
  EXPECT(contains(text, "T^2 - T1*T2"), "psi_2 rendering");
  cmdih_string_free(text);
  EXPECT(cmdih_psi_text(-1, &text) == CMDIH_ERR_INVALID_ARGUMENT, "negative index rejected");

  // A small verification run.
  cmdih_session* s3 = cmdih_session_new(3, nullptr, 2);
  EXPECT(cmdih_session_error(s3)[0] == '\0', "session d=3 valid");
  char* json = nullptr;
  EXPECT(cmdih_run_suites(s3, "psi,z0", 1, 50, 0, &json) == CMDIH_OK, "psi+z0 suites pass");
  EXPECT(contains(json, "\"version\": \"cm-report/1\""), "report schema header");
  EXPECT(contains(json, "\"all_pass\": true"), "all checks pass");
  EXPECT(!contains(json, "elapsed_ms"), "no timing by default");
  cmdih_string_free(json);
  json = nullptr;
  EXPECT(cmdih_run_suites(s3, "no-such-suite", 1, 50, 0, &json) == CMDIH_ERR_INVALID_ARGUMENT,
         "unknown suite rejected");
  EXPECT(contains(cmdih_session_error(s3), "unknown suite"), "error message set");

  // Bracket of named generators.
  char* br = nullptr;
  EXPECT(cmdih_bracket(s3, "q", "Q", &br) == CMDIH_OK, "bracket computes");
  EXPECT(contains(br, "{q,Q} ="), "bracket labels");
  EXPECT(contains(br, "s[0]"), "bracket contains the reflection sum of eu");
  cmdih_string_free(br);
  EXPECT(cmdih_bracket(s3, "q", "zz", &br) == CMDIH_ERR_INVALID_ARGUMENT, "bad generator name");
  br = nullptr;
  EXPECT(cmdih_bracket_json(s3, "eu", "a0", &br) == CMDIH_OK, "bracket json");
  EXPECT(contains(br, "\"terms\""), "bracket json carries PBW terms");
  EXPECT(contains(br, "\"w\""), "term entries name the group part");
  cmdih_string_free(br);
  cmdih_session_free(s3);

  // Lie classification at d = 4 through the session's a.
  cmdih_session* s4 = cmdih_session_new(4, "1", 2);
  EXPECT(cmdih_lie(s4, &json) == CMDIH_OK, "lie report");
  EXPECT(contains(json, "\"classification\": \"sl3\""), "sl3 classification at d = 4");
  cmdih_string_free(json);
  json = nullptr;
  EXPECT(cmdih_fixed_locus(s4, &json) == CMDIH_OK, "fixed locus report");
  EXPECT(contains(json, "\"status\": \"pass\""), "fixed locus status");
  EXPECT(contains(json, "dropped factor"), "discrepancy flag present");
  cmdih_string_free(json);
  json = nullptr;
  EXPECT(cmdih_sl2(s4, &json) == CMDIH_OK, "sl2 report");
  EXPECT(contains(json, "rho_equivariance"), "sl2 report lists the correspondence check");
  cmdih_string_free(json);
  cmdih_session_free(s4);

  if (failures == 0) std::printf("capi tests passed\n");
  return failures == 0 ? 0 : 1;
}
