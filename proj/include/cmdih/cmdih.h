/*
 * Copyright 2026 The cmdih authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the exact symbolic engine for the rational Cherednik
 * algebra of dihedral groups at equal parameters.
 *
 * All computation happens behind an opaque session handle carrying the
 * session parameters (d, the parameter mode for a, the truncation order of
 * the deformation variable). Results are returned as heap-allocated
 * NUL-terminated strings (JSON or plain text) that the caller releases with
 * cmdih_string_free. Functions return CMDIH_OK on success; on error a
 * human-readable message is retrievable with cmdih_session_error.
 */

#ifndef CMDIH_CMDIH_H
#define CMDIH_CMDIH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cmdih_session cmdih_session;

typedef enum cmdih_status {
  CMDIH_OK = 0,
  CMDIH_ERR_INVALID_ARGUMENT = 1,
  CMDIH_ERR_CHECK_FAILED = 2,
  CMDIH_ERR_INTERNAL = 3
} cmdih_status;

/* Library version string, static storage. */
const char* cmdih_version(void);

/*
 * Creates a session. d >= 2 is the half-order of the dihedral group;
 * a_value is an exact rational "p/q" or NULL to keep the parameter formal;
 * t_order >= 2 is the nilpotency order of the deformation variable
 * (2 = first-order deformation, enough for every Poisson bracket).
 * Returns NULL only on allocation failure; parameter errors produce a
 * non-NULL session whose creation error is readable via
 * cmdih_session_error and which fails every subsequent call.
 */
cmdih_session* cmdih_session_new(int d, const char* a_value, int t_order);
void cmdih_session_free(cmdih_session* s);

/* Last error message for this session; empty string when none. */
const char* cmdih_session_error(const cmdih_session* s);

/*
 * Runs verification suites and returns the JSON report (schema
 * "cm-report/1"). suites is a comma-separated subset of
 * psi,z0,zc,horreur,poisson,phi,lie,sl2,tau or "all". jobs >= 1 selects the
 * parallelism degree; max_terms bounds rendered witnesses; with_timing != 0
 * adds per-suite elapsed_ms fields (omitted by default so reports are
 * byte-identical across runs). Returns CMDIH_ERR_CHECK_FAILED when the
 * report contains a failing check (the JSON is still produced).
 */
cmdih_status cmdih_run_suites(cmdih_session* s, const char* suites, int jobs, int max_terms,
                              int with_timing, char** json_out);

/* Psi_i in the variables T, T1, T2; stateless. */
cmdih_status cmdih_psi_text(int i, char** text_out);

/*
 * Poisson bracket of two named generators of the center (q, Q, eu,
 * a0..ad), rendered in PBW normal form.
 */
cmdih_status cmdih_bracket(cmdih_session* s, const char* gen1, const char* gen2, char** text_out);

/* The same bracket as JSON, one entry per PBW term. */
cmdih_status cmdih_bracket_json(cmdih_session* s, const char* gen1, const char* gen2,
                                char** json_out);

/* Lie algebra at the cuspidal point: dimensions, structure constants,
 * classification. Needs d >= 4; uses the session's a (default 1). */
cmdih_status cmdih_lie(cmdih_session* s, char** json_out);

/* Fixed locus of the diagram automorphism: derived quadric, strata,
 * membership samples, and the displayed-form discrepancy flag. d >= 3. */
cmdih_status cmdih_fixed_locus(cmdih_session* s, char** json_out);

/* The Hermite-correspondence layer report. */
cmdih_status cmdih_sl2(cmdih_session* s, char** json_out);

void cmdih_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* CMDIH_CMDIH_H */
