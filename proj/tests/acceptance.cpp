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

// End-to-end acceptance run. Prints one pass/fail line per criterion and
// exits nonzero if any criterion fails. Everything is exact; there are no
// tolerances anywhere, only structural equalities and the stated time bound
// on the full d = 5 run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "sl2.hpp"
#include "suites.hpp"
#include "tau.hpp"
#include "variety.hpp"
#include "verify.hpp"

using namespace cmdih;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++failures;
  std::printf("[%2d] %s %s (%.1fs)%s\n", n, ok ? "PASS" : "FAIL", name.c_str(), secs,
              note.c_str());
  std::fflush(stdout);
}

// Sessions are shared across criteria so the memoized rewriting is reused.
std::map<int, Session*>& sessions() {
  static std::map<int, Session*> s;
  return s;
}

Session& session(int d) {
  auto& s = sessions();
  auto it = s.find(d);
  if (it == s.end()) it = s.emplace(d, new Session(d)).first;
  return *it->second;
}

}  // namespace

int main() {
  criterion(1, "psi family: closed form, derivative identities, T-axis, basis ranks", [] {
    Ring r{3, 1};
    for (int i = 0; i <= 8; ++i)
      if (!verify_psi_closed_form(i, r)) return false;
    for (int i = 1; i <= 8; ++i)
      if (!verify_psi_derivatives(i)) return false;
    for (int k = 0; k <= 10; ++k)
      if (psi(k).restrict_T_axis() != PsiPoly::monomial(k, 0, 0, Rat(1))) return false;
    for (int k = 0; k <= 8; ++k)
      if (!psi_basis_full_rank(k)) return false;
    return true;
  });

  criterion(2, "undeformed presentation and the seven bracket families, d <= 8", [] {
    for (int d = 2; d <= 8; ++d) {
      Ring r{d, 1};
      if (!verify_z0_presentation(r).pass) return false;
      if (!verify_poisson0_table(r).pass) return false;
    }
    return true;
  });

  criterion(3, "central elements with symbolic a and Trunc(eu^2), d <= 6", [] {
    for (int d = 2; d <= 6; ++d)
      if (!verify_centrality(session(d)).pass) return false;
    return true;
  });

  criterion(4, "deformed presentation relations and truncated products, d <= 6", [] {
    for (int d = 2; d <= 6; ++d) {
      if (!verify_zc_relations(session(d)).pass) return false;
      if (!verify_horreur(session(d)).pass) return false;
    }
    return true;
  });

  criterion(5, "deformation bracket table including {a_0,a_1}, {a_0,a_2}, d <= 6", [] {
    for (int d = 2; d <= 6; ++d)
      if (!verify_poisson_zc_table(session(d)).pass) return false;
    return true;
  });

  criterion(6, "bracket decomposition with exact degrees, d in {4,5,6}", [] {
    for (int d : {4, 5, 6}) {
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          PhiDecomposition dec = phi_decomposition(session(d), i, j);
          if (!dec.report.pass) return false;
          if (!dec.Pi.is_zero() && !dec.Pi.is_homogeneous(d - 1)) return false;
          if (!dec.Phi.is_zero() && !dec.Phi.is_homogeneous(d - 3)) return false;
        }
    }
    return true;
  });

  criterion(7, "cuspidal point: tangent dimension, Lie table, classification", [] {
    for (int d : {4, 5, 6}) {
      if (tangent_dim_origin(d, Rat(1)) != d + 4) return false;
      LieTable t = lie_algebra_at_origin(session(d), Rat(1));
      if (!verify_lie_table(t).pass) return false;
      LieClassification c = classify_lie(t);
      if (!c.report.pass) return false;
      std::string expected = d == 4 ? "sl3 (dim 8, Killing rank 8)"
                                    : "sl2 + irreducible abelian (dim " + std::to_string(d + 1) +
                                          ")";
      if (c.description != expected) return false;
    }
    return true;
  });

  criterion(8, "correspondence layer: kernel basis, equivariance, intrinsic form", [] {
    for (int d = 2; d <= 6; ++d) {
      if (!verify_kernel_basis(d).pass) return false;
      if (!verify_sym_sharp_basis(d).pass) return false;
      if (!verify_rho_equivariance(d).pass) return false;
      if (!verify_zi_intrinsic(d).pass) return false;
    }
    for (int d = 2; d <= 5; ++d)
      if (!verify_sl2_oracle(session(d)).pass) return false;
    return verify_hermite_dimensions(6).pass;
  });

  criterion(9, "diagram automorphism and its fixed locus, d <= 6", [] {
    for (int d = 2; d <= 6; ++d)
      if (!verify_tau_action(session(d)).pass) return false;
    for (int d = 3; d <= 6; ++d) {
      FixedLocusReport fl = fixed_locus_analysis(d, Rat(1), 20);
      if (!fl.report.pass) return false;
      if (fl.sampled_points < 20) return false;
      if (fl.discrepancy_note.empty()) return false;
      if (!fixed_quadric_poisson_check(session(d)).pass) return false;
    }
    return true;
  });

  criterion(10, "negative controls: ten designated mutations all fail", [] {
    int caught = 0;
    caught += !verify_z0_presentation(Ring{4, 1}, Mutation::designated).pass;
    caught += !verify_poisson0_table(Ring{4, 1}, Mutation::designated).pass;
    caught += !verify_zc_relations(session(4), Mutation::designated).pass;
    caught += !verify_horreur(session(4), Mutation::designated).pass;
    caught += !phi_decomposition(session(5), 0, 1, Mutation::designated).report.pass;
    caught += !verify_psi_closed_form(3, Ring{4, 1}, true);
    caught += !verify_psi_derivatives(3, true);
    caught += !verify_rho_equivariance(4, Mutation::designated).pass;
    caught += !verify_zi_intrinsic(4, Mutation::designated).pass;
    caught += !fixed_quadric_poisson_check(session(4), Mutation::designated).pass;
    if (caught != 10) std::fprintf(stderr, "only %d of 10 mutations caught\n", caught);
    return caught == 10;
  });

  criterion(11, "full d = 5 run under the time bound with byte-identical reports", [] {
    const char* cli = CMDIH_CLI_PATH;
    std::string out1 = "acceptance_report_1.json", out2 = "acceptance_report_2.json";
    auto run = [&](const std::string& out) {
      std::string cmd = std::string(cli) +
                        " verify --d 5 --suite all --quiet --out " + out;
      auto start = std::chrono::steady_clock::now();
      int rc = std::system(cmd.c_str());
      double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return std::make_pair(rc, secs);
    };
    auto [rc1, t1] = run(out1);
    auto [rc2, t2] = run(out2);
    if (rc1 != 0 || rc2 != 0) {
      std::fprintf(stderr, "cli exit codes %d, %d\n", rc1, rc2);
      return false;
    }
    if (t1 >= 120.0 || t2 >= 120.0) {
      std::fprintf(stderr, "run took %.1fs / %.1fs, bound is 120s\n", t1, t2);
      return false;
    }
    auto slurp = [](const std::string& path) {
      std::ifstream f(path, std::ios::binary);
      std::ostringstream ss;
      ss << f.rdbuf();
      return ss.str();
    };
    std::string r1 = slurp(out1), r2 = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (r1.empty() || r1 != r2) {
      std::fprintf(stderr, "reports differ or are empty\n");
      return false;
    }
    if (r1.find("\"all_pass\": true") == std::string::npos) return false;
    return true;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
