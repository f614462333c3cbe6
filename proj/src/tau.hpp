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

#ifndef CMDIH_TAU_HPP
#define CMDIH_TAU_HPP

#include "variety.hpp"
#include "verify.hpp"

namespace cmdih {

/// The diagram automorphism on H_c: variables map through the matrix with
/// rows (0, sqrt(zeta) | sqrt(zeta)^-1, 0), i.e. x -> sqrt(zeta)^-1 y,
/// y -> sqrt(zeta) x, X -> sqrt(zeta) Y, Y -> sqrt(zeta)^-1 X, and the group
/// part through conjugation s_i -> s_{1-i}, c^k -> c^{-k}.
HElement tau_act(const Algebra& A, const HElement& h);
CommPoly tau_act(const CommPoly& f, int d);

/// tau fixes q, Q, eu, negates every a_i, squares to the identity and
/// respects the product on sampled low-degree pairs; the relations transform
/// with sign -1 on the linear family and +1 on the quadratic family.
CheckReport verify_tau_action(Session& s);

/// The fixed locus analysis: substituting a_0 = ... = a_d = 0 into the
/// relation system kills the linear relations and leaves
/// (e^2 - 4qQ - d^2 a^2) q^{d-j-1} Q^{i-1} Psi_{j-i}(e, q, Q) = 0. The
/// quadric e^2 - 4qQ = d^2 a^2 is derived symbolically from the (1,1) and
/// (d-1,d-1) residuals, the q = Q = 0 stratum reduces to
/// (e^2 - d^2 a^2) e^{d-2} = 0, and at least the requested number of exact
/// rational points on the quadric are checked for membership. The analysis
/// also evaluates the shape e^2 - qQ - d^2 a^2 on the sampled points and
/// flags the coefficient mismatch instead of silently matching either form.
struct FixedLocusReport {
  CheckReport report;
  VarPoly derived_quadric;                // in the d+4 coordinates
  std::vector<std::string> residual_system;  // canonical text of the residuals
  std::string discrepancy_note;
  int sampled_points = 0;
};
FixedLocusReport fixed_locus_analysis(int d, const Rat& a_value, int min_samples = 20);

/// Brackets of q, Q, eu with eu^2 - 4qQ - d^2 a^2 all vanish, so the induced
/// Poisson structure is tangent to the derived quadric. The designated
/// mutation brackets eu^3 - q instead, which must fail.
CheckReport fixed_quadric_poisson_check(Session& s, Mutation m = Mutation::none);

}  // namespace cmdih

#endif
