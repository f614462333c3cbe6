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

#ifndef CMDIH_VERIFY_HPP
#define CMDIH_VERIFY_HPP

#include <string>
#include <vector>

#include "helement.hpp"

namespace cmdih {

/// One failed (or notable) relation instance: both sides and their difference
/// in canonical text form, truncated for readability.
struct Witness {
  std::string relation;
  std::string lhs;
  std::string rhs;
  std::string diff;
};

struct CheckReport {
  std::string name;
  int d = 0;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  void fail(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

/// Witness truncation: at most max_terms monomials are rendered.
std::string render_truncated(const CommPoly& p, int max_terms = 50);
std::string render_truncated(const HElement& h, int max_terms = 50);

enum class Mutation { none, designated };

/// Relations of the invariant-ring presentation, checked verbatim in
/// C[V x V*]: eu_0 a_{i,0} = q a_{i+1,0} + Q a_{i-1,0} and
/// a_{i-1,0} a_{j+1,0} - a_{i,0} a_{j,0} =
/// (eu_0^2 - 4qQ) q^{d-j-1} Q^{i-1} Psi_{j-i}(eu_0, q, Q).
/// The designated mutation replaces the 4 by 3.
CheckReport verify_z0_presentation(const Ring& r, Mutation m = Mutation::none);

/// The seven bracket families of the undeformed Poisson table, plus the
/// vanishing brackets against eu_0^2 - 4qQ. The designated mutation shifts
/// the {eu_0, a_{i,0}} weight by one.
CheckReport verify_poisson0_table(const Ring& r, Mutation m = Mutation::none);

/// Centrality of eu and every a_j with symbolic a, the agreement of the two
/// displayed orderings of a_j, and Trunc(eu^2) = x^2X^2 + y^2Y^2 + 2qQ + d a^2.
CheckReport verify_centrality(Session& s);

/// Relations of the deformed presentation, checked inside H_c with symbolic
/// a at t = 0. The designated mutation replaces d^2 a^2 by (d^2 - 1) a^2.
CheckReport verify_zc_relations(Session& s, Mutation m = Mutation::none);

/// The closed form of Trunc(a_{i-1} a_{j+1} - a_i a_j) for all admissible
/// (i,j). The designated mutation shifts the a^2 coefficient d(1+j-i-d).
CheckReport verify_horreur(Session& s, Mutation m = Mutation::none);
CheckReport verify_horreur_pair(Session& s, int i, int j, Mutation m = Mutation::none);

/// Decomposition {a_i, a_j} = Pi(eu, q, Q) + a^2 Phi(eu, q, Q) with Pi and
/// Phi homogeneous of degree d-1 and d-3: recovers both polynomials by exact
/// linear solves from the a = 0 and a^2 layers, then verifies the residual is
/// exactly zero in H_c. The designated mutation perturbs one Pi coefficient.
struct PhiDecomposition {
  PsiPoly Pi;
  PsiPoly Phi;
  CheckReport report;
};
PhiDecomposition phi_decomposition(Session& s, int i, int j, Mutation m = Mutation::none);

/// Brackets of Prop-style generator pairs via the first-order deformation:
/// {q,Q} = eu, {eu,q} = -2q, {eu,Q} = 2Q, {q,a_j} = j a_{j-1},
/// {eu,a_j} = (2j-d) a_j, {Q,a_j} = (j-d) a_{j+1}, {a_0,a_1} = 2d q^{d-1},
/// {a_0,a_2} = 2d q^{d-2} eu, and the three vanishing brackets against
/// eu^2 - 4qQ; antisymmetry, a Jacobi instance, and the coordinate formula
/// for {x, z} on z in {eu, a_0, a_1}.
CheckReport verify_poisson_zc_table(Session& s);

}  // namespace cmdih

#endif
