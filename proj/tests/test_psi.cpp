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

#include <doctest.h>

#include "psipoly.hpp"

using namespace cmdih;

TEST_CASE("seeds and one recursion step") {
  CHECK(psi(0) == PsiPoly::monomial(0, 0, 0, Rat(1)));
  CHECK(psi(1) == PsiPoly::monomial(1, 0, 0, Rat(1)));
  CHECK(psi(2) == PsiPoly::monomial(2, 0, 0, Rat(1)) - PsiPoly::monomial(0, 1, 1, Rat(1)));
  CHECK(psi(2).to_string() == "T^2 - T1*T2");
}

TEST_CASE("restriction to the T axis") {
  for (int k = 0; k <= 10; ++k) {
    CHECK(psi(k).restrict_T_axis() == PsiPoly::monomial(k, 0, 0, Rat(1)));
  }
}

TEST_CASE("degree, monicity and integrality") {
  for (int i = 0; i <= 12; ++i) {
    CHECK(psi(i).is_homogeneous(i));
    CHECK(psi(i).is_monic_in_T(i));
    CHECK(psi(i).has_integer_coefficients());
  }
}

TEST_CASE("closed form by exact division") {
  Ring r{3, 1};
  for (int i = 0; i <= 8; ++i) CHECK(verify_psi_closed_form(i, r));
  CHECK(!verify_psi_closed_form(3, r, true));
}

TEST_CASE("derivative identities") {
  for (int i = 1; i <= 10; ++i) CHECK(verify_psi_derivatives(i));
  CHECK(!verify_psi_derivatives(3, true));
}

TEST_CASE("degree-k family coordinates") {
  // T has the single coordinate 1 on Psi_1 at k = 1.
  auto c1 = basis_coordinates(PsiPoly::monomial(1, 0, 0, Rat(1)), 1);
  CHECK(c1.size() == 1);
  CHECK(c1.at({0, 1}) == 1);
  // T'T'' is exactly the (i,j) = (1,1) member at k = 2.
  auto c2 = basis_coordinates(PsiPoly::monomial(0, 1, 1, Rat(1)), 2);
  CHECK(c2.size() == 1);
  CHECK(c2.at({1, 1}) == 1);
  CHECK_THROWS_AS(
      basis_coordinates(PsiPoly::monomial(1, 0, 0, Rat(1)) + PsiPoly::monomial(2, 0, 0, Rat(1)),
                        2),
      std::invalid_argument);
}

TEST_CASE("family has full rank in every degree used") {
  for (int k = 0; k <= 8; ++k) CHECK(psi_basis_full_rank(k));
}

TEST_CASE("substitution into the invariants is injective") {
  Ring r{4, 1};
  for (int k = 1; k <= 8; ++k) CHECK(psi_substitution_injective(k, r));
}

TEST_CASE("solver recovers polynomials from their substitution") {
  Ring r{4, 1};
  PsiPoly p = psi(3) + PsiPoly::monomial(1, 1, 1, Rat(-7, 2));
  CommPoly target = substitute(p, gen_eu0(r), gen_q(r), gen_Q(r), r);
  auto back = solve_in_eu_q_Q(target, 3, r);
  REQUIRE(back.has_value());
  CHECK(*back == p);
  // Inconsistent target: x alone is not a polynomial in the invariants.
  CHECK(!solve_in_eu_q_Q(CommPoly::variable(0, r, 1), 1, r).has_value());
}
