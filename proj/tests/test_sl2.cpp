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

#include "sl2.hpp"

using namespace cmdih;

namespace {
SymElement gen(int d, int idx) { return SymElement::generator(d, idx); }
}  // namespace

TEST_CASE("derivation images of the generators") {
  int d = 5;
  for (int j = 0; j <= d; ++j) {
    CHECK(sl2_act(1, gen(d, sym_a(j))) == gen(d, sym_a(j)).scale(Rat(2 * j - d)));
    SymElement f = sl2_act(2, gen(d, sym_a(j)));
    CHECK(f == (j >= 1 ? gen(d, sym_a(j - 1)).scale(Rat(-j)) : SymElement(d)));
  }
  CHECK(sl2_act(0, gen(d, kSymQ)) == -gen(d, kSymEu));
  CHECK(sl2_act(0, gen(d, kSymQQ)).is_zero());
  CHECK(sl2_act(0, gen(d, kSymEu)) == gen(d, kSymQQ).scale(Rat(-2)));
}

TEST_CASE("operator relations on every generator") {
  for (int d : {3, 4, 5}) CHECK(verify_sl2_operator_relations(d).pass);
}

TEST_CASE("evaluation of star elements") {
  int d = 4;
  // a_0 * a_2 - a_1 * a_1 cancels under evaluation.
  SymElement z = gen(d, sym_a(0)) * gen(d, sym_a(2)) - gen(d, sym_a(1)) * gen(d, sym_a(1));
  CHECK(epsilon(2, d, z).empty());
  // q * Q evaluates to t^2 u^2 / 4.
  V2Poly qQ = epsilon(2, 2, gen(d, kSymQ) * gen(d, kSymQQ));
  REQUIRE(qQ.size() == 1);
  CHECK(qQ.begin()->first == std::make_pair(2, 2));
  CHECK(qQ.begin()->second == Rat(1, 4));
  // a_0 * a_d evaluates to t^d u^d.
  V2Poly ad = epsilon(2, d, gen(d, sym_a(0)) * gen(d, sym_a(d)));
  REQUIRE(ad.size() == 1);
  CHECK(ad.begin()->first == std::make_pair(d, d));
  CHECK(ad.begin()->second == Rat(1));
  CHECK_THROWS_AS(epsilon(2, d, gen(d, kSymQ) * gen(d, sym_a(1))), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(3, d, z), std::invalid_argument);
}

TEST_CASE("kernel family") {
  auto b2 = kernel_basis_2d(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == gen(2, sym_a(0)) * gen(2, sym_a(2)) - gen(2, sym_a(1)) * gen(2, sym_a(1)));
  CHECK(kernel_basis_2d(5).size() == 10);
  for (int d = 2; d <= 6; ++d) CHECK(verify_kernel_basis(d).pass);
  for (int d = 2; d <= 6; ++d) CHECK(verify_sym_sharp_basis(d).pass);
}

TEST_CASE("correspondence on the displayed cases") {
  // d = 4, (i,j) = (1,1): the image is q * q.
  SymElement z41 = gen(4, sym_a(0)) * gen(4, sym_a(2)) - gen(4, sym_a(1)) * gen(4, sym_a(1));
  CHECK(rho(4, z41) == gen(4, kSymQ) * gen(4, kSymQ));
  // d = 4, (i,j) = (1,2): q * eu.
  SymElement z42 = gen(4, sym_a(0)) * gen(4, sym_a(3)) - gen(4, sym_a(1)) * gen(4, sym_a(2));
  CHECK(rho(4, z42) == gen(4, kSymQ) * gen(4, kSymEu));
  // d = 5, (i,j) = (1,3): q * (eu*eu - q*Q).
  SymElement z53 = gen(5, sym_a(0)) * gen(5, sym_a(4)) - gen(5, sym_a(1)) * gen(5, sym_a(3));
  CHECK(rho(5, z53) ==
        gen(5, kSymQ) * (gen(5, kSymEu) * gen(5, kSymEu) - gen(5, kSymQ) * gen(5, kSymQQ)));
  // Linearity across the span and rejection outside it.
  SymElement sum = z41 + z42.scale(Rat(3));
  CHECK(rho(4, sum) == rho(4, z41) + rho(4, z42).scale(Rat(3)));
  CHECK_THROWS_AS(rho(4, gen(4, sym_a(0)) * gen(4, sym_a(0))), std::invalid_argument);
}

TEST_CASE("equivariance of the correspondence") {
  for (int d = 2; d <= 5; ++d) CHECK(verify_rho_equivariance(d).pass);
  CHECK(!verify_rho_equivariance(4, Mutation::designated).pass);
}

TEST_CASE("intrinsic form of the linear relations") {
  for (int d = 2; d <= 5; ++d) CHECK(verify_zi_intrinsic(d).pass);
  CHECK(!verify_zi_intrinsic(4, Mutation::designated).pass);
}

TEST_CASE("bracket oracle ties the derivation table to the center") {
  Session s(3);
  CHECK(verify_sl2_oracle(s).pass);
}

TEST_CASE("binomial reciprocity of the symmetric power dimensions") {
  CHECK(verify_hermite_dimensions(6).pass);
}

TEST_CASE("moment matrix") {
  std::vector<Rat> pt{Rat(3), Rat(5), Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0)};
  auto m = moment(pt);
  CHECK(m[0] == Rat(-2));
  CHECK(m[1] == Rat(5));
  CHECK(m[2] == Rat(-3));
  CHECK(m[3] == Rat(2));
  CHECK(m[0] + m[3] == 0);
  CHECK(m[0] * m[3] - m[1] * m[2] == -pt[2] * pt[2] + pt[0] * pt[1]);
}
