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

#include "tau.hpp"

using namespace cmdih;

TEST_CASE("diagram automorphism on the center") {
  for (int d : {3, 4, 5, 6}) {
    Session s(d);
    CHECK(verify_tau_action(s).pass);
  }
}

TEST_CASE("tau on single variables") {
  Algebra A(4, 1, false);
  // tau(x) = sqrt(zeta)^-1 y: check via tau(x)·tau(x) relations by squaring:
  // tau(x^2) has the y^2 monomial with coefficient zeta^-1.
  HElement x2;
  x2.add_term(pack_hkey(0, pack_mono(Mono4{2, 0, 0, 0})), Scalar::one(A.ring()));
  HElement img = tau_act(A, x2);
  HElement want;
  want.add_term(pack_hkey(0, pack_mono(Mono4{0, 2, 0, 0})), Scalar::one(A.ring()).times_root(-2));
  CHECK(img == want);
  // Group part: tau(s_0) = s_1.
  HElement s0;
  s0.add_term(pack_hkey(wcode(reflection(4, 0)), 0), Scalar::one(A.ring()));
  HElement s1;
  s1.add_term(pack_hkey(wcode(reflection(4, 1)), 0), Scalar::one(A.ring()));
  CHECK(tau_act(A, s0) == s1);
}

TEST_CASE("fixed locus analysis derives the quadric with the factor of four") {
  for (int d : {3, 4, 5}) {
    FixedLocusReport fl = fixed_locus_analysis(d, Rat(1));
    CHECK(fl.report.pass);
    CHECK(fl.sampled_points >= 20);
    CHECK(!fl.discrepancy_note.empty());
    int n = d + 4;
    VarPoly expected = VarPoly::variable(n, 2) * VarPoly::variable(n, 2) -
                       (VarPoly::variable(n, 0) * VarPoly::variable(n, 1)).scale(Rat(4)) -
                       VarPoly::constant(n, Rat(d * d));
    CHECK(fl.derived_quadric == expected);
  }
  CHECK_THROWS_AS(fixed_locus_analysis(2, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(fixed_locus_analysis(5, Rat(0)), std::invalid_argument);
}

TEST_CASE("membership of a hand-checked quadric point") {
  // d = 4, a = 1: (q, Q, e) = (1, 5, 6) satisfies e^2 - 4qQ = 16.
  int d = 4;
  auto sys = calogero_moser_system(d, Rat(1));
  std::vector<Rat> pt(d + 4, Rat(0));
  pt[0] = Rat(1);
  pt[1] = Rat(5);
  pt[2] = Rat(6);
  for (const Rat& v : evaluate_point(pt, sys)) CHECK(v == 0);
  // The same point violates the shape with the dropped factor:
  // e^2 - qQ - d^2 a^2 = 36 - 5 - 16 != 0.
  CHECK(pt[2] * pt[2] - pt[0] * pt[1] - Rat(16) != 0);
}

TEST_CASE("poisson structure is tangent to the quadric") {
  for (int d : {3, 4, 5}) {
    Session s(d);
    CHECK(fixed_quadric_poisson_check(s).pass);
  }
  Session s4(4);
  CHECK(!fixed_quadric_poisson_check(s4, Mutation::designated).pass);
}
