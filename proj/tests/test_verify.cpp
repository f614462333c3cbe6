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

#include "verify.hpp"

using namespace cmdih;

TEST_CASE("undeformed presentation holds and its mutation is caught") {
  for (int d = 2; d <= 5; ++d) CHECK(verify_z0_presentation(Ring{d, 1}).pass);
  CheckReport bad = verify_z0_presentation(Ring{4, 1}, Mutation::designated);
  CHECK(!bad.pass);
  CHECK(!bad.witnesses.empty());
  CHECK(!bad.witnesses.front().diff.empty());
}

TEST_CASE("undeformed poisson table holds and its mutation is caught") {
  for (int d = 2; d <= 5; ++d) CHECK(verify_poisson0_table(Ring{d, 1}).pass);
  CHECK(!verify_poisson0_table(Ring{3, 1}, Mutation::designated).pass);
}

TEST_CASE("centrality suite") {
  for (int d : {2, 3, 4}) {
    Session s(d);
    CHECK(verify_centrality(s).pass);
  }
}

TEST_CASE("deformed relations hold with symbolic a") {
  for (int d : {2, 3, 4}) {
    Session s(d);
    CHECK(verify_zc_relations(s).pass);
  }
  Session s3(3);
  CheckReport bad = verify_zc_relations(s3, Mutation::designated);
  CHECK(!bad.pass);
}

TEST_CASE("truncated product closed form") {
  Session s4(4);
  CHECK(verify_horreur(s4).pass);
  CHECK(!verify_horreur(s4, Mutation::designated).pass);
  Session s5(5);
  CHECK(verify_horreur_pair(s5, 1, 3).pass);
  CHECK_THROWS_AS(verify_horreur_pair(s5, 0, 3), std::invalid_argument);
}

TEST_CASE("phi decomposition closed cases") {
  Session s5(5);
  PhiDecomposition d01 = phi_decomposition(s5, 0, 1);
  CHECK(d01.report.pass);
  CHECK(d01.Pi == PsiPoly::monomial(0, 4, 0, Rat(10)));  // 2d q^{d-1}
  CHECK(d01.Phi.is_zero());
  PhiDecomposition d02 = phi_decomposition(s5, 0, 2);
  CHECK(d02.report.pass);
  CHECK(d02.Pi == PsiPoly::monomial(1, 3, 0, Rat(10)));  // 2d q^{d-2} eu
  CHECK(d02.Phi.is_zero());
  CHECK(!phi_decomposition(s5, 0, 1, Mutation::designated).report.pass);
}

TEST_CASE("phi decomposition at d = 4 has linear deformation parts") {
  Session s4(4);
  bool some_nonzero = false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      PhiDecomposition dec = phi_decomposition(s4, i, j);
      CHECK(dec.report.pass);
      if (!dec.Phi.is_zero()) {
        some_nonzero = true;
        CHECK(dec.Phi.is_homogeneous(1));
      }
      if (!dec.Pi.is_zero()) CHECK(dec.Pi.is_homogeneous(3));
    }
  CHECK(some_nonzero);
  // The (1,3) bracket carries weight zero, so its deformation part is a
  // multiple of eu; the exact value is pinned.
  PhiDecomposition d13 = phi_decomposition(s4, 1, 3);
  CHECK(d13.Phi == PsiPoly::monomial(1, 0, 0, Rat(16)));
}

TEST_CASE("deformed poisson table") {
  for (int d : {2, 3, 4}) {
    Session s(d);
    CHECK(verify_poisson_zc_table(s).pass);
  }
}

TEST_CASE("witness rendering truncates long polynomials") {
  Ring r{3, 1};
  CommPoly big;
  for (int i = 0; i < 60; ++i)
    big += CommPoly::monomial(Mono4{i % 9, i / 9, 0, 0}, Scalar::rational(Rat(i + 1), r));
  std::string s = render_truncated(big, 50);
  CHECK(s.find("more terms") != std::string::npos);
}
