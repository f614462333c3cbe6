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

#include "commpoly.hpp"
#include "dihedral.hpp"

using namespace cmdih;

TEST_CASE("reflections are involutions and generate rotations") {
  for (int d = 2; d <= 8; ++d) {
    CHECK(compose(reflection(d, 0), reflection(d, 0)) == identity(d));
    CHECK(compose(reflection(d, 1), reflection(d, 0)) == rotation(d, 1));  // ts = c
    CHECK(compose(rotation(d, 1), reflection(d, 0)) == reflection(d, 1));
    CHECK(compose(reflection(d, 0), rotation(d, 1)) == reflection(d, -1));
  }
}

TEST_CASE("composition matches matrices exhaustively") {
  for (int d = 2; d <= 8; ++d) dihedral_self_test(d);
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == rotation(2, 1));
  CHECK(longest_element(3) == reflection(3, 2));
  for (int d = 2; d <= 8; ++d)
    CHECK(compose(longest_element(d), longest_element(d)) == identity(d));
}

TEST_CASE("tau conjugation swaps the two generators") {
  for (int d = 3; d <= 8; ++d) {
    CHECK(tau_conjugate(reflection(d, 0)) == reflection(d, 1));
    CHECK(tau_conjugate(reflection(d, 1)) == reflection(d, 0));
    CHECK(tau_conjugate(reflection(d, 2)) == reflection(d, -1));
    for (const auto& g : all_elements(d)) {
      CHECK(tau_conjugate(tau_conjugate(g)) == g);
      for (const auto& h : all_elements(d))
        CHECK(tau_conjugate(compose(g, h)) == compose(tau_conjugate(g), tau_conjugate(h)));
    }
  }
}

TEST_CASE("the action is a group action on a monomial spanning set") {
  for (int d : {3, 4}) {
    Ring r{d, 1};
    std::vector<CommPoly> span;
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b)
        for (int g = 0; g <= 1; ++g)
          for (int h = 0; h <= 1; ++h)
            span.push_back(CommPoly::monomial(Mono4{a, b, g, h}, Scalar::one(r)));
    for (const auto& g : all_elements(d))
      for (const auto& h : all_elements(d))
        for (const auto& f : span)
          CHECK(act(g, act(h, f)) == act(compose(g, h), f));
  }
}

TEST_CASE("group element rendering") {
  CHECK(to_string(identity(5)) == "1");
  CHECK(to_string(rotation(5, 2)) == "c[2]");
  CHECK(to_string(reflection(5, 3)) == "s[3]");
}
