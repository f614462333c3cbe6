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

#include "cyclotomic.hpp"

using namespace cmdih;

TEST_CASE("euler phi of the session orders") {
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(14) == 6);
  CHECK(euler_phi(16) == 8);
}

TEST_CASE("roots of unity have the right order") {
  for (int d = 2; d <= 8; ++d) {
    int m = 2 * d;
    // zeta = zeta_{2d}^2 is a primitive d-th root.
    CHECK(Cyclotomic::root_power(m, 2 * d) == Cyclotomic::one(m));
    CHECK(Cyclotomic::root_power(m, 0) == Cyclotomic::one(m));
    Cyclotomic z = Cyclotomic::root_power(m, 2);
    Cyclotomic pw = Cyclotomic::one(m);
    for (int k = 1; k < d; ++k) {
      pw = pw * z;
      CHECK(pw != Cyclotomic::one(m));
    }
    CHECK(pw * z == Cyclotomic::one(m));
  }
}

TEST_CASE("geometric sums of d-th roots vanish") {
  for (int d = 2; d <= 8; ++d) {
    int m = 2 * d;
    Cyclotomic sum = Cyclotomic::zero(m);
    for (int i = 0; i < d; ++i) sum = sum + Cyclotomic::root_power(m, 2 * i);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("zeta_8 squared twice is -1") {
  Cyclotomic z2 = Cyclotomic::root_power(8, 2);
  CHECK(z2 * z2 == Cyclotomic::rational(Rat(-1), 8));
}

TEST_CASE("half root squares to the embedded root") {
  for (int d = 2; d <= 8; ++d) {
    int m = 2 * d;
    Cyclotomic half = Cyclotomic::root_power(m, 1);
    CHECK(half * half == Cyclotomic::root_power(m, 2));
  }
}

TEST_CASE("minimal polynomial annihilates the generator") {
  for (int m : {4, 6, 8, 10, 12, 14, 16}) {
    const auto& phi = cyclotomic_polynomial(m);
    Cyclotomic acc = Cyclotomic::zero(m);
    for (size_t k = 0; k < phi.size(); ++k)
      acc = acc + Cyclotomic::root_power(m, static_cast<long>(k)) * phi[k];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("field inverses") {
  for (int m : {8, 10, 12}) {
    Cyclotomic u = Cyclotomic::root_power(m, 3) + Cyclotomic::rational(Rat(2), m);
    CHECK(u * u.inverse() == Cyclotomic::one(m));
    Cyclotomic z = Cyclotomic::root_power(m, 1);
    CHECK(z * z.inverse() == Cyclotomic::one(m));
    CHECK_THROWS_AS(Cyclotomic::zero(m).inverse(), std::domain_error);
  }
}

TEST_CASE("canonical form makes equality structural") {
  // zeta_4^2 = -1 as a reduced residue.
  CHECK(Cyclotomic::root_power(4, 2) == Cyclotomic::rational(Rat(-1), 4));
  CHECK(Cyclotomic::root_power(12, 13) == Cyclotomic::root_power(12, 1));
}

TEST_CASE("rendering is deterministic and ascending") {
  Cyclotomic v = Cyclotomic::root_power(8, 2) * Rat(-1, 2) + Cyclotomic::one(8);
  CHECK(v.to_string() == "1 - 1/2*z^2");
  CHECK(Cyclotomic::zero(8).to_string() == "0");
}
