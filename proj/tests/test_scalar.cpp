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

#include "scalar.hpp"

using namespace cmdih;

namespace {
const Ring r4{4, 2};  // d = 4, first-order deformation
}

TEST_CASE("t is nilpotent at the configured order") {
  Scalar t = Scalar::t_power(1, r4);
  CHECK((t * t).is_zero());
  Ring deeper{4, 3};
  Scalar t3 = Scalar::t_power(1, deeper);
  CHECK(!(t3 * t3).is_zero());
  CHECK((t3 * t3 * t3).is_zero());
}

TEST_CASE("a stays formal") {
  Scalar a = Scalar::a_power(1, r4);
  Scalar t = Scalar::t_power(1, r4);
  CHECK((a + t) * (a - t) == Scalar::a_power(2, r4));
  CHECK(a * a == Scalar::a_power(2, r4));
}

TEST_CASE("truncation to order one sets t to zero") {
  Scalar v = Scalar::a_power(1, r4) + Scalar::t_power(1, r4) * Rat(7);
  Scalar v0 = v.with_t_order(1);
  CHECK(v0 == Scalar::a_power(1, Ring{4, 1}));
  CHECK(v.t_coefficient(1) == Scalar::rational(Rat(7), r4));
  CHECK(v.t_coefficient(0) == Scalar::a_power(1, r4));
}

TEST_CASE("specializing a is a ring homomorphism") {
  Scalar u = Scalar::a_power(2, r4) * Rat(3) + Scalar::rational(Rat(1, 2), r4) +
             Scalar::t_power(1, r4).times_a(1);
  Scalar v = Scalar::a_power(1, r4) - Scalar::rational(Rat(5), r4);
  Rat val(7, 3);
  CHECK((u * v).specialize_a(val) == u.specialize_a(val) * v.specialize_a(val));
  CHECK((u + v).specialize_a(val) == u.specialize_a(val) + v.specialize_a(val));
}

TEST_CASE("mixed sessions are rejected") {
  Ring r5{5, 2};
  CHECK_THROWS_AS(Scalar::one(r4) + Scalar::one(r5), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::one(r4) * Scalar::a_power(1, r5), std::invalid_argument);
}

TEST_CASE("inverses exist exactly for field coefficients") {
  Scalar z = Scalar::cyclotomic(Cyclotomic::root_power(8, 3), 2);
  CHECK(z * z.inverse() == Scalar::one(r4));
  CHECK_THROWS_AS(Scalar::a_power(1, r4).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero(r4).inverse(), std::domain_error);
}

TEST_CASE("a-degree bookkeeping") {
  Scalar u = Scalar::a_power(2, r4) + Scalar::a_power(3, r4);
  CHECK(u.min_a_exp() == 2);
  CHECK(u.max_a_exp() == 3);
  CHECK(u.shift_a_down(2) == Scalar::one(r4) + Scalar::a_power(1, r4));
  CHECK_THROWS_AS(u.shift_a_down(3), std::domain_error);
}

TEST_CASE("scalar rendering") {
  Scalar v = Scalar::a_power(2, r4) * Rat(-3, 2) + Scalar::one(r4);
  CHECK(v.to_string() == "1 - 3/2*a^2");
  CHECK(Scalar::zero(r4).to_string() == "0");
  CHECK(Scalar::t_power(1, r4).to_string() == "t");
}
