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

#include <random>

#include "commpoly.hpp"

using namespace cmdih;

namespace {
CommPoly random_poly(const Ring& r, std::mt19937& rng, int max_deg = 2) {
  std::uniform_int_distribution<int> exp(0, max_deg), coef(-3, 3);
  CommPoly p;
  for (int t = 0; t < 4; ++t)
    p += CommPoly::monomial(Mono4{exp(rng), exp(rng), exp(rng), exp(rng)},
                            Scalar::rational(Rat(coef(rng)), r));
  return p;
}
}  // namespace

TEST_CASE("reflections negate their root form") {
  for (int d = 2; d <= 6; ++d) {
    Ring r{d, 1};
    for (int i = 0; i < d; ++i) {
      CommPoly f = CommPoly::variable(2, r, 1) +
                   CommPoly::monomial(Mono4{0, 0, 0, 1}, -Scalar::one(r).times_root(2L * i));
      CHECK(act(reflection(d, i), f) == -f);
    }
  }
}

TEST_CASE("named invariants are W-invariant") {
  for (int d = 2; d <= 6; ++d) {
    Ring r{d, 1};
    CHECK(is_w_invariant(gen_q(r), d));
    CHECK(is_w_invariant(gen_Q(r), d));
    CHECK(is_w_invariant(gen_eu0(r), d));
    for (int j = 0; j <= d; ++j) CHECK(is_w_invariant(gen_a0(j, r), d));
    CHECK(!is_w_invariant(CommPoly::variable(0, r, 1), d));
  }
}

TEST_CASE("generator shapes") {
  Ring r{5, 1};
  CHECK(gen_a0(0, r) == CommPoly::monomial(Mono4{5, 0, 0, 0}, Scalar::one(r)) +
                            CommPoly::monomial(Mono4{0, 5, 0, 0}, Scalar::one(r)));
  CHECK(gen_eu0_round(1, r) == gen_eu0(r));
  CHECK(gen_eu0_round(0, r) == CommPoly::constant(Scalar::rational(Rat(2), r)));
  CommPoly xX = CommPoly::monomial(Mono4{1, 0, 1, 0}, Scalar::one(r));
  CommPoly yY = CommPoly::monomial(Mono4{0, 1, 0, 1}, Scalar::one(r));
  for (int i = 0; i <= 6; ++i)
    CHECK(gen_eu0_square(i, r) * (xX - yY) == xX.pow(i + 1) - yY.pow(i + 1));
}

TEST_CASE("poisson bracket on the base generators") {
  Ring r{4, 1};
  CHECK(poisson_vv(gen_q(r), gen_Q(r)) == gen_eu0(r));
  CHECK(poisson_vv(CommPoly::variable(0, r, 1), CommPoly::variable(1, r, 1)).is_zero());
  CHECK(poisson_vv(CommPoly::variable(0, r, 1), CommPoly::variable(2, r, 1)) ==
        CommPoly::constant(Scalar::one(r)));
  for (int d = 2; d <= 6; ++d) {
    Ring rd{d, 1};
    for (int i = 0; i <= d; ++i)
      CHECK(poisson_vv(gen_eu0(rd), gen_a0(i, rd)) == gen_a0(i, rd).scale(Rat(2 * i - d)));
  }
}

TEST_CASE("poisson bracket is a biderivation with Jacobi") {
  Ring r{3, 1};
  std::mt19937 rng(777);
  for (int trial = 0; trial < 3; ++trial) {
    CommPoly f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
    CHECK(poisson_vv(f, g) == -poisson_vv(g, f));
    CHECK(poisson_vv(f, g * h) == poisson_vv(f, g) * h + g * poisson_vv(f, h));
    CommPoly jac = poisson_vv(f, poisson_vv(g, h)) + poisson_vv(g, poisson_vv(h, f)) +
                   poisson_vv(h, poisson_vv(f, g));
    CHECK(jac.is_zero());
    CHECK(poisson_vv(f + g, h) == poisson_vv(f, h) + poisson_vv(g, h));
  }
}

TEST_CASE("bracket of invariants is invariant") {
  for (int d : {3, 4}) {
    Ring r{d, 1};
    CommPoly b = poisson_vv(gen_a0(1, r), gen_a0(d - 1, r));
    CHECK(is_w_invariant(b, d));
  }
}

TEST_CASE("exact division") {
  Ring r{4, 1};
  for (int i = 0; i < 4; ++i) {
    CommPoly num = CommPoly::variable(2, r, 2) +
                   CommPoly::monomial(Mono4{0, 0, 0, 2}, -Scalar::one(r).times_root(4L * i));
    CommPoly den = CommPoly::variable(2, r, 1) +
                   CommPoly::monomial(Mono4{0, 0, 0, 1}, -Scalar::one(r).times_root(2L * i));
    CommPoly quot = CommPoly::variable(2, r, 1) +
                    CommPoly::monomial(Mono4{0, 0, 0, 1}, Scalar::one(r).times_root(2L * i));
    CHECK(divide_exact(num, den) == quot);
  }
  CommPoly xX = CommPoly::monomial(Mono4{1, 0, 1, 0}, Scalar::one(r));
  CommPoly yY = CommPoly::monomial(Mono4{0, 1, 0, 1}, Scalar::one(r));
  CHECK(divide_exact(xX * xX - yY * yY, xX - yY) == xX + yY);
  CHECK_THROWS_AS(divide_exact(CommPoly::variable(0, r, 1), CommPoly::variable(1, r, 1)),
                  ExactDivisionError);
}

TEST_CASE("sl2 determinant invariant") {
  for (int d = 2; d <= 8; ++d) {
    Ring r{d, 1};
    CommPoly disc = gen_eu0(r) * gen_eu0(r) - (gen_q(r) * gen_Q(r)).scale(Rat(4));
    CHECK(poisson_vv(gen_Q(r), disc).is_zero());
    CHECK(poisson_vv(gen_q(r), disc).is_zero());
    CHECK(poisson_vv(gen_eu0(r), disc).is_zero());
  }
}

TEST_CASE("rendering follows the lexicographic order") {
  Ring r{3, 1};
  CHECK(gen_eu0(r).to_string() == "x*X + y*Y");
  CHECK(gen_a0(0, r).to_string() == "x^3 + y^3");
  CHECK((-gen_q(r)).to_string() == "-x*y");
}
