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

#include "helement.hpp"

using namespace cmdih;

namespace {
HElement reflection_sum(const Algebra& A, long zmult, const Scalar& coef) {
  HElement h;
  for (int i = 0; i < A.d(); ++i)
    h.add_term(pack_hkey(wcode(reflection(A.d(), i)), 0), coef.times_root(2L * i * zmult));
  return h;
}
}  // namespace

TEST_CASE("products against the displayed commutation rules") {
  Algebra A(4, 1, false);
  Ring r = A.ring();
  Scalar a = Scalar::a_power(1, r);
  // X x = x X + a sum_i s_i at t = 0.
  HElement got = A.mul(A.variable(2), A.variable(0));
  HElement want;
  want.add_term(pack_hkey(0, pack_mono(Mono4{1, 0, 1, 0})), Scalar::one(r));
  want += reflection_sum(A, 0, a);
  CHECK(got == want);
  // s_0 x = y s_0.
  HElement lhs = A.mul(A.from_group(reflection(4, 0)), A.variable(0));
  HElement rhs;
  rhs.add_term(pack_hkey(wcode(reflection(4, 0)), pack_mono(Mono4{0, 1, 0, 0})), Scalar::one(r));
  CHECK(lhs == rhs);
}

TEST_CASE("the first-order term appears at t_order 2") {
  Algebra A(4, 2, false);
  Ring r = A.ring();
  HElement got = A.mul(A.variable(2), A.variable(0));
  HElement want;
  want.add_term(pack_hkey(0, pack_mono(Mono4{1, 0, 1, 0})), Scalar::one(r));
  want.add_term(pack_hkey(0, 0), -Scalar::t_power(1, r));
  want += reflection_sum(A, 0, Scalar::a_power(1, r));
  CHECK(got == want);
}

TEST_CASE("base commutators") {
  Algebra A(5, 1, false);
  Scalar a = Scalar::a_power(1, A.ring());
  CHECK(A.commutator(A.variable(0), A.variable(3)) == reflection_sum(A, -1, a));
  CHECK(A.commutator(A.variable(1), A.variable(2)) == reflection_sum(A, 1, a));
  CHECK(A.commutator(A.variable(0), A.variable(1)).is_zero());
  CHECK(A.commutator(A.variable(2), A.variable(3)).is_zero());
}

TEST_CASE("truncation map") {
  Algebra A(4, 1, false);
  Ring r = A.ring();
  CHECK(A.trunc(A.euler()) == gen_eu0(r));
  CHECK(A.trunc(A.from_group(reflection(4, 0))).is_zero());
  CommPoly t2 = A.trunc(A.mul(A.euler(), A.euler()));
  CommPoly want = CommPoly::monomial(Mono4{2, 0, 2, 0}, Scalar::one(r)) +
                  CommPoly::monomial(Mono4{0, 2, 0, 2}, Scalar::one(r)) +
                  CommPoly::monomial(Mono4{1, 1, 1, 1}, Scalar::rational(Rat(2), r)) +
                  CommPoly::constant(Scalar::a_power(2, r) * Rat(4));
  CHECK(t2 == want);
}

TEST_CASE("centrality") {
  for (int d = 2; d <= 5; ++d) {
    Algebra A(d, 1, false);
    CHECK(A.is_central(A.euler()));
    CHECK(A.is_central(A.central_q()));
    CHECK(A.is_central(A.central_Q()));
    for (int j = 0; j <= d; ++j) CHECK(A.is_central(A.central_a(j)));
    CHECK(!A.is_central(A.variable(0)));
    CHECK(!A.is_central(A.from_group(reflection(d, 0))));
  }
}

TEST_CASE("boundary central elements have no reflection part") {
  for (int d : {3, 4, 5}) {
    Algebra A(d, 1, false);
    Ring r = A.ring();
    CHECK(A.central_a(0) == A.from_comm(gen_a0(0, r)));
    CHECK(A.central_a(d) == A.from_comm(gen_a0(d, r)));
    for (int j = 0; j <= d; ++j) CHECK(A.trunc(A.central_a(j)) == gen_a0(j, r));
  }
}

TEST_CASE("euler at a = 0 is the quadratic part") {
  Algebra A(4, 1, false);
  CHECK(A.euler().specialize_a(Rat(0)) == A.from_comm(gen_eu0(A.ring())));
}

TEST_CASE("demazure quotients match their closed forms") {
  for (int d : {3, 5}) {
    Algebra A(d, 1, false);
    Ring r = A.ring();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j <= d; ++j) {
        CommPoly lo;
        for (int k = 0; k <= d - j - 1; ++k)
          lo += CommPoly::monomial(Mono4{d - j - 1 - k, k, 0, 0},
                                   Scalar::one(r).times_root(-2L * i * k));
        CommPoly up;
        for (int k = 0; k <= j - 1; ++k)
          up += CommPoly::monomial(Mono4{0, 0, j - 1 - k, k},
                                   Scalar::one(r).times_root(2L * i * k));
        CHECK(A.gamma_lower(i, j) == lo);
        CHECK(A.gamma_upper(i, j) == up);
      }
  }
}

TEST_CASE("poisson brackets of the canonical generators") {
  Session s(4);
  Algebra& B = s.h1();
  CHECK(s.poisson(B.central_q(), B.central_Q()) == B.euler());
  for (int j = 0; j <= 4; ++j)
    CHECK(s.poisson(B.euler(), B.central_a(j)) == B.central_a(j).scale(Rat(2 * j - 4)));
  CHECK(s.poisson(B.central_a(0), B.central_a(1)) == B.mul_qQ(B.one(), 3, 0).scale(Rat(8)));
  CHECK_THROWS_AS(s.poisson(B.variable(0), B.central_q()), NonCentralError);
}

TEST_CASE("rewriting never raises the total degree") {
  Algebra A(3, 2, false);
  Ring r = A.ring();
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> exp(0, 2), pick(0, 5), coef(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    HElement u, v;
    for (int t = 0; t < 2; ++t) {
      int g = pick(rng);
      GroupElement w = g < 3 ? rotation(3, g) : reflection(3, g - 3);
      u.add_term(pack_hkey(wcode(w), pack_mono(Mono4{exp(rng), exp(rng), exp(rng), exp(rng)})),
                 Scalar::rational(Rat(coef(rng)), r));
      g = pick(rng);
      w = g < 3 ? rotation(3, g) : reflection(3, g - 3);
      v.add_term(pack_hkey(wcode(w), pack_mono(Mono4{exp(rng), exp(rng), exp(rng), exp(rng)})),
                 Scalar::rational(Rat(coef(rng)), r));
    }
    HElement p = A.mul(u, v);
    if (!p.is_zero()) CHECK(p.total_degree() <= u.total_degree() + v.total_degree());
  }
}

TEST_CASE("session startup self-tests run clean") {
  // Construction includes the exhaustive convention checks.
  CHECK_NOTHROW(Session(2));
  CHECK_NOTHROW(Session(5));
}
