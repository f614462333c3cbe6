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

#include "verify.hpp"

#include <stdexcept>

namespace cmdih {

namespace {

// Keep only the first max_terms rendered monomials.
std::string truncate_terms(const std::string& s, size_t term_count, int max_terms) {
  if (static_cast<int>(term_count) <= max_terms) return s;
  // Cut at the max_terms-th top-level " + " / " - " separator.
  int seen = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t plus = s.find(" + ", pos);
    size_t minus = s.find(" - ", pos);
    size_t next = std::min(plus, minus);
    if (next == std::string::npos) break;
    if (++seen == max_terms)
      return s.substr(0, next) + " + ... (" + std::to_string(term_count - max_terms) +
             " more terms)";
    pos = next + 3;
  }
  return s;
}

}  // namespace

std::string render_truncated(const CommPoly& p, int max_terms) {
  return truncate_terms(p.to_string(), p.term_count(), max_terms);
}

std::string render_truncated(const HElement& h, int max_terms) {
  return truncate_terms(h.to_string(), h.terms.size(), max_terms);
}

CheckReport verify_z0_presentation(const Ring& r, Mutation m) {
  int d = r.d;
  CheckReport rep{"z0_presentation", d};
  if (d < 2) throw std::invalid_argument("z0 presentation needs d >= 2");
  CommPoly q = gen_q(r), Q = gen_Q(r), eu0 = gen_eu0(r);
  Rat disc_coef = m == Mutation::designated ? Rat(3) : Rat(4);
  CommPoly disc = eu0 * eu0 - (q * Q).scale(disc_coef);
  for (int i = 1; i <= d - 1; ++i) {
    CommPoly lhs = eu0 * gen_a0(i, r);
    CommPoly rhs = q * gen_a0(i + 1, r) + Q * gen_a0(i - 1, r);
    if (lhs != rhs)
      rep.fail({"euler relation i=" + std::to_string(i), render_truncated(lhs),
                render_truncated(rhs), render_truncated(lhs - rhs)});
  }
  for (int i = 1; i <= d - 1; ++i) {
    for (int j = i; j <= d - 1; ++j) {
      CommPoly lhs = gen_a0(i - 1, r) * gen_a0(j + 1, r) - gen_a0(i, r) * gen_a0(j, r);
      CommPoly rhs = disc *
                     CommPoly::monomial(Mono4{d - j - 1, d - j - 1, i - 1, i - 1}, Scalar::one(r)) *
                     substitute(psi(j - i), eu0, q, Q, r);
      if (lhs != rhs)
        rep.fail({"quadratic relation (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                  render_truncated(lhs), render_truncated(rhs), render_truncated(lhs - rhs)});
    }
  }
  return rep;
}

CheckReport verify_poisson0_table(const Ring& r, Mutation m) {
  int d = r.d;
  CheckReport rep{"poisson0_table", d};
  CommPoly q = gen_q(r), Q = gen_Q(r), eu0 = gen_eu0(r);
  auto expect = [&rep](const std::string& id, const CommPoly& got, const CommPoly& want) {
    if (got != want)
      rep.fail({id, render_truncated(got), render_truncated(want), render_truncated(got - want)});
  };
  expect("{q,Q}=eu0", poisson_vv(q, Q), eu0);
  expect("{eu0,q}=-2q", poisson_vv(eu0, q), q.scale(Rat(-2)));
  expect("{eu0,Q}=2Q", poisson_vv(eu0, Q), Q.scale(Rat(2)));
  int weight_shift = m == Mutation::designated ? 1 : 0;
  for (int i = 0; i <= d; ++i) {
    CommPoly ai = gen_a0(i, r);
    expect("{eu0,a_[" + std::to_string(i) + ",0]}", poisson_vv(eu0, ai),
           ai.scale(Rat(2 * i - d + weight_shift)));
    CommPoly qa = i >= 1 ? gen_a0(i - 1, r).scale(Rat(i)) : CommPoly();
    expect("{q,a_[" + std::to_string(i) + ",0]}", poisson_vv(q, ai), qa);
    CommPoly Qa = i <= d - 1 ? gen_a0(i + 1, r).scale(Rat(i - d)) : CommPoly();
    expect("{Q,a_[" + std::to_string(i) + ",0]}", poisson_vv(Q, ai), Qa);
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      CommPoly want;
      if (j * (d - i) != 0)
        want += CommPoly::monomial(Mono4{d - j, d - j, i, i}, Scalar::one(r))
                    .scale(Rat(j * (d - i))) *
                gen_eu0_round(j - i - 1, r);
      if (i * (d - j) != 0)
        want += -(CommPoly::monomial(Mono4{d - j - 1, d - j - 1, i - 1, i - 1}, Scalar::one(r))
                      .scale(Rat(i * (d - j))) *
                  gen_eu0_round(j - i + 1, r));
      expect("{a_[" + std::to_string(i) + ",0],a_[" + std::to_string(j) + ",0]}",
             poisson_vv(gen_a0(i, r), gen_a0(j, r)), want);
    }
  }
  CommPoly disc = eu0 * eu0 - (q * Q).scale(Rat(4));
  expect("{Q,eu0^2-4qQ}=0", poisson_vv(Q, disc), CommPoly());
  expect("{q,eu0^2-4qQ}=0", poisson_vv(q, disc), CommPoly());
  expect("{eu0,eu0^2-4qQ}=0", poisson_vv(eu0, disc), CommPoly());
  return rep;
}

CheckReport verify_centrality(Session& s) {
  int d = s.d();
  CheckReport rep{"centrality", d};
  Algebra& A = s.h0();
  Ring r = A.ring();
  if (!A.is_central(A.euler()))
    rep.fail({"euler element centrality", render_truncated(A.euler()), "central", ""});
  for (int j = 0; j <= d; ++j) {
    HElement aj = A.central_a(j);
    if (!A.is_central(aj))
      rep.fail({"centrality of a_" + std::to_string(j), render_truncated(aj), "central", ""});
  }
  // Both displayed orderings of a_j coincide: gamma s_i Gamma versus
  // gamma Gamma s_i, the latter normalized through the engine.
  for (int j = 0; j <= d; ++j) {
    HElement direct = A.central_a(j);
    HElement reordered;
    reordered.add_term(pack_hkey(0, pack_mono(Mono4{d - j, 0, 0, j})), Scalar::one(r));
    reordered.add_term(pack_hkey(0, pack_mono(Mono4{0, d - j, j, 0})), Scalar::one(r));
    for (int i = 0; i < d; ++i) {
      CommPoly lo = A.gamma_lower(i, j), up = A.gamma_upper(i, j);
      if (lo.is_zero() || up.is_zero()) continue;
      HElement prod = A.mul(A.mul(A.from_comm(lo), A.from_comm(up)),
                            A.from_group(reflection(d, i)));
      reordered += prod.scale(-Scalar::a_power(1, r).times_root(-2L * i * j));
    }
    if (direct != reordered)
      rep.fail({"orderings of a_" + std::to_string(j), render_truncated(direct),
                render_truncated(reordered), render_truncated(direct - reordered)});
  }
  // Trunc(eu^2) = x^2X^2 + y^2Y^2 + 2qQ + d a^2.
  CommPoly lhs = A.trunc(A.mul(A.euler(), A.euler()));
  CommPoly rhs = CommPoly::monomial(Mono4{2, 0, 2, 0}, Scalar::one(r)) +
                 CommPoly::monomial(Mono4{0, 2, 0, 2}, Scalar::one(r)) +
                 CommPoly::monomial(Mono4{1, 1, 1, 1}, Scalar::rational(Rat(2), r)) +
                 CommPoly::constant(Scalar::a_power(2, r) * Rat(d));
  if (lhs != rhs)
    rep.fail({"Trunc(eu^2)", render_truncated(lhs), render_truncated(rhs),
              render_truncated(lhs - rhs)});
  // Bare generators are not central (negative sanity inside the suite).
  if (A.is_central(A.variable(0)))
    rep.fail({"x is not central", "x", "non-central", ""});
  return rep;
}

namespace {
// (eu^2 - 4qQ - d^2 a^2) as an element of H_c, with optional mutation of the
// d^2 coefficient.
HElement discriminant_element(Algebra& A, Mutation m) {
  int d = A.d();
  Ring r = A.ring();
  Rat dd = m == Mutation::designated ? Rat(d * d - 1) : Rat(d * d);
  HElement e = A.mul(A.euler(), A.euler());
  e += A.mul_qQ(A.one(), 1, 1).scale(Rat(-4));
  e += A.one().scale(-(Scalar::a_power(2, r) * dd));
  return e;
}
}  // namespace

CheckReport verify_zc_relations(Session& s, Mutation m) {
  int d = s.d();
  CheckReport rep{"zc_relations", d};
  Algebra& A = s.h0();
  std::vector<HElement> a;
  for (int j = 0; j <= d; ++j) a.push_back(A.central_a(j));
  HElement eu = A.euler();
  for (int i = 1; i <= d - 1; ++i) {
    HElement lhs = A.mul(eu, a[i]);
    HElement rhs = A.mul_qQ(a[i + 1], 1, 0) + A.mul_qQ(a[i - 1], 0, 1);
    if (lhs != rhs)
      rep.fail({"(Z_" + std::to_string(i) + ")", render_truncated(lhs), render_truncated(rhs),
                render_truncated(lhs - rhs)});
  }
  HElement disc = discriminant_element(A, m);
  for (int i = 1; i <= d - 1; ++i) {
    for (int j = i; j <= d - 1; ++j) {
      HElement lhs = A.mul(a[i - 1], a[j + 1]) - A.mul(a[i], a[j]);
      HElement rhs = A.mul_qQ(A.mul(disc, A.eval_at_eu_q_Q(psi(j - i))), d - j - 1, i - 1);
      if (lhs != rhs)
        rep.fail({"(Z_" + std::to_string(i) + "," + std::to_string(j) + ")",
                  render_truncated(lhs), render_truncated(rhs), render_truncated(lhs - rhs)});
    }
  }
  return rep;
}

CheckReport verify_horreur_pair(Session& s, int i, int j, Mutation m) {
  int d = s.d();
  CheckReport rep{"horreur", d};
  if (!(1 <= i && i <= j && j <= d - 1))
    throw std::invalid_argument("horreur indices need 1 <= i <= j <= d-1");
  Algebra& A = s.h0();
  Ring r = A.ring();
  CommPoly lhs = A.trunc(A.mul(A.central_a(i - 1), A.central_a(j + 1)) -
                         A.mul(A.central_a(i), A.central_a(j)));
  int k = j - i;
  CommPoly rhs = CommPoly::monomial(Mono4{d - j - 1, d - j - 1, i - 1, i - 1}, Scalar::one(r)) *
                 (CommPoly::monomial(Mono4{k + 2, 0, k + 2, 0}, Scalar::one(r)) +
                  CommPoly::monomial(Mono4{0, k + 2, 0, k + 2}, Scalar::one(r)));
  rhs += -(CommPoly::monomial(Mono4{d - j, d - j, i, i}, Scalar::one(r)) *
           (CommPoly::monomial(Mono4{k, 0, k, 0}, Scalar::one(r)) +
            CommPoly::monomial(Mono4{0, k, 0, k}, Scalar::one(r))));
  Rat coef = Rat(d) * Rat(1 + j - i - d + (m == Mutation::designated ? 1 : 0));
  Scalar a2 = Scalar::a_power(2, r) * coef;
  for (int M = i - 1; M <= j - 1; ++M)
    rhs += CommPoly::monomial(Mono4{M + d - i - j, d - 2 - M, M, i + j - 2 - M}, a2);
  if (lhs != rhs)
    rep.fail({"Trunc(a_" + std::to_string(i - 1) + " a_" + std::to_string(j + 1) + " - a_" +
                  std::to_string(i) + " a_" + std::to_string(j) + ")",
              render_truncated(lhs), render_truncated(rhs), render_truncated(lhs - rhs)});
  return rep;
}

CheckReport verify_horreur(Session& s, Mutation m) {
  int d = s.d();
  CheckReport rep{"horreur", d};
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i; j <= d - 1; ++j) {
      CheckReport one = verify_horreur_pair(s, i, j, m);
      if (!one.pass) {
        rep.pass = false;
        for (auto& w : one.witnesses) rep.witnesses.push_back(std::move(w));
      }
    }
  return rep;
}

PhiDecomposition phi_decomposition(Session& s, int i, int j, Mutation m) {
  int d = s.d();
  PhiDecomposition out;
  out.report = CheckReport{"phi_decomposition", d};
  if (!(0 <= i && i < j && j <= d) || d < 3)
    throw std::invalid_argument("phi decomposition needs 0 <= i < j <= d and d >= 3");
  Algebra& A = s.h0();
  Ring r = A.ring();
  std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  // Bracket computed in the deformation context, then analyzed at t = 0.
  HElement B = import_element(A, s.bracket_a(i, j));
  // Pi from the a = 0 specialization: at a = 0 the evaluation of any
  // polynomial in (eu, q, Q) collapses to the commutative polynomial times
  // the identity group element.
  CommPoly P0 = A.trunc(B.specialize_a(Rat(0)));
  auto Pi = solve_in_eu_q_Q(P0, d - 1, r);
  if (!Pi) {
    out.report.fail({"Pi" + tag + " solve", render_truncated(P0),
                     "a polynomial of degree d-1 in (eu_0,q,Q)", ""});
    return out;
  }
  out.Pi = *Pi;
  if (m == Mutation::designated) out.Pi.add_term(d - 1, 0, 0, Rat(1));
  HElement residual = B - A.eval_at_eu_q_Q(out.Pi);
  if (!residual.is_zero() && residual.min_a_exp() < 2) {
    out.report.fail({"residual of {a_i,a_j} - Pi" + tag + " divisible by a^2",
                     render_truncated(residual), "a^2 * (element)", ""});
    return out;
  }
  if (!residual.is_zero()) {
    HElement r2 = residual.shift_a_down(2);
    CommPoly F0 = A.trunc(r2.specialize_a(Rat(0)));
    auto Phi = solve_in_eu_q_Q(F0, d - 3, r);
    if (!Phi) {
      out.report.fail({"Phi" + tag + " solve", render_truncated(F0),
                       "a polynomial of degree d-3 in (eu_0,q,Q)", ""});
      return out;
    }
    out.Phi = *Phi;
    HElement rest = r2 - A.eval_at_eu_q_Q(out.Phi);
    if (!rest.is_zero()) {
      out.report.fail({"zero residual for " + tag, render_truncated(rest), "0", ""});
      return out;
    }
  }
  if (!out.Pi.is_zero() && !out.Pi.is_homogeneous(d - 1))
    out.report.fail({"Pi" + tag + " homogeneous of degree d-1", out.Pi.to_string(), "", ""});
  if (!out.Phi.is_zero() && !out.Phi.is_homogeneous(d - 3))
    out.report.fail({"Phi" + tag + " homogeneous of degree d-3", out.Phi.to_string(), "", ""});
  // Specialization coherence: Pi is exactly the undeformed bracket.
  CommPoly undeformed = poisson_vv(gen_a0(i, r), gen_a0(j, r));
  CommPoly pi_comm = substitute(out.Pi, gen_eu0(r), gen_q(r), gen_Q(r), r);
  if (undeformed != pi_comm)
    out.report.fail({"Pi" + tag + " matches the a=0 bracket", render_truncated(pi_comm),
                     render_truncated(undeformed), render_truncated(pi_comm - undeformed)});
  return out;
}

CheckReport verify_poisson_zc_table(Session& s) {
  int d = s.d();
  CheckReport rep{"poisson_zc_table", d};
  Algebra& B = s.h1();
  auto expect = [&rep](const std::string& id, const HElement& got, const HElement& want) {
    if (got != want)
      rep.fail({id, render_truncated(got), render_truncated(want), render_truncated(got - want)});
  };
  HElement q = B.central_q(), Q = B.central_Q(), eu = B.euler();
  expect("{q,Q}=eu", s.poisson(q, Q), eu);
  expect("{eu,q}=-2q", s.poisson(eu, q), q.scale(Rat(-2)));
  expect("{eu,Q}=2Q", s.poisson(eu, Q), Q.scale(Rat(2)));
  for (int j = 0; j <= d; ++j) {
    HElement aj = B.central_a(j);
    expect("{q,a_" + std::to_string(j) + "}",
           s.poisson(q, aj), j >= 1 ? B.central_a(j - 1).scale(Rat(j)) : B.zero());
    expect("{eu,a_" + std::to_string(j) + "}", s.poisson(eu, aj), aj.scale(Rat(2 * j - d)));
    expect("{Q,a_" + std::to_string(j) + "}",
           s.poisson(Q, aj), j <= d - 1 ? B.central_a(j + 1).scale(Rat(j - d)) : B.zero());
  }
  expect("{a_0,a_1}=2dq^(d-1)", s.bracket_a(0, 1), B.mul_qQ(B.one(), d - 1, 0).scale(Rat(2 * d)));
  expect("{a_0,a_2}=2dq^(d-2)eu", s.bracket_a(0, 2), B.mul_qQ(eu, d - 2, 0).scale(Rat(2 * d)));
  // Vanishing brackets against eu^2 - 4qQ: the product is formed at t = 0
  // and lifted with its PBW coefficients unchanged.
  Algebra& A0 = s.h0();
  HElement disc = import_element(
      B, A0.mul(A0.euler(), A0.euler()) + A0.mul_qQ(A0.one(), 1, 1).scale(Rat(-4)));
  expect("{q,eu^2-4qQ}=0", s.poisson(q, disc), B.zero());
  expect("{eu,eu^2-4qQ}=0", s.poisson(eu, disc), B.zero());
  expect("{Q,eu^2-4qQ}=0", s.poisson(Q, disc), B.zero());
  // Antisymmetry and one exact Jacobi instance on (q, Q, a_0).
  expect("antisymmetry {q,Q}=-{Q,q}", s.poisson(Q, q), -s.poisson(q, Q));
  {
    HElement a0 = B.central_a(0);
    HElement jac = s.poisson(q, s.poisson(Q, a0)) + s.poisson(Q, s.poisson(a0, q)) +
                   s.poisson(a0, s.poisson(q, Q));
    expect("jacobi(q,Q,a_0)", jac, B.zero());
  }
  // Coordinate formula: the t^1 layer of [x, z] is sum_w f_w w dF_w/dX.
  {
    std::vector<std::pair<std::string, HElement>> zs = {
        {"eu", eu}, {"a_0", B.central_a(0)}, {"a_1", B.central_a(1)}};
    for (const auto& [name, z] : zs) {
      HElement com = B.commutator(B.variable(0), z);
      HElement lhs = com.t_coefficient(1);
      HElement rhs;
      for (const auto& [key, c] : z.terms) {
        Mono4 mo = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
        if (mo.g == 0) continue;
        Mono4 nm = mo;
        nm.g -= 1;
        rhs.add_term(pack_hkey(static_cast<uint32_t>(key >> 32), pack_mono(nm)), c * Rat(mo.g));
      }
      expect("{x," + name + "} coordinate formula", lhs, rhs);
      if (!com.t_coefficient(0).is_zero())
        rep.fail({"[x," + name + "] t^0 layer", render_truncated(com.t_coefficient(0)), "0", ""});
    }
  }
  return rep;
}

}  // namespace cmdih
