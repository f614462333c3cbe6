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

#include "suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "sl2.hpp"
#include "tau.hpp"
#include "variety.hpp"
#include "verify.hpp"

namespace cmdih {

namespace {

struct Check {
  std::string id;
  std::function<CheckReport()> run;
};

Json check_to_json(const std::string& id, const CheckReport& rep, int max_terms) {
  Json j;
  j["id"] = id;
  j["status"] = rep.pass ? "pass" : "fail";
  if (!rep.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : rep.witnesses) {
      Json e;
      e["relation"] = w.relation;
      if (!w.lhs.empty()) e["lhs"] = w.lhs;
      if (!w.rhs.empty()) e["rhs"] = w.rhs;
      if (!w.diff.empty()) e["difference"] = w.diff;
      ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
  }
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  (void)max_terms;
  return j;
}

// Runs the checks, in parallel when jobs > 1, aggregating in index order.
std::vector<Json> run_checks(const std::vector<Check>& checks, int jobs, int max_terms) {
  std::vector<Json> out(checks.size());
  if (jobs <= 1 || checks.size() <= 1) {
    for (size_t i = 0; i < checks.size(); ++i)
      out[i] = check_to_json(checks[i].id, checks[i].run(), max_terms);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      out[i] = check_to_json(checks[i].id, checks[i].run(), max_terms);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

CheckReport simple(const std::string& name, int d, bool pass, const std::string& lhs = "",
                   const std::string& rhs = "") {
  CheckReport rep{name, d};
  if (!pass) rep.fail({name, lhs, rhs, ""});
  return rep;
}

std::vector<Check> psi_suite(const Ring& r) {
  std::vector<Check> checks;
  int d = r.d;
  for (int i = 0; i <= 8; ++i)
    checks.push_back({"psi.closed_form.i=" + std::to_string(i), [i, r, d] {
                        return simple("psi_closed_form", d, verify_psi_closed_form(i, r));
                      }});
  checks.push_back({"psi.derivatives.i<=10", [d] {
                      for (int i = 1; i <= 10; ++i)
                        if (!verify_psi_derivatives(i))
                          return simple("psi_derivatives", d, false, "i=" + std::to_string(i));
                      return simple("psi_derivatives", d, true);
                    }});
  checks.push_back({"psi.monic_homogeneous.i<=12", [d] {
                      for (int i = 0; i <= 12; ++i) {
                        const PsiPoly& p = psi(i);
                        if (!p.is_homogeneous(i) || !p.is_monic_in_T(i) ||
                            !p.has_integer_coefficients())
                          return simple("psi_monic_homogeneous", d, false,
                                        "i=" + std::to_string(i));
                      }
                      return simple("psi_monic_homogeneous", d, true);
                    }});
  checks.push_back({"psi.t_axis.k<=10", [d] {
                      for (int k = 0; k <= 10; ++k)
                        if (psi(k).restrict_T_axis() != PsiPoly::monomial(k, 0, 0, Rat(1)))
                          return simple("psi_t_axis", d, false, "k=" + std::to_string(k));
                      return simple("psi_t_axis", d, true);
                    }});
  for (int k = 0; k <= 8; ++k)
    checks.push_back({"psi.base_rank.k=" + std::to_string(k), [k, d] {
                        return simple("psi_base_rank", d, psi_basis_full_rank(k));
                      }});
  checks.push_back({"psi.substitution_injective.k<=8", [r, d] {
                      for (int k = 1; k <= 8; ++k)
                        if (!psi_substitution_injective(k, r))
                          return simple("psi_substitution_injective", d, false,
                                        "k=" + std::to_string(k));
                      return simple("psi_substitution_injective", d, true);
                    }});
  checks.push_back({"psi.coords_roundtrip.deg<=6", [d] {
                      std::mt19937 rng(987654321);
                      std::uniform_int_distribution<int> coef(-5, 5);
                      for (int k = 1; k <= 6; ++k) {
                        PsiPoly p;
                        for (const auto& e : homogeneous_monomials(k))
                          p.add_term(e[0], e[1], e[2], Rat(coef(rng)));
                        auto coords = basis_coordinates(p, k);
                        PsiPoly back;
                        for (const auto& [ij, c] : coords) {
                          PsiPoly b =
                              PsiPoly::monomial(0, k - ij.second, ij.first, Rat(1)) *
                              psi(ij.second - ij.first);
                          back = back + b.scale(c);
                        }
                        if (back != p)
                          return simple("psi_coords_roundtrip", d, false,
                                        "k=" + std::to_string(k));
                      }
                      return simple("psi_coords_roundtrip", d, true);
                    }});
  return checks;
}

std::vector<Check> z0_suite(const Ring& r) {
  std::vector<Check> checks;
  checks.push_back({"z0.presentation", [r] { return verify_z0_presentation(r); }});
  checks.push_back({"z0.poisson_table", [r] { return verify_poisson0_table(r); }});
  checks.push_back({"z0.aij_display_note", [r] {
                      CheckReport rep{"aij_display_note", r.d};
                      rep.notes.push_back(
                          "a_{i,0} is implemented as x^{d-i} Y^i + y^{d-i} X^i, the W-invariant "
                          "form that the relation family and the truncations force; the variant "
                          "x^{d-i} Y^i + y^{d-i} Y^i is not W-invariant and is rejected");
                      CommPoly wrong = CommPoly::monomial(Mono4{r.d - 1, 0, 0, 1}, Scalar::one(r)) +
                                       CommPoly::monomial(Mono4{0, r.d - 1, 0, 1}, Scalar::one(r));
                      if (is_w_invariant(wrong, r.d))
                        rep.fail({"variant form is not W-invariant", "", "", ""});
                      if (!is_w_invariant(gen_a0(1, r), r.d))
                        rep.fail({"implemented form is W-invariant", "", "", ""});
                      return rep;
                    }});
  checks.push_back({"z0.w_invariance", [r] {
                      CheckReport rep{"w_invariance", r.d};
                      for (int i = 0; i <= r.d; ++i)
                        if (!is_w_invariant(gen_a0(i, r), r.d))
                          rep.fail({"a_{" + std::to_string(i) + ",0} invariance", "", "", ""});
                      if (!is_w_invariant(gen_q(r), r.d) || !is_w_invariant(gen_Q(r), r.d) ||
                          !is_w_invariant(gen_eu0(r), r.d))
                        rep.fail({"q, Q, eu_0 invariance", "", "", ""});
                      if (is_w_invariant(CommPoly::variable(0, r, 1), r.d))
                        rep.fail({"x is not invariant", "", "", ""});
                      return rep;
                    }});
  return checks;
}

std::vector<Check> zc_suite(Session& s) {
  std::vector<Check> checks;
  checks.push_back({"zc.centrality", [&s] { return verify_centrality(s); }});
  checks.push_back({"zc.relations", [&s] { return verify_zc_relations(s); }});
  checks.push_back({"zc.a0_specialization", [&s] {
                      // At a = 0 the deformed relation sides reduce to the
                      // undeformed presentation.
                      int d = s.d();
                      Algebra& A = s.h0();
                      Ring r = A.ring();
                      CheckReport rep{"a0_specialization", d};
                      int i = std::max(1, d / 2);
                      HElement lhs = A.mul(A.central_a(i - 1), A.central_a(i + 1)) -
                                     A.mul(A.central_a(i), A.central_a(i));
                      CommPoly reduced = A.trunc(lhs.specialize_a(Rat(0)));
                      CommPoly expected = gen_a0(i - 1, r) * gen_a0(i + 1, r) -
                                          gen_a0(i, r) * gen_a0(i, r);
                      if (reduced != expected)
                        rep.fail({"(Z_{i,i}) at a=0 equals (Z0_{i,i})", render_truncated(reduced),
                                  render_truncated(expected), ""});
                      return rep;
                    }});
  checks.push_back({"zc.smash_product_check", [&s] {
                      // With a = 0 and t = 0 the product is the smash product:
                      // (f1 w1 g1)(f2 w2 g2) = f1 (w1.f2) (w1 w2) (w2^-1.g1) g2.
                      int d = s.d();
                      Algebra& A = s.h0();
                      Ring r = A.ring();
                      CheckReport rep{"smash_product", d};
                      std::mt19937 rng(424242);
                      std::uniform_int_distribution<int> exp(0, 2), pick(0, 2 * d - 1),
                          coef(-2, 2);
                      for (int trial = 0; trial < 6; ++trial) {
                        int g1 = pick(rng), g2 = pick(rng);
                        GroupElement w1 = g1 < d ? rotation(d, g1) : reflection(d, g1 - d);
                        GroupElement w2 = g2 < d ? rotation(d, g2) : reflection(d, g2 - d);
                        Mono4 f1{exp(rng), exp(rng), 0, 0}, gg1{0, 0, exp(rng), exp(rng)};
                        Mono4 f2{exp(rng), exp(rng), 0, 0}, gg2{0, 0, exp(rng), exp(rng)};
                        HElement u, v;
                        u.add_term(pack_hkey(wcode(w1), pack_mono(Mono4{f1.a, f1.b, gg1.g, gg1.h})),
                                   Scalar::rational(Rat(coef(rng)), r));
                        v.add_term(pack_hkey(wcode(w2), pack_mono(Mono4{f2.a, f2.b, gg2.g, gg2.h})),
                                   Scalar::rational(Rat(coef(rng)), r));
                        HElement prod = A.mul(u, v).specialize_a(Rat(0));
                        // Reference smash product.
                        HElement want;
                        for (const auto& [k1, c1] : u.terms)
                          for (const auto& [k2, c2] : v.terms) {
                            GroupElement ww1 =
                                element_from_wcode(d, static_cast<uint32_t>(k1 >> 32));
                            GroupElement ww2 =
                                element_from_wcode(d, static_cast<uint32_t>(k2 >> 32));
                            Mono4 m1 = unpack_mono(static_cast<uint32_t>(k1 & 0xffffffffu));
                            Mono4 m2 = unpack_mono(static_cast<uint32_t>(k2 & 0xffffffffu));
                            auto [e1, f2w] = act_mono(ww1, Mono4{m2.a, m2.b, 0, 0});
                            auto [e2, g1w] = act_mono(inverse(ww2), Mono4{0, 0, m1.g, m1.h});
                            Mono4 mono{m1.a + f2w.a, m1.b + f2w.b, g1w.g + m2.g, g1w.h + m2.h};
                            want.add_term(
                                pack_hkey(wcode(compose(ww1, ww2)), pack_mono(mono)),
                                (c1 * c2).times_root(2 * (e1 + e2)).specialize_a(Rat(0)));
                          }
                        if (prod != want)
                          rep.fail({"smash product trial " + std::to_string(trial),
                                    render_truncated(prod), render_truncated(want), ""});
                      }
                      return rep;
                    }});
  checks.push_back({"zc.associativity_spot_check", [&s] {
                      int d = s.d();
                      Algebra& A = s.h0();
                      Ring r = A.ring();
                      CheckReport rep{"associativity", d};
                      std::mt19937 rng(31337);
                      std::uniform_int_distribution<int> exp(0, 1), pick(0, 2 * d - 1),
                          coef(-2, 2);
                      auto rand_el = [&] {
                        HElement h;
                        for (int t = 0; t < 2; ++t) {
                          int g = pick(rng);
                          GroupElement w = g < d ? rotation(d, g) : reflection(d, g - d);
                          h.add_term(pack_hkey(wcode(w), pack_mono(Mono4{exp(rng), exp(rng),
                                                                         exp(rng), exp(rng)})),
                                     Scalar::rational(Rat(coef(rng)), r));
                        }
                        return h;
                      };
                      for (int trial = 0; trial < 5; ++trial) {
                        HElement u = rand_el(), v = rand_el(), w = rand_el();
                        HElement lhs = A.mul(A.mul(u, v), w);
                        HElement rhs = A.mul(u, A.mul(v, w));
                        if (lhs != rhs)
                          rep.fail({"associativity trial " + std::to_string(trial),
                                    render_truncated(lhs), render_truncated(rhs),
                                    render_truncated(lhs - rhs)});
                        int bound = u.total_degree() + v.total_degree() + w.total_degree();
                        if (!lhs.is_zero() && lhs.total_degree() > bound)
                          rep.fail({"degree bound trial " + std::to_string(trial),
                                    std::to_string(lhs.total_degree()), std::to_string(bound),
                                    ""});
                      }
                      return rep;
                    }});
  return checks;
}

std::vector<Check> horreur_suite(Session& s) {
  std::vector<Check> checks;
  int d = s.d();
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i; j <= d - 1; ++j)
      checks.push_back({"horreur.pair(" + std::to_string(i) + "," + std::to_string(j) + ")",
                        [&s, i, j] { return verify_horreur_pair(s, i, j); }});
  return checks;
}

std::vector<Check> poisson_suite(Session& s) {
  std::vector<Check> checks;
  checks.push_back({"poisson.zc_table", [&s] { return verify_poisson_zc_table(s); }});
  return checks;
}

std::vector<Check> phi_suite(Session& s) {
  std::vector<Check> checks;
  int d = s.d();
  if (d < 3) return checks;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j <= d; ++j)
      checks.push_back({"phi.decomp(" + std::to_string(i) + "," + std::to_string(j) + ")",
                        [&s, i, j] { return phi_decomposition(s, i, j).report; }});
  return checks;
}

std::vector<Check> lie_suite(Session& s, const Rat& a_value) {
  std::vector<Check> checks;
  int d = s.d();
  if (d < 4) return checks;
  checks.push_back({"lie.tangent_dim_origin", [d, a_value] {
                      int dim = tangent_dim_origin(d, a_value);
                      return simple("tangent_dim", d, dim == d + 4, std::to_string(dim),
                                    std::to_string(d + 4));
                    }});
  checks.push_back({"lie.table_jacobi", [&s, a_value] {
                      return verify_lie_table(lie_algebra_at_origin(s, a_value));
                    }});
  checks.push_back({"lie.classification", [&s, a_value, d] {
                      LieClassification c = classify_lie(lie_algebra_at_origin(s, a_value));
                      CheckReport rep = c.report;
                      rep.notes.push_back("classification: " + c.description);
                      std::string expected =
                          d == 4 ? "sl3 (dim 8, Killing rank 8)"
                                 : "sl2 + irreducible abelian (dim " + std::to_string(d + 1) + ")";
                      if (c.description != expected)
                        rep.fail({"classification", c.description, expected, ""});
                      return rep;
                    }});
  checks.push_back({"lie.scaling_invariance", [&s, a_value, d] {
                      CheckReport rep{"scaling", d};
                      std::string base = classify_lie(lie_algebra_at_origin(s, a_value)).description;
                      for (int lambda : {2, 3}) {
                        Rat scaled = a_value * lambda;
                        std::string got = classify_lie(lie_algebra_at_origin(s, scaled)).description;
                        if (got != base)
                          rep.fail({"classification at " + std::to_string(lambda) + "a", got, base,
                                    ""});
                      }
                      return rep;
                    }});
  return checks;
}

std::vector<Check> sl2_suite(Session& s) {
  std::vector<Check> checks;
  int d = s.d();
  checks.push_back({"sl2.operator_relations", [d] { return verify_sl2_operator_relations(d); }});
  checks.push_back({"sl2.bracket_oracle", [&s] { return verify_sl2_oracle(s); }});
  checks.push_back({"sl2.kernel_basis", [d] { return verify_kernel_basis(d); }});
  checks.push_back({"sl2.sharp_basis", [d] { return verify_sym_sharp_basis(d); }});
  checks.push_back({"sl2.rho_equivariance", [d] { return verify_rho_equivariance(d); }});
  checks.push_back({"sl2.zi_intrinsic", [d] { return verify_zi_intrinsic(d); }});
  checks.push_back({"sl2.hermite_dimensions", [] { return verify_hermite_dimensions(6); }});
  checks.push_back({"sl2.moment_map", [d] {
                      CheckReport rep{"moment", d};
                      std::vector<Rat> pt(d + 4, Rat(0));
                      pt[0] = Rat(3);
                      pt[1] = Rat(5);
                      pt[2] = Rat(-2);
                      auto m = moment(pt);
                      if (m[0] + m[3] != 0) rep.fail({"trace zero", "", "", ""});
                      Rat det = m[0] * m[3] - m[1] * m[2];
                      Rat want = -pt[2] * pt[2] + pt[0] * pt[1];
                      if (det != want)
                        rep.fail({"det = -e^2 + qQ", rat_to_string(det), rat_to_string(want), ""});
                      auto z = moment(std::vector<Rat>(d + 4, Rat(0)));
                      if (z[0] != 0 || z[1] != 0 || z[2] != 0 || z[3] != 0)
                        rep.fail({"origin maps to 0", "", "", ""});
                      return rep;
                    }});
  checks.push_back({"sl2.zij_delegation", [d] {
                      CheckReport rep{"zij_delegation", d};
                      rep.notes.push_back(
                          "the relation family phi - rho(phi) * (eu*eu - 4 q*Q - d^2 a^2) in "
                          "Ker(sigma) is exactly the quadratic relation family; it is verified "
                          "once, inside the zc suite");
                      return rep;
                    }});
  return checks;
}

std::vector<Check> tau_suite(Session& s, const Rat& a_value) {
  std::vector<Check> checks;
  int d = s.d();
  checks.push_back({"tau.action", [&s] { return verify_tau_action(s); }});
  if (d >= 3) {
    checks.push_back({"tau.fixed_locus", [d, a_value] {
                        FixedLocusReport fl = fixed_locus_analysis(d, a_value);
                        return fl.report;
                      }});
    checks.push_back({"tau.quadric_poisson", [&s] { return fixed_quadric_poisson_check(s); }});
  }
  return checks;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"psi", "z0",  "zc",  "horreur", "poisson",
                                              "phi", "lie", "sl2", "tau"};
  return names;
}

Json run_report(const RunConfig& cfg) {
  if (cfg.d < 2) throw std::invalid_argument("d must be at least 2");
  if (cfg.d > cfg.d_ceiling)
    throw std::invalid_argument("d exceeds the configured ceiling of " +
                                std::to_string(cfg.d_ceiling));
  if (cfg.t_order < 2) throw std::invalid_argument("t_order must be at least 2");
  std::vector<std::string> selected;
  for (const auto& name : cfg.suites) {
    if (name == "all") {
      selected = known_suites();
      break;
    }
    bool ok = false;
    for (const auto& k : known_suites()) ok = ok || k == name;
    if (!ok) throw std::invalid_argument("unknown suite: " + name);
    selected.push_back(name);
  }
  Rat a_numeric = cfg.a_value.value_or(Rat(1));
  if (a_numeric == 0) throw std::invalid_argument("a must be nonzero for the lie/tau suites");

  Session session(cfg.d, cfg.t_order);
  Ring r0 = session.h0().ring();

  Json report;
  report["version"] = "cm-report/1";
  report["d"] = cfg.d;
  report["a"] = cfg.a_value ? rat_to_string(*cfg.a_value) : "symbolic";
  report["t_order"] = cfg.t_order;
  Json suites = Json::array();
  bool all_pass = true;
  for (const auto& name : selected) {
    std::vector<Check> checks;
    if (name == "psi") checks = psi_suite(r0);
    else if (name == "z0") checks = z0_suite(r0);
    else if (name == "zc") checks = zc_suite(session);
    else if (name == "horreur") checks = horreur_suite(session);
    else if (name == "poisson") checks = poisson_suite(session);
    else if (name == "phi") checks = phi_suite(session);
    else if (name == "lie") checks = lie_suite(session, a_numeric);
    else if (name == "sl2") checks = sl2_suite(session);
    else if (name == "tau") checks = tau_suite(session, a_numeric);
    auto start = std::chrono::steady_clock::now();
    std::vector<Json> results = run_checks(checks, cfg.jobs, cfg.max_terms);
    auto stop = std::chrono::steady_clock::now();
    Json sj;
    sj["name"] = name;
    if (name == "lie" || name == "tau") sj["a_value"] = rat_to_string(a_numeric);
    Json arr = Json::array();
    for (auto& c : results) {
      if (c["status"] == "fail") all_pass = false;
      arr.push_back(std::move(c));
    }
    if (checks.empty()) sj["note"] = "no applicable checks at this d";
    sj["checks"] = std::move(arr);
    if (cfg.timing)
      sj["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    suites.push_back(std::move(sj));
  }
  report["suites"] = std::move(suites);
  report["all_pass"] = all_pass;
  return report;
}

bool report_all_pass(const Json& report) {
  return report.contains("all_pass") && report["all_pass"].get<bool>();
}

namespace {
HElement named_generator(Session& s, const std::string& name) {
  Algebra& B = s.h1();
  if (name == "q") return B.central_q();
  if (name == "Q") return B.central_Q();
  if (name == "eu") return B.euler();
  if (name.size() >= 2 && name[0] == 'a') {
    int idx = std::stoi(name.substr(1));
    if (idx < 0 || idx > s.d()) throw std::invalid_argument("generator index out of range");
    return B.central_a(idx);
  }
  throw std::invalid_argument("unknown generator (expected q, Q, eu, a0..a" +
                              std::to_string(s.d()) + "): " + name);
}
}  // namespace

std::string bracket_text(int d, const std::string& g1, const std::string& g2) {
  Session s(d);
  HElement b = s.poisson(named_generator(s, g1), named_generator(s, g2));
  return "{" + g1 + "," + g2 + "} = " + b.to_string();
}

namespace {
Json helement_to_json(const HElement& h, int d) {
  Json terms = Json::array();
  for (const auto& [key, c] : h.terms) {
    Mono4 m = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
    Json t;
    t["w"] = to_string(element_from_wcode(d, static_cast<uint32_t>(key >> 32)));
    t["xy"] = Json::array({m.a, m.b});
    t["XY"] = Json::array({m.g, m.h});
    t["coef"] = c.to_string();
    terms.push_back(std::move(t));
  }
  return terms;
}
}  // namespace

Json bracket_json(int d, const std::string& g1, const std::string& g2) {
  Session s(d);
  HElement b = s.poisson(named_generator(s, g1), named_generator(s, g2));
  Json j;
  j["version"] = "cm-report/1";
  j["d"] = d;
  j["bracket"] = "{" + g1 + "," + g2 + "}";
  j["text"] = b.to_string();
  j["terms"] = helement_to_json(b, d);
  return j;
}

Json lie_report(int d, const Rat& a_value) {
  Session s(d);
  LieTable t = lie_algebra_at_origin(s, a_value);
  LieClassification c = classify_lie(t);
  CheckReport jac = verify_lie_table(t);
  Json j;
  j["version"] = "cm-report/1";
  j["d"] = d;
  j["a_value"] = rat_to_string(a_value);
  j["dim"] = t.dim;
  j["tangent_dim_origin"] = tangent_dim_origin(d, a_value);
  j["basis"] = t.labels;
  Json sc = Json::array();
  for (const auto& [ijk, v] : t.c) {
    Json e;
    e["i"] = t.labels[ijk[0]];
    e["j"] = t.labels[ijk[1]];
    e["k"] = t.labels[ijk[2]];
    e["c"] = rat_to_string(v);
    sc.push_back(std::move(e));
  }
  j["structure_constants"] = std::move(sc);
  j["jacobi"] = jac.pass ? "pass" : "fail";
  j["classification"] = d == 4 ? "sl3" : c.description;
  j["classification_detail"] = c.description;
  if (c.killing_rank >= 0) j["killing_rank"] = c.killing_rank;
  return j;
}

Json fixed_report(int d, const Rat& a_value) {
  FixedLocusReport fl = fixed_locus_analysis(d, a_value);
  Json j;
  j["version"] = "cm-report/1";
  j["d"] = d;
  j["a_value"] = rat_to_string(a_value);
  j["status"] = fl.report.pass ? "pass" : "fail";
  j["derived_quadric"] = fl.derived_quadric.to_string(coordinate_names(d)) + " = 0";
  j["displayed_form_flag"] = fl.discrepancy_note;
  j["residual_system"] = fl.residual_system;
  j["sampled_points"] = fl.sampled_points;
  if (!fl.report.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : fl.report.witnesses) ws.push_back(w.relation);
    j["failures"] = std::move(ws);
  }
  return j;
}

Json sl2_report(int d) {
  Json j;
  j["version"] = "cm-report/1";
  j["d"] = d;
  Json checks = Json::array();
  auto add = [&checks](const std::string& id, const CheckReport& rep) {
    Json e;
    e["id"] = id;
    e["status"] = rep.pass ? "pass" : "fail";
    checks.push_back(std::move(e));
  };
  add("operator_relations", verify_sl2_operator_relations(d));
  add("kernel_basis", verify_kernel_basis(d));
  add("sharp_basis", verify_sym_sharp_basis(d));
  add("rho_equivariance", verify_rho_equivariance(d));
  add("zi_intrinsic", verify_zi_intrinsic(d));
  add("hermite_dimensions", verify_hermite_dimensions(6));
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace cmdih
