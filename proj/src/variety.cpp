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

#include "variety.hpp"

#include <stdexcept>

#include "linalg.hpp"

namespace cmdih {

VarPoly VarPoly::variable(int nvars, int idx) {
  VarPoly p(nvars);
  std::vector<uint8_t> e(nvars, 0);
  e[idx] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

VarPoly VarPoly::constant(int nvars, const Rat& c) {
  VarPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::vector<uint8_t>(nvars, 0), c);
  return p;
}

void VarPoly::add_term(const std::vector<uint8_t>& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VarPoly VarPoly::operator-() const {
  VarPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, Rat(-c));
  return p;
}

VarPoly VarPoly::operator+(const VarPoly& o) const {
  VarPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

VarPoly VarPoly::operator-(const VarPoly& o) const { return *this + (-o); }

VarPoly VarPoly::operator*(const VarPoly& o) const {
  VarPoly p(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<uint8_t> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      p.add_term(e, c1 * c2);
    }
  }
  return p;
}

VarPoly VarPoly::scale(const Rat& r) const {
  VarPoly p(nvars_);
  if (r == 0) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, Rat(c * r));
  return p;
}

VarPoly VarPoly::pow(int e) const {
  VarPoly r = constant(nvars_, Rat(1));
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

Rat VarPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

VarPoly VarPoly::restrict_prefix(int first) const {
  VarPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (int i = first; i < nvars_; ++i)
      if (e[i] != 0) {
        keep = false;
        break;
      }
    if (keep) p.terms_.emplace(e, c);
  }
  return p;
}

std::vector<Rat> VarPoly::linear_part() const {
  std::vector<Rat> v(nvars_, Rat(0));
  for (const auto& [e, c] : terms_) {
    int deg = 0, idx = -1;
    for (int i = 0; i < nvars_; ++i) {
      deg += e[i];
      if (e[i] == 1) idx = i;
    }
    if (deg == 1) v[idx] = c;
  }
  return v;
}

int VarPoly::min_total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) deg += e[i];
    if (best < 0 || deg < best) best = deg;
  }
  return best;
}

VarPoly VarPoly::divide_by_power(int idx, int e) const {
  VarPoly p(nvars_);
  for (const auto& [exps, c] : terms_) {
    if (exps[idx] < e) throw std::domain_error("polynomial not divisible by the stated power");
    std::vector<uint8_t> ne = exps;
    ne[idx] = static_cast<uint8_t>(ne[idx] - e);
    p.terms_.emplace(std::move(ne), c);
  }
  return p;
}

std::string VarPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (it->first[i] > 1) mono += "^" + std::to_string(static_cast<int>(it->first[i]));
    }
    Rat c = it->second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    std::string term = mono.empty() ? rat_to_string(mag)
                       : mag == 1   ? mono
                                    : rat_to_string(mag) + "*" + mono;
    if (first) {
      out += (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::vector<std::string> coordinate_names(int d) {
  std::vector<std::string> n{"q", "Q", "e"};
  for (int i = 0; i <= d; ++i) n.push_back("a" + std::to_string(i));
  return n;
}

namespace {
VarPoly substitute_psi_vars(const PsiPoly& p, int nvars) {
  // T -> e (index 2), T' -> q (0), T'' -> Q (1).
  VarPoly out(nvars);
  for (const auto& [key, c] : p.terms()) {
    int te = static_cast<int>(key >> 16);
    int qe = static_cast<int>((key >> 8) & 0xff);
    int Qe = static_cast<int>(key & 0xff);
    std::vector<uint8_t> e(nvars, 0);
    e[2] = static_cast<uint8_t>(te);
    e[0] = static_cast<uint8_t>(qe);
    e[1] = static_cast<uint8_t>(Qe);
    out.add_term(e, c);
  }
  return out;
}
}  // namespace

std::vector<VarPoly> relation_system(int d, const std::vector<Rat>& P_coeffs) {
  if (d < 2) throw std::invalid_argument("relation system needs d >= 2");
  int n = d + 4;
  auto q = VarPoly::variable(n, 0);
  auto Q = VarPoly::variable(n, 1);
  auto e = VarPoly::variable(n, 2);
  auto a = [&](int i) { return VarPoly::variable(n, 3 + i); };
  std::vector<VarPoly> sys;
  for (int i = 1; i <= d - 1; ++i) sys.push_back(e * a(i) - q * a(i + 1) - Q * a(i - 1));
  // P evaluated at e^2 - 4qQ.
  VarPoly disc = e * e - (q * Q).scale(Rat(4));
  VarPoly Pval(n);
  for (size_t k = 0; k < P_coeffs.size(); ++k)
    Pval = Pval + disc.pow(static_cast<int>(k)).scale(P_coeffs[k]);
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i; j <= d - 1; ++j) {
      VarPoly rhs = Pval * q.pow(d - j - 1) * Q.pow(i - 1) * substitute_psi_vars(psi(j - i), n);
      sys.push_back(a(i - 1) * a(j + 1) - a(i) * a(j) - rhs);
    }
  return sys;
}

std::vector<VarPoly> calogero_moser_system(int d, const Rat& a_value) {
  return relation_system(d, {Rat(-d * d) * a_value * a_value, Rat(1)});
}

std::vector<Rat> evaluate_point(const std::vector<Rat>& point, const std::vector<VarPoly>& system) {
  std::vector<Rat> out;
  out.reserve(system.size());
  for (const auto& p : system) out.push_back(p.evaluate(point));
  return out;
}

int tangent_dim_origin(int d, const Rat& a_value) {
  auto sys = calogero_moser_system(d, a_value);
  RatMat jac;
  for (const auto& p : sys) jac.push_back(p.linear_part());
  return d + 4 - rank(std::move(jac));
}

Rat LieTable::structure(int i, int j, int k) const {
  if (i == j) return Rat(0);
  if (i > j) return -structure(j, i, k);
  auto it = c.find({i, j, k});
  return it == c.end() ? Rat(0) : it->second;
}

std::vector<Rat> LieTable::bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
  std::vector<Rat> out(dim, Rat(0));
  for (const auto& [ijk, coef] : c) {
    Rat f = u[ijk[0]] * v[ijk[1]] - u[ijk[1]] * v[ijk[0]];
    if (f != 0) out[ijk[2]] += coef * f;
  }
  return out;
}

LieTable lie_algebra_at_origin(Session& s, const Rat& a_value) {
  int d = s.d();
  if (d <= 3)
    throw std::invalid_argument(
        "the Lie algebra at the origin needs d >= 4 (the variety is smooth for d = 3, a != 0)");
  if (a_value == 0) throw std::invalid_argument("the cuspidal point needs a != 0");
  LieTable t;
  t.d = d;
  t.a_value = a_value;
  t.dim = d + 4;
  t.labels = coordinate_names(d);
  auto set = [&t](int i, int j, int k, const Rat& v) {
    if (v != 0) t.c[{i, j, k}] = v;
  };
  // Linear brackets of the sl2 block and its action on the a-block.
  set(0, 1, 2, Rat(1));  // [q, Q] = e
  set(0, 2, 0, Rat(2));  // [q, e] = 2q   ({q, eu} = -{eu, q} = 2q)
  set(1, 2, 1, Rat(-2)); // [Q, e] = -2Q
  for (int j = 0; j <= d; ++j) {
    set(2, 3 + j, 3 + j, Rat(2 * j - d));  // [e, a_j] = (2j-d) a_j
    if (j >= 1) set(0, 3 + j, 3 + j - 1, Rat(j));
    if (j <= d - 1) set(1, 3 + j, 3 + j + 1, Rat(j - d));
  }
  // [a_i, a_j]: the degree-1 component of Pi + a^2 Phi. Pi has degree
  // d-1 >= 3 and never contributes; Phi has degree d-3, linear exactly when
  // d = 4. The decomposition is recomputed, not assumed.
  Rat a2 = a_value * a_value;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      PhiDecomposition dec = phi_decomposition(s, i, j);
      if (!dec.report.pass)
        throw EngineError("phi decomposition failed while building the Lie table");
      for (const auto& [key, coef] : dec.Phi.terms()) {
        int te = static_cast<int>(key >> 16);
        int qe = static_cast<int>((key >> 8) & 0xff);
        int Qe = static_cast<int>(key & 0xff);
        if (te + qe + Qe != 1) continue;
        int target = te == 1 ? 2 : qe == 1 ? 0 : 1;
        set(3 + i, 3 + j, target, a2 * coef);
      }
      for (const auto& [key, coef] : dec.Pi.terms()) {
        int deg = static_cast<int>(key >> 16) + static_cast<int>((key >> 8) & 0xff) +
                  static_cast<int>(key & 0xff);
        if (deg == 1) throw EngineError("unexpected linear term in Pi");
      }
    }
  }
  return t;
}

CheckReport verify_lie_table(const LieTable& t) {
  CheckReport rep{"lie_table", t.d};
  int n = t.dim;
  auto basis = [n](int i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rat> s1 = t.bracket(basis(i), t.bracket(basis(j), basis(k)));
        std::vector<Rat> s2 = t.bracket(basis(j), t.bracket(basis(k), basis(i)));
        std::vector<Rat> s3 = t.bracket(basis(k), t.bracket(basis(i), basis(j)));
        for (int l = 0; l < n; ++l)
          if (s1[l] + s2[l] + s3[l] != 0) {
            rep.fail({"jacobi identity on basis triple (" + t.labels[i] + "," + t.labels[j] + "," +
                          t.labels[k] + ")",
                      "", "", ""});
            return rep;
          }
      }
  return rep;
}

LieClassification classify_lie(const LieTable& t) {
  LieClassification out;
  out.report = CheckReport{"lie_classification", t.d};
  int d = t.d, n = t.dim;
  // sl2 triple (e_, h_, f_) = (Q, e, -q) as coordinate vectors.
  auto fail = [&out](const std::string& what) { out.report.fail({what, "", "", ""}); };
  auto expect_vec = [&](const std::string& what, const std::vector<Rat>& got,
                        const std::vector<Rat>& want) {
    if (got != want) fail(what);
  };
  std::vector<Rat> e_(n, Rat(0)), h_(n, Rat(0)), f_(n, Rat(0));
  e_[1] = 1;
  h_[2] = 1;
  f_[0] = -1;
  auto scaled = [n](const std::vector<Rat>& v, const Rat& c) {
    std::vector<Rat> out(n);
    for (int i = 0; i < n; ++i) out[i] = v[i] * c;
    return out;
  };
  expect_vec("[h,e]=2e", t.bracket(h_, e_), scaled(e_, Rat(2)));
  expect_vec("[h,f]=-2f", t.bracket(h_, f_), scaled(f_, Rat(-2)));
  expect_vec("[e,f]=h", t.bracket(e_, f_), h_);
  // Weight string of ad(h) on the a-block: 2j - d, each once.
  for (int j = 0; j <= d; ++j) {
    std::vector<Rat> aj(n, Rat(0));
    aj[3 + j] = 1;
    expect_vec("weight of a_" + std::to_string(j), t.bracket(h_, aj),
               scaled(aj, Rat(2 * j - d)));
  }
  if (d >= 5) {
    // Abelian ideal.
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        std::vector<Rat> ai(n, Rat(0)), aj(n, Rat(0));
        ai[3 + i] = 1;
        aj[3 + j] = 1;
        auto br = t.bracket(ai, aj);
        for (int l = 0; l < n; ++l)
          if (br[l] != 0) fail("a-block brackets vanish");
      }
    // ad(e_) raises a_j to (j-d) a_{j+1}: injective below the top weight.
    for (int j = 0; j < d; ++j)
      if (t.structure(1, 3 + j, 3 + j + 1) == 0) fail("raising operator injective off the top");
    {
      std::vector<Rat> ad(n, Rat(0));
      ad[3 + d] = 1;
      auto br = t.bracket(e_, ad);
      for (int l = 0; l < n; ++l)
        if (br[l] != 0) fail("top weight killed by the raising operator");
    }
    if (out.report.pass)
      out.description = "sl2 + irreducible abelian (dim " + std::to_string(d + 1) + ")";
  } else {
    // d = 4: Killing form rank on the 8-dimensional algebra.
    std::vector<RatMat> ad(n, RatMat(n, RatVec(n, Rat(0))));
    for (int u = 0; u < n; ++u) {
      std::vector<Rat> bu(n, Rat(0));
      bu[u] = 1;
      for (int v = 0; v < n; ++v) {
        std::vector<Rat> bv(n, Rat(0));
        bv[v] = 1;
        auto br = t.bracket(bu, bv);
        for (int l = 0; l < n; ++l) ad[u][l][v] = br[l];
      }
    }
    RatMat kappa(n, RatVec(n, Rat(0)));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        Rat tr(0);
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) tr += ad[u][i][k] * ad[v][k][i];
        kappa[u][v] = tr;
      }
    out.killing_rank = rank(kappa);
    bool nonabelian = false;
    for (int i = 0; i <= d && !nonabelian; ++i)
      for (int j = i + 1; j <= d; ++j)
        for (int l = 0; l < n; ++l)
          if (t.structure(3 + i, 3 + j, l) != 0) {
            nonabelian = true;
            break;
          }
    if (!nonabelian) fail("a-block carries nonzero brackets at d = 4");
    if (out.killing_rank != n) fail("killing form nondegenerate");
    if (out.report.pass)
      // The unique semisimple Lie algebra of dimension 8 over C.
      out.description = "sl3 (dim 8, Killing rank 8)";
  }
  if (!out.report.pass && out.description.empty()) out.description = "unclassified";
  return out;
}

}  // namespace cmdih
