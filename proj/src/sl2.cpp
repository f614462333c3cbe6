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

#include "sl2.hpp"

#include <array>
#include <stdexcept>

#include "linalg.hpp"

namespace cmdih {

SymElement SymElement::generator(int d, int idx) {
  SymElement z(d);
  std::vector<uint8_t> e(d + 4, 0);
  e[idx] = 1;
  z.terms_.emplace(std::move(e), Rat(1));
  return z;
}

void SymElement::add_term(const std::vector<uint8_t>& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymElement SymElement::operator-() const {
  SymElement z(d_);
  for (const auto& [e, c] : terms_) z.terms_.emplace(e, Rat(-c));
  return z;
}

SymElement SymElement::operator+(const SymElement& o) const {
  SymElement z = *this;
  for (const auto& [e, c] : o.terms_) z.add_term(e, c);
  return z;
}

SymElement SymElement::operator-(const SymElement& o) const { return *this + (-o); }

SymElement SymElement::operator*(const SymElement& o) const {
  SymElement z(d_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<uint8_t> e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      z.add_term(e, c1 * c2);
    }
  return z;
}

SymElement SymElement::scale(const Rat& r) const {
  SymElement z(d_);
  if (r == 0) return z;
  for (const auto& [e, c] : terms_) z.terms_.emplace(e, Rat(c * r));
  return z;
}

int SymElement::star_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (uint8_t x : e) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

std::string SymElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names{"q", "Q", "eu"};
  for (int i = 0; i <= d_; ++i) names.push_back("a" + std::to_string(i));
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (size_t i = 0; i < it->first.size(); ++i) {
      for (int k = 0; k < it->first[i]; ++k) {
        if (!mono.empty()) mono += "*";
        mono += names[i];
      }
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

V2Poly to_tu(const SymElement& z) {
  int d = z.d();
  V2Poly out;
  for (const auto& [e, c] : z.terms()) {
    int tdeg = 0, udeg = 0;
    Rat coef = c;
    tdeg += 2 * e[kSymQ];
    for (int k = 0; k < e[kSymQ]; ++k) coef /= 2;  // q -> t^2/2
    udeg += 2 * e[kSymQQ];
    for (int k = 0; k < e[kSymQQ]; ++k) coef /= 2;  // Q -> u^2/2
    tdeg += e[kSymEu];
    udeg += e[kSymEu];  // eu -> tu
    for (int i = 0; i <= d; ++i) {
      tdeg += (d - i) * e[sym_a(i)];
      udeg += i * e[sym_a(i)];
    }
    auto key = std::make_pair(tdeg, udeg);
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(key, coef);
    } else {
      it->second += coef;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

V2Poly epsilon(int m, int n, const SymElement& z) {
  int d = z.d();
  if (n != 2 && n != d) throw std::invalid_argument("epsilon: n must be 2 or d");
  for (const auto& [e, c] : z.terms()) {
    int deg = 0;
    for (int idx = 0; idx < static_cast<int>(e.size()); ++idx) {
      if (!e[idx]) continue;
      int symbol_degree = idx <= 2 ? 2 : d;
      if (symbol_degree != n)
        throw std::invalid_argument("epsilon: element mixes symbol blocks");
      deg += e[idx];
    }
    if (deg != m) throw std::invalid_argument("epsilon: star-degree mismatch");
  }
  return to_tu(z);
}

SymElement sl2_act(int xi, const SymElement& z) {
  int d = z.d();
  int n = d + 4;
  // Images of the generators.
  auto gen_image = [&](int idx) {
    SymElement out(d);
    std::vector<uint8_t> e(n, 0);
    if (xi == 0) {  // e. = {Q, .}
      if (idx == kSymQ) {
        e[kSymEu] = 1;
        out.add_term(e, Rat(-1));
      } else if (idx == kSymEu) {
        e[kSymQQ] = 1;
        out.add_term(e, Rat(-2));
      } else if (idx >= 3) {
        int j = idx - 3;
        if (j <= d - 1) {
          e[sym_a(j + 1)] = 1;
          out.add_term(e, Rat(j - d));
        }
      }
    } else if (xi == 1) {  // h. = {eu, .}
      if (idx == kSymQ) {
        e[kSymQ] = 1;
        out.add_term(e, Rat(-2));
      } else if (idx == kSymQQ) {
        e[kSymQQ] = 1;
        out.add_term(e, Rat(2));
      } else if (idx >= 3) {
        int j = idx - 3;
        e[idx] = 1;
        out.add_term(e, Rat(2 * j - d));
      }
    } else {  // f. = {-q, .}
      if (idx == kSymQQ) {
        e[kSymEu] = 1;
        out.add_term(e, Rat(-1));
      } else if (idx == kSymEu) {
        e[kSymQ] = 1;
        out.add_term(e, Rat(-2));
      } else if (idx >= 3) {
        int j = idx - 3;
        if (j >= 1) {
          e[sym_a(j - 1)] = 1;
          out.add_term(e, Rat(-j));
        }
      }
    }
    return out;
  };
  // Extend as a derivation over the star product.
  SymElement out(d);
  for (const auto& [e, c] : z.terms()) {
    for (int idx = 0; idx < n; ++idx) {
      if (e[idx] == 0) continue;
      std::vector<uint8_t> rest = e;
      rest[idx] -= 1;
      SymElement restz(d);
      restz.add_term(rest, c * Rat(e[idx]));
      out = out + gen_image(idx) * restz;
    }
  }
  return out;
}

std::vector<SymElement> kernel_basis_2d(int d) {
  std::vector<SymElement> basis;
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i; j <= d - 1; ++j) {
      SymElement z = SymElement::generator(d, sym_a(i - 1)) * SymElement::generator(d, sym_a(j + 1)) -
                     SymElement::generator(d, sym_a(i)) * SymElement::generator(d, sym_a(j));
      basis.push_back(z);
    }
  return basis;
}

SymElement psi_star(int d, const PsiPoly& p) {
  SymElement out(d);
  for (const auto& [key, c] : p.terms()) {
    std::vector<uint8_t> e(d + 4, 0);
    e[kSymEu] = static_cast<uint8_t>(key >> 16);
    e[kSymQ] = static_cast<uint8_t>((key >> 8) & 0xff);
    e[kSymQQ] = static_cast<uint8_t>(key & 0xff);
    out.add_term(e, c);
  }
  return out;
}

SymElement rho_basis_image(int d, int i, int j) {
  std::vector<uint8_t> e(d + 4, 0);
  e[kSymQ] = static_cast<uint8_t>(d - j - 1);
  e[kSymQQ] = static_cast<uint8_t>(i - 1);
  SymElement mono(d);
  mono.add_term(e, Rat(1));
  return mono * psi_star(d, psi(j - i));
}

namespace {
// Index pairs (i, j) for the kernel basis, in order.
std::vector<std::pair<int, int>> kernel_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i; j <= d - 1; ++j) out.emplace_back(i, j);
  return out;
}

// Vectorize a set of SymElements over the star-monomials that occur.
RatMat sym_matrix(const std::vector<SymElement>& elems,
                  std::map<std::vector<uint8_t>, size_t>& row_index) {
  for (const auto& z : elems)
    for (const auto& [e, c] : z.terms()) row_index.emplace(e, row_index.size());
  RatMat a(row_index.size(), RatVec(elems.size(), Rat(0)));
  for (size_t col = 0; col < elems.size(); ++col)
    for (const auto& [e, c] : elems[col].terms()) a[row_index[e]][col] = c;
  return a;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

SymElement rho(int d, const SymElement& z) {
  auto pairs = kernel_pairs(d);
  auto basis = kernel_basis_2d(d);
  std::map<std::vector<uint8_t>, size_t> rows;
  RatMat a = sym_matrix(basis, rows);
  RatVec b(rows.size(), Rat(0));
  for (const auto& [e, c] : z.terms()) {
    auto it = rows.find(e);
    if (it == rows.end()) throw std::invalid_argument("element outside the kernel span");
    b[it->second] = c;
  }
  auto x = solve(std::move(a), std::move(b));
  if (!x) throw std::invalid_argument("element outside the kernel span");
  SymElement out(d);
  for (size_t k = 0; k < pairs.size(); ++k)
    if ((*x)[k] != 0) out = out + rho_basis_image(d, pairs[k].first, pairs[k].second).scale((*x)[k]);
  return out;
}

CheckReport verify_kernel_basis(int d) {
  CheckReport rep{"kernel_basis_2d", d};
  auto basis = kernel_basis_2d(d);
  long expected = static_cast<long>(d) * (d - 1) / 2;
  if (static_cast<long>(basis.size()) != expected)
    rep.fail({"kernel family size", std::to_string(basis.size()), std::to_string(expected), ""});
  for (size_t k = 0; k < basis.size(); ++k) {
    V2Poly img = epsilon(2, d, basis[k]);
    if (!img.empty())
      rep.fail({"evaluation kills kernel element #" + std::to_string(k),
                basis[k].to_string(), "0", ""});
  }
  std::map<std::vector<uint8_t>, size_t> rows;
  RatMat a = sym_matrix(basis, rows);
  int r = rank(std::move(a));
  if (r != expected)
    rep.fail({"kernel family rank", std::to_string(r), std::to_string(expected), ""});
  // dim Sym^2(Sym^d V_2) - dim Sym^{2d} V_2 = (d+1)(d+2)/2 - (2d+1).
  long dim_kernel = binom(d + 2, 2) - (2 * d + 1);
  if (dim_kernel != expected)
    rep.fail({"kernel dimension count", std::to_string(dim_kernel), std::to_string(expected), ""});
  return rep;
}

CheckReport verify_sym_sharp_basis(int d) {
  CheckReport rep{"sym_sharp_basis", d};
  auto pairs = kernel_pairs(d);
  std::vector<SymElement> family;
  for (auto [i, j] : pairs) family.push_back(rho_basis_image(d, i, j));
  std::map<std::vector<uint8_t>, size_t> rows;
  RatMat a = sym_matrix(family, rows);
  int r = rank(std::move(a));
  long expected = binom(d, 2);  // dim Sym^{d-2}(C^3)
  if (r != expected)
    rep.fail({"star-family rank in Sym^{d-2}(E#)", std::to_string(r), std::to_string(expected), ""});
  if (static_cast<long>(rows.size()) != expected)
    rep.fail({"Sym^{d-2}(E#) monomial count", std::to_string(rows.size()),
              std::to_string(expected), ""});
  return rep;
}

CheckReport verify_rho_equivariance(int d, Mutation m) {
  CheckReport rep{"rho_equivariance", d};
  auto pairs = kernel_pairs(d);
  auto basis = kernel_basis_2d(d);
  const char* names[3] = {"e", "h", "f"};
  for (size_t k = 0; k < basis.size(); ++k) {
    SymElement image = rho_basis_image(d, pairs[k].first, pairs[k].second);
    if (m == Mutation::designated) {
      // Shift the q-exponent of the assignment by one.
      SymElement shifted(d);
      for (const auto& [e, c] : image.terms()) {
        std::vector<uint8_t> ne = e;
        ne[kSymQ] += 1;
        shifted.add_term(ne, c);
      }
      image = shifted;
    }
    for (int xi = 0; xi < 3; ++xi) {
      SymElement lhs = rho(d, sl2_act(xi, basis[k]));
      if (m == Mutation::designated) {
        // The mutated assignment is applied on the right side only.
      }
      SymElement rhs = sl2_act(xi, image);
      if (m == Mutation::none) {
        if (lhs != rhs)
          rep.fail({"rho(" + std::string(names[xi]) + ". b_(" + std::to_string(pairs[k].first) +
                        "," + std::to_string(pairs[k].second) + "))",
                    lhs.to_string(), rhs.to_string(), (lhs - rhs).to_string()});
      } else {
        if (lhs == rhs) continue;
        rep.fail({"mutated rho detects the shift", lhs.to_string(), rhs.to_string(), ""});
        return rep;
      }
    }
  }
  // Both sides have the same dimension d(d-1)/2; rho of the basis is the
  // sharp family, whose rank is checked separately.
  return rep;
}

CheckReport verify_zi_intrinsic(int d, Mutation m) {
  CheckReport rep{"zi_intrinsic", d};
  // Mixed component basis: g * a_i for g in {q, Q, eu}, i in 0..d.
  std::vector<SymElement> mixed;
  std::vector<std::pair<int, int>> mixed_idx;  // (sharp symbol, a index)
  for (int g = 0; g < 3; ++g)
    for (int i = 0; i <= d; ++i) {
      mixed.push_back(SymElement::generator(d, g) * SymElement::generator(d, sym_a(i)));
      mixed_idx.emplace_back(g, i);
    }
  int n = static_cast<int>(mixed.size());
  // Constraint rows: the multiplication map into Sym^{d+2} V_2 and the two
  // coordinate-derivation maps into Sym^{d+1} V_2. (Every derivation of
  // Sym(V_2) is a Sym(V_2)-combination of d/dt and d/du, so these two kernels
  // cut out the full intersection.)
  std::map<std::pair<int, int>, size_t> mono_rows;   // multiplication target
  std::map<std::pair<int, int>, size_t> dmono_rows;  // derivation targets
  auto v2_of_sharp = [](int g) {
    // q -> t^2/2, Q -> u^2/2, eu -> tu as (tdeg, udeg, coef).
    struct R { int t, u; Rat c; };
    if (g == kSymQ) return R{2, 0, Rat(1, 2)};
    if (g == kSymQQ) return R{0, 2, Rat(1, 2)};
    return R{1, 1, Rat(1)};
  };
  std::vector<std::map<std::pair<int, int>, Rat>> mul_cols(n), dt_cols(n), du_cols(n);
  for (int c = 0; c < n; ++c) {
    auto [g, i] = mixed_idx[c];
    auto s = v2_of_sharp(g);
    mul_cols[c][{s.t + d - i, s.u + i}] = s.c;
    if (s.t > 0) dt_cols[c][{s.t - 1 + d - i, s.u + i}] = s.c * s.t;
    if (s.u > 0) du_cols[c][{s.t + d - i, s.u - 1 + i}] = s.c * s.u;
  }
  for (int c = 0; c < n; ++c) {
    for (const auto& [k, v] : mul_cols[c]) mono_rows.emplace(k, mono_rows.size());
    for (const auto& [k, v] : dt_cols[c]) dmono_rows.emplace(k, dmono_rows.size());
    for (const auto& [k, v] : du_cols[c]) dmono_rows.emplace(k, dmono_rows.size());
  }
  RatMat constraints;
  auto push_rows = [&](const std::vector<std::map<std::pair<int, int>, Rat>>& cols,
                       const std::map<std::pair<int, int>, size_t>& rows) {
    RatMat block(rows.size(), RatVec(n, Rat(0)));
    for (int c = 0; c < n; ++c)
      for (const auto& [k, v] : cols[c]) block[rows.at(k)][c] = v;
    for (auto& r : block) constraints.push_back(std::move(r));
  };
  push_rows(mul_cols, mono_rows);
  push_rows(dt_cols, dmono_rows);
  push_rows(du_cols, dmono_rows);
  int kernel_dim = n - rank(constraints);
  if (kernel_dim != d - 1)
    rep.fail({"intersection dimension", std::to_string(kernel_dim), std::to_string(d - 1), ""});
  // Each candidate Q * a_{i-1} - eu * a_i + q * a_{i+1} lies in the kernel.
  Rat mid = m == Mutation::designated ? Rat(1) : Rat(-1);
  std::vector<SymElement> span;
  for (int i = 1; i <= d - 1; ++i) {
    SymElement z = SymElement::generator(d, kSymQQ) * SymElement::generator(d, sym_a(i - 1)) +
                   (SymElement::generator(d, kSymEu) * SymElement::generator(d, sym_a(i))).scale(mid) +
                   SymElement::generator(d, kSymQ) * SymElement::generator(d, sym_a(i + 1));
    span.push_back(z);
    V2Poly mu = to_tu(z);
    if (!mu.empty())
      rep.fail({"multiplication map kills candidate i=" + std::to_string(i), z.to_string(), "0",
                ""});
    // Derivation maps: apply d/dt, d/du on the sharp factor only.
    for (int which = 0; which < 2; ++which) {
      V2Poly img;
      for (const auto& [e, coef] : z.terms()) {
        int g = e[kSymQ] ? kSymQ : e[kSymQQ] ? kSymQQ : kSymEu;
        int ai = -1;
        for (int ii = 0; ii <= d; ++ii)
          if (e[sym_a(ii)]) ai = ii;
        auto s = v2_of_sharp(g);
        int td = which == 0 ? s.t : s.u;
        if (td == 0) continue;
        int nt = s.t + d - ai - (which == 0 ? 1 : 0);
        int nu = s.u + ai - (which == 1 ? 1 : 0);
        auto key = std::make_pair(nt, nu);
        img[key] += coef * s.c * td;
        if (img[key] == 0) img.erase(key);
      }
      if (!img.empty())
        rep.fail({"derivation map kills candidate i=" + std::to_string(i), z.to_string(), "0", ""});
    }
  }
  // The candidates are independent and span the kernel.
  std::map<std::vector<uint8_t>, size_t> rows;
  RatMat a = sym_matrix(span, rows);
  if (rank(std::move(a)) != d - 1)
    rep.fail({"candidate span rank", "", std::to_string(d - 1), ""});
  return rep;
}

CheckReport verify_sl2_operator_relations(int d) {
  CheckReport rep{"sl2_operator_relations", d};
  for (int idx = 0; idx < d + 4; ++idx) {
    SymElement g = SymElement::generator(d, idx);
    SymElement he = sl2_act(1, sl2_act(0, g)) - sl2_act(0, sl2_act(1, g));
    if (he != sl2_act(0, g).scale(Rat(2)))
      rep.fail({"[h,e] = 2e on generator " + std::to_string(idx), he.to_string(),
                sl2_act(0, g).scale(Rat(2)).to_string(), ""});
    SymElement hf = sl2_act(1, sl2_act(2, g)) - sl2_act(2, sl2_act(1, g));
    if (hf != sl2_act(2, g).scale(Rat(-2)))
      rep.fail({"[h,f] = -2f on generator " + std::to_string(idx), hf.to_string(),
                sl2_act(2, g).scale(Rat(-2)).to_string(), ""});
    SymElement ef = sl2_act(0, sl2_act(2, g)) - sl2_act(2, sl2_act(0, g));
    if (ef != sl2_act(1, g))
      rep.fail({"[e,f] = h on generator " + std::to_string(idx), ef.to_string(),
                sl2_act(1, g).to_string(), ""});
  }
  return rep;
}

CheckReport verify_sl2_oracle(Session& s) {
  int d = s.d();
  CheckReport rep{"sl2_oracle", d};
  Algebra& B = s.h1();
  // Central elements corresponding to the symbols.
  std::vector<HElement> central;
  central.push_back(B.central_q());
  central.push_back(B.central_Q());
  central.push_back(B.euler());
  for (int i = 0; i <= d; ++i) central.push_back(B.central_a(i));
  // xi acts through the bracket with Q, eu, -q respectively.
  std::vector<HElement> actors = {B.central_Q(), B.euler(), B.central_q().scale(Rat(-1))};
  const char* names[3] = {"e", "h", "f"};
  for (int xi = 0; xi < 3; ++xi) {
    for (int idx = 0; idx < d + 4; ++idx) {
      HElement got = s.poisson(actors[xi], central[idx]);
      SymElement expected = sl2_act(xi, SymElement::generator(d, idx));
      HElement want;
      for (const auto& [e, c] : expected.terms()) {
        int which = -1;
        for (int k = 0; k < d + 4; ++k)
          if (e[k] == 1) which = k;
        want += central[which].scale(c);
      }
      if (got != want)
        rep.fail({std::string(names[xi]) + " . generator " + std::to_string(idx),
                  render_truncated(got), render_truncated(want), render_truncated(got - want)});
    }
  }
  return rep;
}

CheckReport verify_hermite_dimensions(int bound) {
  CheckReport rep{"hermite_dimensions", bound};
  for (int m = 1; m <= bound; ++m)
    for (int n = 1; n <= bound; ++n) {
      long lhs = binom(n + m, m);  // dim Sym^m(C^{n+1})
      long rhs = binom(m + n, n);  // dim Sym^n(C^{m+1})
      if (lhs != rhs)
        rep.fail({"dim Sym^" + std::to_string(m) + "(Sym^" + std::to_string(n) + ") equality",
                  std::to_string(lhs), std::to_string(rhs), ""});
    }
  return rep;
}

std::array<Rat, 4> moment(const std::vector<Rat>& point) {
  if (point.size() < 3) throw std::invalid_argument("moment needs at least (q, Q, e)");
  return {point[2], point[1], -point[0], -point[2]};
}

}  // namespace cmdih
