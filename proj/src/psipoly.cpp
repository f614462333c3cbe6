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

#include "psipoly.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

#include "linalg.hpp"

namespace cmdih {

namespace {
uint32_t pack3(int i, int j, int k) {
  return (static_cast<uint32_t>(i) << 16) | (static_cast<uint32_t>(j) << 8) |
         static_cast<uint32_t>(k);
}
std::array<int, 3> unpack3(uint32_t key) {
  return {static_cast<int>(key >> 16), static_cast<int>((key >> 8) & 0xff),
          static_cast<int>(key & 0xff)};
}
}  // namespace

PsiPoly PsiPoly::monomial(int i, int j, int k, const Rat& c) {
  PsiPoly p;
  p.add_term(i, j, k, c);
  return p;
}

void PsiPoly::add_term(int i, int j, int k, const Rat& c) {
  if (c == 0) return;
  uint32_t key = pack3(i, j, k);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PsiPoly PsiPoly::operator-() const {
  PsiPoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, Rat(-c));
  return p;
}

PsiPoly PsiPoly::operator+(const PsiPoly& o) const {
  PsiPoly p = *this;
  for (const auto& [k, c] : o.terms_) {
    auto e = unpack3(k);
    p.add_term(e[0], e[1], e[2], c);
  }
  return p;
}

PsiPoly PsiPoly::operator-(const PsiPoly& o) const { return *this + (-o); }

PsiPoly PsiPoly::operator*(const PsiPoly& o) const {
  PsiPoly p;
  for (const auto& [k1, c1] : terms_) {
    auto e1 = unpack3(k1);
    for (const auto& [k2, c2] : o.terms_) {
      auto e2 = unpack3(k2);
      p.add_term(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], c1 * c2);
    }
  }
  return p;
}

PsiPoly PsiPoly::scale(const Rat& r) const {
  PsiPoly p;
  if (r == 0) return p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, Rat(c * r));
  return p;
}

PsiPoly PsiPoly::derivative(int v) const {
  PsiPoly p;
  for (const auto& [k, c] : terms_) {
    auto e = unpack3(k);
    if (e[v] == 0) continue;
    Rat nc = c * e[v];
    e[v] -= 1;
    p.add_term(e[0], e[1], e[2], nc);
  }
  return p;
}

bool PsiPoly::is_homogeneous(int degree) const {
  for (const auto& [k, c] : terms_) {
    auto e = unpack3(k);
    if (e[0] + e[1] + e[2] != degree) return false;
  }
  return true;
}

int PsiPoly::total_degree() const {
  int best = -1;
  for (const auto& [k, c] : terms_) {
    auto e = unpack3(k);
    best = std::max(best, e[0] + e[1] + e[2]);
  }
  return best;
}

bool PsiPoly::is_monic_in_T(int degree) const {
  auto it = terms_.find(pack3(degree, 0, 0));
  if (it == terms_.end() || it->second != 1) return false;
  for (const auto& [k, c] : terms_)
    if (unpack3(k)[0] > degree) return false;
  return true;
}

bool PsiPoly::has_integer_coefficients() const {
  for (const auto& [k, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

PsiPoly PsiPoly::restrict_T_axis() const {
  PsiPoly p;
  for (const auto& [k, c] : terms_) {
    auto e = unpack3(k);
    if (e[1] == 0 && e[2] == 0) p.add_term(e[0], 0, 0, c);
  }
  return p;
}

std::string PsiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto e = unpack3(it->first);
    std::string mono;
    auto var = [&mono](const char* name, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (exp > 1) mono += "^" + std::to_string(exp);
    };
    var("T", e[0]);
    var("T1", e[1]);
    var("T2", e[2]);
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

const PsiPoly& psi(int i) {
  if (i < 0) throw std::invalid_argument("psi index must be nonnegative");
  static std::mutex mu;
  static std::vector<PsiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(PsiPoly::monomial(0, 0, 0, Rat(1)));  // Psi_0 = 1
    cache.push_back(PsiPoly::monomial(1, 0, 0, Rat(1)));  // Psi_1 = T
  }
  PsiPoly T = PsiPoly::monomial(1, 0, 0, Rat(1));
  PsiPoly TT = PsiPoly::monomial(0, 1, 1, Rat(1));
  while (static_cast<int>(cache.size()) <= i) {
    size_t n = cache.size();
    cache.push_back(T * cache[n - 1] - TT * cache[n - 2]);
  }
  return cache[i];
}

bool verify_psi_closed_form(int i, const Ring& r, bool mutated) {
  CommPoly lhs = substitute(psi(i), gen_eu0(r), gen_q(r), gen_Q(r), r);
  CommPoly xX = CommPoly::monomial(Mono4{1, 0, 1, 0}, Scalar::one(r));
  CommPoly yY = CommPoly::monomial(Mono4{0, 1, 0, 1}, Scalar::one(r));
  CommPoly rhs = divide_exact(xX.pow(i + 1) - yY.pow(i + 1), xX - yY);
  if (mutated) rhs += CommPoly::constant(Scalar::one(r));
  return lhs == rhs;
}

bool verify_psi_derivatives(int i, bool mutated) {
  if (i < 1) throw std::invalid_argument("derivative identity needs i >= 1");
  Rat factor(i + 1 + (mutated ? 1 : 0));
  PsiPoly Tp = PsiPoly::monomial(0, 1, 0, Rat(1));
  PsiPoly Tpp = PsiPoly::monomial(0, 0, 1, Rat(1));
  PsiPoly T = PsiPoly::monomial(1, 0, 0, Rat(1));
  const PsiPoly& p = psi(i);
  PsiPoly lhs1 = Tp.scale(Rat(2)) * p.derivative(0) + T * p.derivative(2);
  PsiPoly rhs1 = (Tp * psi(i - 1)).scale(factor);
  PsiPoly lhs2 = Tpp.scale(Rat(2)) * p.derivative(0) + T * p.derivative(1);
  PsiPoly rhs2 = (Tpp * psi(i - 1)).scale(factor);
  return lhs1 == rhs1 && lhs2 == rhs2;
}

CommPoly substitute(const PsiPoly& p, const CommPoly& f, const CommPoly& g, const CommPoly& h,
                    const Ring& ring) {
  // Power caches keyed by exponent.
  std::vector<CommPoly> fp{CommPoly::constant(Scalar::one(ring))};
  std::vector<CommPoly> gp = fp, hp = fp;
  auto power = [](std::vector<CommPoly>& cache, const CommPoly& base, int e) -> const CommPoly& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  CommPoly out;
  for (const auto& [k, c] : p.terms()) {
    auto e = unpack3(k);
    CommPoly term = power(fp, f, e[0]) * power(gp, g, e[1]) * power(hp, h, e[2]);
    out += term.scale(c);
  }
  return out;
}

std::vector<std::array<int, 3>> homogeneous_monomials(int k) {
  std::vector<std::array<int, 3>> v;
  for (int i = k; i >= 0; --i)
    for (int j = k - i; j >= 0; --j) v.push_back({i, j, k - i - j});
  return v;
}

namespace {
// Column vector of p in the monomial basis of degree k.
RatVec vectorize(const PsiPoly& p, const std::vector<std::array<int, 3>>& monos) {
  std::map<uint32_t, size_t> index;
  for (size_t i = 0; i < monos.size(); ++i)
    index[pack3(monos[i][0], monos[i][1], monos[i][2])] = i;
  RatVec v(monos.size(), Rat(0));
  for (const auto& [key, c] : p.terms()) {
    auto it = index.find(key);
    if (it == index.end()) throw std::invalid_argument("polynomial is not homogeneous of degree k");
    v[it->second] = c;
  }
  return v;
}

std::vector<std::pair<int, int>> basis_index_pairs(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= k; ++i)
    for (int j = i; j <= k; ++j) pairs.emplace_back(i, j);
  return pairs;
}

RatMat basis_matrix(int k, const std::vector<std::array<int, 3>>& monos) {
  auto pairs = basis_index_pairs(k);
  RatMat cols;
  for (auto [i, j] : pairs) {
    PsiPoly b = PsiPoly::monomial(0, k - j, i, Rat(1)) * psi(j - i);
    cols.push_back(vectorize(b, monos));
  }
  // Transpose to rows = monomials, columns = family members.
  RatMat a(monos.size(), RatVec(pairs.size(), Rat(0)));
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t r = 0; r < monos.size(); ++r) a[r][c] = cols[c][r];
  return a;
}
}  // namespace

std::map<std::pair<int, int>, Rat> basis_coordinates(const PsiPoly& p, int k) {
  if (!p.is_homogeneous(k)) throw std::invalid_argument("basis_coordinates: non-homogeneous input");
  auto monos = homogeneous_monomials(k);
  RatMat a = basis_matrix(k, monos);
  auto x = solve(std::move(a), vectorize(p, monos));
  if (!x) throw std::logic_error("degree-k family failed to span; basis property violated");
  auto pairs = basis_index_pairs(k);
  std::map<std::pair<int, int>, Rat> out;
  for (size_t c = 0; c < pairs.size(); ++c)
    if ((*x)[c] != 0) out[pairs[c]] = (*x)[c];
  return out;
}

bool psi_basis_full_rank(int k) {
  auto monos = homogeneous_monomials(k);
  return rank(basis_matrix(k, monos)) == static_cast<int>(monos.size());
}

bool psi_substitution_injective(int k, const Ring& ring) {
  auto monos = homogeneous_monomials(k);
  // Columns: images of the T-monomials in CommPoly, vectorized over the
  // CommPoly monomials that occur.
  std::map<uint32_t, size_t> row_index;
  std::vector<CommPoly> images;
  CommPoly eu0 = gen_eu0(ring), q = gen_q(ring), Q = gen_Q(ring);
  for (const auto& e : monos) {
    CommPoly img = eu0.pow(e[0]);
    if (e[1]) img = img * q.pow(e[1]);
    if (e[2]) img = img * Q.pow(e[2]);
    images.push_back(img);
    for (const auto& [key, c] : img.terms())
      row_index.emplace(key, row_index.size());
  }
  RatMat a(row_index.size(), RatVec(monos.size(), Rat(0)));
  for (size_t c = 0; c < images.size(); ++c) {
    for (const auto& [key, s] : images[c].terms()) {
      if (!s.is_pure_rational()) throw std::logic_error("unexpected irrational coefficient");
      a[row_index[key]][c] = s.rational_value();
    }
  }
  return rank(std::move(a)) == static_cast<int>(monos.size());
}

std::optional<PsiPoly> solve_in_eu_q_Q(const CommPoly& target, int k, const Ring& ring) {
  auto monos = homogeneous_monomials(k);
  std::map<uint32_t, size_t> row_index;
  std::vector<CommPoly> images;
  CommPoly eu0 = gen_eu0(ring), q = gen_q(ring), Q = gen_Q(ring);
  for (const auto& e : monos) {
    CommPoly img = eu0.pow(e[0]);
    if (e[1]) img = img * q.pow(e[1]);
    if (e[2]) img = img * Q.pow(e[2]);
    images.push_back(img);
    for (const auto& [key, c] : img.terms()) row_index.emplace(key, row_index.size());
  }
  for (const auto& [key, c] : target.terms()) {
    if (!c.is_pure_rational()) return std::nullopt;
    if (row_index.find(key) == row_index.end()) return std::nullopt;
  }
  RatMat a(row_index.size(), RatVec(monos.size(), Rat(0)));
  RatVec b(row_index.size(), Rat(0));
  for (size_t c = 0; c < images.size(); ++c)
    for (const auto& [key, s] : images[c].terms()) a[row_index[key]][c] = s.rational_value();
  for (const auto& [key, c] : target.terms()) b[row_index[key]] = c.rational_value();
  auto x = solve(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  PsiPoly out;
  for (size_t c = 0; c < monos.size(); ++c)
    out.add_term(monos[c][0], monos[c][1], monos[c][2], (*x)[c]);
  return out;
}

}  // namespace cmdih
