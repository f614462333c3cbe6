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

#include "cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cmdih {

namespace {

// Dense univariate polynomials over Q, ascending coefficients, no trailing
// zeros (zero polynomial = empty vector).
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> poly_divrem(Poly num, const Poly& den) {
  if (den.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly q;
  if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rat(0));
  while (num.size() >= den.size()) {
    Rat c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
  }
  return {q, num};
}

// Per-order field data: Phi_m and the reduction rows for x^e, phi <= e <= 2*phi-2.
struct CycField {
  int m = 0;
  int phi = 0;
  Poly min_poly;                        // Phi_m, monic, length phi+1
  std::vector<std::vector<Rat>> red;    // red[j] = x^(phi+j) mod Phi_m, length phi
};

Poly compute_cyclotomic(int m, std::map<int, Poly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by the product of Phi_e over proper divisors e of m.
  Poly num(m + 1, Rat(0));
  num[0] = -1;
  num[m] = 1;
  Poly den{Rat(1)};
  for (int e = 1; e < m; ++e) {
    if (m % e == 0) den = poly_mul(den, compute_cyclotomic(e, cache));
  }
  auto [q, r] = poly_divrem(num, den);
  if (!r.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
  cache[m] = q;
  return q;
}

const CycField& field(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> fields;
  static std::map<int, Poly> phi_cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(m);
  if (it != fields.end()) return *it->second;
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  auto f = std::make_unique<CycField>();
  f->m = m;
  f->min_poly = compute_cyclotomic(m, phi_cache);
  f->phi = static_cast<int>(f->min_poly.size()) - 1;
  // x^phi = -(lower part of Phi), then shift-and-reduce for higher powers.
  std::vector<Rat> cur(f->phi, Rat(0));
  for (int i = 0; i < f->phi; ++i) cur[i] = -f->min_poly[i];
  f->red.push_back(cur);
  for (int e = 1; e <= f->phi - 2; ++e) {
    std::vector<Rat> next(f->phi, Rat(0));
    Rat top = cur[f->phi - 1];
    for (int i = f->phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (int i = 0; i < f->phi; ++i) next[i] += top * f->red[0][i];
    f->red.push_back(next);
    cur = next;
  }
  auto& ref = *f;
  fields[m] = std::move(f);
  return ref;
}

}  // namespace

int euler_phi(int m) { return field(m).phi; }

const std::vector<Rat>& cyclotomic_polynomial(int m) { return field(m).min_poly; }

Cyclotomic Cyclotomic::zero(int m) {
  return Cyclotomic(m, std::vector<Rat>(field(m).phi, Rat(0)));
}

Cyclotomic Cyclotomic::one(int m) { return rational(Rat(1), m); }

Cyclotomic Cyclotomic::rational(const Rat& r, int m) {
  std::vector<Rat> c(field(m).phi, Rat(0));
  c[0] = r;
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::root_power(int m, long k) {
  const CycField& f = field(m);
  k %= m;
  if (k < 0) k += m;
  std::vector<Rat> c(f.phi, Rat(0));
  if (k < f.phi) {
    c[k] = 1;
    return Cyclotomic(m, std::move(c));
  }
  // Reduce x^k by repeated shift: start from x^(phi-1) and raise.
  std::vector<Rat> cur(f.phi, Rat(0));
  cur[f.phi - 1] = 1;
  for (long e = f.phi - 1; e < k; ++e) {
    std::vector<Rat> next(f.phi, Rat(0));
    Rat top = cur[f.phi - 1];
    for (int i = f.phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (int i = 0; i < f.phi; ++i) next[i] += top * f.red[0][i];
    cur = next;
  }
  return Cyclotomic(m, std::move(cur));
}

bool Cyclotomic::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Cyclotomic(m_, std::move(c));
}

static void check_same_order(int a, int b) {
  if (a != b) throw std::invalid_argument("mixed cyclotomic orders");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same_order(m_, o.m_);
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return Cyclotomic(m_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same_order(m_, o.m_);
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return Cyclotomic(m_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same_order(m_, o.m_);
  const CycField& f = field(m_);
  int n = f.phi;
  std::vector<Rat> conv(2 * n - 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> c(conv.begin(), conv.begin() + n);
  for (int e = n; e <= 2 * n - 2; ++e) {
    if (conv[e] == 0) continue;
    const auto& row = f.red[e - n];
    for (int i = 0; i < n; ++i) c[i] += conv[e] * row[i];
  }
  return Cyclotomic(m_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * r;
  return Cyclotomic(m_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  const CycField& f = field(m_);
  // Extended Euclid over Q[x]: s*a + t*Phi = g with g a nonzero constant
  // (Phi_m is irreducible over Q), so a^-1 = s/g mod Phi.
  Poly a(c_);
  poly_trim(a);
  Poly r0 = f.min_poly, r1 = a;
  Poly s0 = {}, s1 = {Rat(1)};
  while (r1.size() > 1) {
    auto [q, r2] = poly_divrem(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("gcd with the minimal polynomial is not constant");
  Rat g = r1[0];
  std::vector<Rat> c(f.phi, Rat(0));
  for (size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] / g;
  return Cyclotomic(m_, std::move(c));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return m_ == o.m_ && c_ == o.c_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat coef = c_[i];
    bool neg = coef < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rat mag = neg ? Rat(-coef) : coef;
    std::string pow = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (pow.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += pow;
    } else {
      out += rat_to_string(mag) + "*" + pow;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace cmdih
