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

#include "commpoly.hpp"

#include <stdexcept>

namespace cmdih {

CommPoly CommPoly::monomial(const Mono4& m, const Scalar& c) {
  CommPoly p;
  if (!c.is_zero()) p.terms_.emplace(pack_mono(m), c);
  return p;
}

CommPoly CommPoly::variable(int v, const Ring& r, int e) {
  Mono4 m;
  switch (v) {
    case 0: m.a = e; break;
    case 1: m.b = e; break;
    case 2: m.g = e; break;
    case 3: m.h = e; break;
    default: throw std::invalid_argument("variable index out of range");
  }
  return monomial(m, Scalar::one(r));
}

void CommPoly::add_term(uint32_t key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly CommPoly::operator-() const {
  CommPoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
  return p;
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly p = *this;
  for (const auto& [k, c] : o.terms_) p.add_term(k, c);
  return p;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CommPoly CommPoly::operator-(const CommPoly& o) const { return *this + (-o); }

CommPoly CommPoly::operator*(const CommPoly& o) const {
  CommPoly p;
  for (const auto& [k1, c1] : terms_) {
    Mono4 m1 = unpack_mono(k1);
    for (const auto& [k2, c2] : o.terms_) {
      Mono4 m2 = unpack_mono(k2);
      Mono4 m{m1.a + m2.a, m1.b + m2.b, m1.g + m2.g, m1.h + m2.h};
      p.add_term(pack_mono(m), c1 * c2);
    }
  }
  return p;
}

CommPoly CommPoly::scale(const Scalar& c) const {
  CommPoly p;
  for (const auto& [k, v] : terms_) p.add_term(k, v * c);
  return p;
}

CommPoly CommPoly::scale(const Rat& r) const {
  CommPoly p;
  if (r == 0) return p;
  for (const auto& [k, v] : terms_) p.terms_.emplace(k, v * r);
  return p;
}

CommPoly CommPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  if (e == 0) {
    if (terms_.empty()) throw std::invalid_argument("0^0 of the empty polynomial");
    const Scalar& s = terms_.begin()->second;
    Ring r{s.order() / 2, s.t_order()};
    return constant(Scalar::one(r));
  }
  CommPoly r = *this;
  for (int i = 1; i < e; ++i) r = r * (*this);
  return r;
}

CommPoly CommPoly::derivative(int v) const {
  CommPoly p;
  for (const auto& [k, c] : terms_) {
    Mono4 m = unpack_mono(k);
    int e = v == 0 ? m.a : v == 1 ? m.b : v == 2 ? m.g : m.h;
    if (e == 0) continue;
    Mono4 n = m;
    (v == 0 ? n.a : v == 1 ? n.b : v == 2 ? n.g : n.h) -= 1;
    p.add_term(pack_mono(n), c * Rat(e));
  }
  return p;
}

CommPoly CommPoly::specialize_a(const Rat& value) const {
  CommPoly p;
  for (const auto& [k, c] : terms_) p.add_term(k, c.specialize_a(value));
  return p;
}

int CommPoly::total_degree() const {
  int best = -1;
  for (const auto& [k, c] : terms_) {
    Mono4 m = unpack_mono(k);
    best = std::max(best, m.a + m.b + m.g + m.h);
  }
  return best;
}

bool CommPoly::is_bihomogeneous(int p, int q) const {
  for (const auto& [k, c] : terms_) {
    Mono4 m = unpack_mono(k);
    if (m.a + m.b != p || m.g + m.h != q) return false;
  }
  return true;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending lexicographic order on (x, y, X, Y) exponents.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Mono4 m = unpack_mono(it->first);
    std::string mono;
    auto var = [&mono](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", m.a);
    var("y", m.b);
    var("X", m.g);
    var("Y", m.h);
    std::string coef = it->second.to_string();
    bool neg = false;
    if (!coef.empty() && coef[0] == '-' && coef.find(" + ") == std::string::npos &&
        coef.find(" - ") == std::string::npos) {
      neg = true;
      coef = coef.substr(1);
    } else if (coef.find(" + ") != std::string::npos || coef.find(" - ") != std::string::npos) {
      coef = "(" + coef + ")";
    }
    std::string term;
    if (mono.empty())
      term = coef;
    else if (coef == "1")
      term = mono;
    else
      term = coef + "*" + mono;
    if (first) {
      out += (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

CommPoly poisson_vv(const CommPoly& f, const CommPoly& g) {
  CommPoly r = f.derivative(0) * g.derivative(2);
  r += -(f.derivative(2) * g.derivative(0));
  r += f.derivative(1) * g.derivative(3);
  r += -(f.derivative(3) * g.derivative(1));
  return r;
}

CommPoly divide_exact(const CommPoly& f, const CommPoly& g) {
  if (g.is_zero()) throw ExactDivisionError("division by the zero polynomial");
  CommPoly rem = f, quot;
  uint32_t gk = g.terms().rbegin()->first;
  Mono4 gm = unpack_mono(gk);
  Scalar glead_inv = g.terms().rbegin()->second.inverse();
  while (!rem.is_zero()) {
    auto lead = rem.terms().rbegin();
    Mono4 fm = unpack_mono(lead->first);
    Mono4 qm{fm.a - gm.a, fm.b - gm.b, fm.g - gm.g, fm.h - gm.h};
    if (qm.a < 0 || qm.b < 0 || qm.g < 0 || qm.h < 0)
      throw ExactDivisionError("polynomial division is not exact");
    CommPoly qterm = CommPoly::monomial(qm, lead->second * glead_inv);
    quot += qterm;
    rem = rem - qterm * g;
  }
  return quot;
}

CommPoly act(const GroupElement& w, const CommPoly& f) {
  CommPoly r;
  for (const auto& [k, c] : f.terms()) {
    auto [e, m] = act_mono(w, unpack_mono(k));
    r.add_term(pack_mono(m), c.times_root(2 * e));  // zeta = zeta_{2d}^2
  }
  return r;
}

bool is_w_invariant(const CommPoly& f, int d) {
  return act(reflection(d, 0), f) == f && act(reflection(d, 1), f) == f;
}

CommPoly gen_q(const Ring& r) { return CommPoly::monomial(Mono4{1, 1, 0, 0}, Scalar::one(r)); }
CommPoly gen_Q(const Ring& r) { return CommPoly::monomial(Mono4{0, 0, 1, 1}, Scalar::one(r)); }

CommPoly gen_eu0(const Ring& r) {
  CommPoly p = CommPoly::monomial(Mono4{1, 0, 1, 0}, Scalar::one(r));
  p += CommPoly::monomial(Mono4{0, 1, 0, 1}, Scalar::one(r));
  return p;
}

CommPoly gen_a0(int i, const Ring& r) {
  if (i < 0 || i > r.d) throw std::out_of_range("a_{i,0} index out of range");
  CommPoly p = CommPoly::monomial(Mono4{r.d - i, 0, 0, i}, Scalar::one(r));
  p += CommPoly::monomial(Mono4{0, r.d - i, i, 0}, Scalar::one(r));
  return p;
}

CommPoly gen_eu0_round(int i, const Ring& r) {
  if (i < 0) throw std::out_of_range("eu0_round index out of range");
  if (i == 0) return CommPoly::constant(Scalar::rational(Rat(2), r));
  CommPoly p = CommPoly::monomial(Mono4{i, 0, i, 0}, Scalar::one(r));
  p += CommPoly::monomial(Mono4{0, i, 0, i}, Scalar::one(r));
  return p;
}

CommPoly gen_eu0_square(int i, const Ring& r) {
  if (i < 0) throw std::out_of_range("eu0_square index out of range");
  // sum_{j=0}^{i} (xX)^{i-j} (yY)^j
  CommPoly p;
  for (int j = 0; j <= i; ++j)
    p += CommPoly::monomial(Mono4{i - j, j, i - j, j}, Scalar::one(r));
  return p;
}

CommPoly invariant_generator(const std::string& name, int index, const Ring& r) {
  if (name == "q") return gen_q(r);
  if (name == "Q") return gen_Q(r);
  if (name == "eu0") return gen_eu0(r);
  if (name == "a0") return gen_a0(index, r);
  if (name == "eu0_round") return gen_eu0_round(index, r);
  if (name == "eu0_square") return gen_eu0_square(index, r);
  throw std::invalid_argument("unknown invariant generator: " + name);
}

}  // namespace cmdih
