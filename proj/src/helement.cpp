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

#include "helement.hpp"

#include <stdexcept>

namespace cmdih {

void HElement::add_term(uint64_t key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

HElement HElement::operator-() const {
  HElement h;
  for (const auto& [k, c] : terms) h.terms.emplace(k, -c);
  return h;
}

HElement HElement::operator+(const HElement& o) const {
  HElement h = *this;
  for (const auto& [k, c] : o.terms) h.add_term(k, c);
  return h;
}

HElement& HElement::operator+=(const HElement& o) {
  for (const auto& [k, c] : o.terms) add_term(k, c);
  return *this;
}

HElement HElement::operator-(const HElement& o) const { return *this + (-o); }

HElement HElement::scale(const Scalar& c) const {
  HElement h;
  for (const auto& [k, v] : terms) h.add_term(k, v * c);
  return h;
}

HElement HElement::scale(const Rat& r) const {
  HElement h;
  if (r == 0) return h;
  for (const auto& [k, v] : terms) h.terms.emplace(k, v * r);
  return h;
}

HElement HElement::specialize_a(const Rat& value) const {
  HElement h;
  for (const auto& [k, v] : terms) h.add_term(k, v.specialize_a(value));
  return h;
}

HElement HElement::t_coefficient(int k) const {
  HElement h;
  for (const auto& [key, v] : terms) h.add_term(key, v.t_coefficient(k));
  return h;
}

HElement HElement::with_t_order(int t_order) const {
  HElement h;
  for (const auto& [key, v] : terms) h.add_term(key, v.with_t_order(t_order));
  return h;
}

bool HElement::is_t_free() const {
  for (const auto& [key, v] : terms)
    for (const auto& [sk, c] : v.terms())
      if ((sk & 0xff) != 0) return false;
  return true;
}

int HElement::total_degree() const {
  int best = -1;
  for (const auto& [key, v] : terms) {
    Mono4 m = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
    best = std::max(best, m.a + m.b + m.g + m.h);
  }
  return best;
}

HElement HElement::shift_a_down(int k) const {
  HElement h;
  for (const auto& [key, v] : terms) h.terms.emplace(key, v.shift_a_down(k));
  return h;
}

int HElement::min_a_exp() const {
  int best = 1 << 14;
  for (const auto& [key, v] : terms) best = std::min(best, v.min_a_exp());
  return terms.empty() ? 0 : best;
}

std::string HElement::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    uint32_t wc = static_cast<uint32_t>(key >> 32);
    Mono4 m = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
    std::string piece = "(" + c.to_string() + ")";
    auto var = [&piece](const char* name, int e) {
      if (e == 0) return;
      piece += "*";
      piece += name;
      if (e > 1) piece += "^" + std::to_string(e);
    };
    var("x", m.a);
    var("y", m.b);
    if (wc != 0) {
      piece += wc >= 256 ? "*s[" + std::to_string(wc - 256) + "]"
                         : "*c[" + std::to_string(wc) + "]";
    }
    var("X", m.g);
    var("Y", m.h);
    if (first) {
      out += piece;
      first = false;
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

Algebra::Algebra(int d, int t_order, bool run_self_test) : ring_{d, t_order} {
  if (d < 2) throw std::invalid_argument("dihedral order parameter d must be >= 2");
  if (t_order < 1) throw std::invalid_argument("t_order must be >= 1");
  if (run_self_test) self_test();
}

HElement Algebra::one() const { return scalar(Scalar::one(ring_)); }

HElement Algebra::scalar(const Scalar& c) const {
  HElement h;
  if (!c.is_zero()) h.terms.emplace(pack_hkey(0, 0), c);
  return h;
}

HElement Algebra::variable(int v) const {
  Mono4 m;
  (v == 0 ? m.a : v == 1 ? m.b : v == 2 ? m.g : m.h) = 1;
  HElement h;
  h.terms.emplace(pack_hkey(0, pack_mono(m)), Scalar::one(ring_));
  return h;
}

HElement Algebra::from_group(const GroupElement& w) const {
  HElement h;
  h.terms.emplace(pack_hkey(wcode(w), 0), Scalar::one(ring_));
  return h;
}

HElement Algebra::from_comm(const CommPoly& f) const {
  HElement h;
  for (const auto& [k, c] : f.terms()) h.terms.emplace(pack_hkey(0, k), c);
  return h;
}

HElement Algebra::right_mul_reflection(const HElement& u, int i) const {
  GroupElement si = reflection(ring_.d, i);
  HElement out;
  for (const auto& [key, c] : u.terms) {
    uint32_t wc = static_cast<uint32_t>(key >> 32);
    Mono4 m = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
    GroupElement w = element_from_wcode(ring_.d, wc);
    GroupElement nw = compose(w, si);
    // g(X,Y) s_i = s_i (s_i.g): swap X,Y exponents, pick up zeta^{i(g-h)}.
    long e = static_cast<long>(i) * (m.g - m.h);
    Mono4 nm{m.a, m.b, m.h, m.g};
    out.add_term(pack_hkey(wcode(nw), pack_mono(nm)), c.times_root(2 * e));
  }
  return out;
}

namespace {
HElement shift_left_exponents(const HElement& u, int dx, int dy) {
  HElement out;
  for (const auto& [key, c] : u.terms) {
    Mono4 m = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
    m.a += dx;
    m.b += dy;
    out.terms.emplace(pack_hkey(static_cast<uint32_t>(key >> 32), pack_mono(m)), c);
  }
  return out;
}
}  // namespace

// Normal form of X^g Y^h * x^al y^be, the only noncommutative swap needed to
// multiply PBW terms. Memoized; the recursion peels one x (then one y) and
// applies the commutation rules.
const HElement& Algebra::swap_mono(int g, int h, int al, int be) const {
  uint32_t key = pack_mono(Mono4{g, h, al, be});
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = swap_cache_.find(key);
  if (it != swap_cache_.end()) return it->second;

  HElement out;
  const Scalar one = Scalar::one(ring_);
  const Scalar a = Scalar::a_power(1, ring_);
  if (al == 0 && be == 0) {
    out.terms.emplace(pack_hkey(0, pack_mono(Mono4{0, 0, g, h})), one);
  } else if (al > 0) {
    // P x = x P - t dP/dX + a sum_i Delta_i(P) s_i, then times x^{al-1} y^be.
    out = shift_left_exponents(swap_mono(g, h, al - 1, be), 1, 0);
    if (g >= 1 && ring_.t_order > 1) {
      const HElement& dt = swap_mono(g - 1, h, al - 1, be);
      out += dt.scale(-(Scalar::t_power(1, ring_) * Rat(g)));
    }
    if (g != h) {
      int diff = g > h ? g - h : h - g;
      for (int k = 0; k < diff; ++k) {
        const HElement& inner = g > h ? swap_mono(g - 1 - k, h + k, be, al - 1)
                                      : swap_mono(h - 1 - k, g + k, be, al - 1);
        // s_i x^{al-1} y^be = zeta^{i(be-al+1)} x^be y^{al-1} s_i.
        int base = be - al + 1 + k + (g > h ? 0 : g - h);
        Scalar sign_a = g > h ? a : -a;
        for (int i = 0; i < ring_.d; ++i) {
          HElement piece = right_mul_reflection(inner, i);
          out += piece.scale(sign_a.times_root(2L * i * base));
        }
      }
    }
  } else {
    // P y = y P - t dP/dY - a sum_i zeta^i Delta_i(P) s_i, then times y^{be-1}.
    out = shift_left_exponents(swap_mono(g, h, 0, be - 1), 0, 1);
    if (h >= 1 && ring_.t_order > 1) {
      const HElement& dt = swap_mono(g, h - 1, 0, be - 1);
      out += dt.scale(-(Scalar::t_power(1, ring_) * Rat(h)));
    }
    if (g != h) {
      int diff = g > h ? g - h : h - g;
      for (int k = 0; k < diff; ++k) {
        const HElement& inner =
            g > h ? swap_mono(g - 1 - k, h + k, be - 1, 0) : swap_mono(h - 1 - k, g + k, be - 1, 0);
        int base = be + k + (g > h ? 0 : g - h);
        Scalar sign_a = g > h ? -a : a;
        for (int i = 0; i < ring_.d; ++i) {
          HElement piece = right_mul_reflection(inner, i);
          out += piece.scale(sign_a.times_root(2L * i * base));
        }
      }
    }
  }
  auto [pos, inserted] = swap_cache_.emplace(key, std::move(out));
  return pos->second;
}

HElement Algebra::mul(const HElement& u, const HElement& v) const {
  HElement out;
  for (const auto& [k1, c1] : u.terms) {
    uint32_t wc1 = static_cast<uint32_t>(k1 >> 32);
    Mono4 m1 = unpack_mono(static_cast<uint32_t>(k1 & 0xffffffffu));
    GroupElement w1 = element_from_wcode(ring_.d, wc1);
    for (const auto& [k2, c2] : v.terms) {
      uint32_t wc2 = static_cast<uint32_t>(k2 >> 32);
      Mono4 m2 = unpack_mono(static_cast<uint32_t>(k2 & 0xffffffffu));
      GroupElement w2 = element_from_wcode(ring_.d, wc2);
      GroupElement w2inv = inverse(w2);
      Scalar c12 = c1 * c2;
      const HElement& s = swap_mono(m1.g, m1.h, m2.a, m2.b);
      for (const auto& [ks, cs] : s.terms) {
        uint32_t wcs = static_cast<uint32_t>(ks >> 32);
        Mono4 ms = unpack_mono(static_cast<uint32_t>(ks & 0xffffffffu));
        // x^{a1} y^{b1} w1 [ x^{as} y^{bs} ws X^{gs} Y^{hs} ] w2 X^{g2} Y^{h2}
        auto [e1, f1] = act_mono(w1, Mono4{ms.a, ms.b, 0, 0});
        auto [e2, g1] = act_mono(w2inv, Mono4{0, 0, ms.g, ms.h});
        GroupElement w = compose(compose(w1, element_from_wcode(ring_.d, wcs)), w2);
        Mono4 mono{m1.a + f1.a, m1.b + f1.b, g1.g + m2.g, g1.h + m2.h};
        out.add_term(pack_hkey(wcode(w), pack_mono(mono)),
                     (c12 * cs).times_root(2 * (e1 + e2)));
      }
    }
  }
  return out;
}

HElement Algebra::commutator(const HElement& u, const HElement& v) const {
  return mul(u, v) - mul(v, u);
}

CommPoly Algebra::trunc(const HElement& h) const {
  CommPoly p;
  for (const auto& [key, c] : h.terms) {
    if ((key >> 32) != 0) continue;
    p.add_term(static_cast<uint32_t>(key & 0xffffffffu), c.t_coefficient(0));
  }
  return p;
}

bool Algebra::is_central(const HElement& h) const {
  if (ring_.t_order != 1)
    throw std::invalid_argument("centrality is a t = 0 notion; use the t_order 1 context");
  for (int v = 0; v < 4; ++v)
    if (!commutator(h, variable(v)).is_zero()) return false;
  for (int i = 0; i <= 1; ++i)
    if (!commutator(h, from_group(reflection(ring_.d, i))).is_zero()) return false;
  return true;
}

HElement Algebra::euler() const {
  HElement h;
  h.terms.emplace(pack_hkey(0, pack_mono(Mono4{1, 0, 1, 0})), Scalar::one(ring_));
  h.terms.emplace(pack_hkey(0, pack_mono(Mono4{0, 1, 0, 1})), Scalar::one(ring_));
  Scalar a = Scalar::a_power(1, ring_);
  for (int i = 0; i < ring_.d; ++i)
    h.terms.emplace(pack_hkey(wcode(reflection(ring_.d, i)), 0), a);
  return h;
}

CommPoly Algebra::gamma_lower(int i, int j) const {
  // (x^{d-j} - zeta^{ij} y^{d-j}) / (x - zeta^{-i} y)
  int d = ring_.d;
  CommPoly num = CommPoly::variable(0, ring_, 1).pow(d - j);
  num += CommPoly::monomial(Mono4{0, d - j, 0, 0}, -Scalar::one(ring_).times_root(2L * i * j));
  CommPoly den = CommPoly::variable(0, ring_, 1);
  den += CommPoly::monomial(Mono4{0, 1, 0, 0}, -Scalar::one(ring_).times_root(-2L * i));
  return divide_exact(num, den);
}

CommPoly Algebra::gamma_upper(int i, int j) const {
  // (X^j - zeta^{ij} Y^j) / (X - zeta^i Y)
  if (j == 0) return CommPoly();
  CommPoly num = CommPoly::variable(2, ring_, 1).pow(j);
  num += CommPoly::monomial(Mono4{0, 0, 0, j}, -Scalar::one(ring_).times_root(2L * i * j));
  CommPoly den = CommPoly::variable(2, ring_, 1);
  den += CommPoly::monomial(Mono4{0, 0, 0, 1}, -Scalar::one(ring_).times_root(2L * i));
  return divide_exact(num, den);
}

HElement Algebra::central_a(int j) const {
  int d = ring_.d;
  if (j < 0 || j > d) throw std::out_of_range("central element index out of range");
  HElement h;
  h.terms.emplace(pack_hkey(0, pack_mono(Mono4{d - j, 0, 0, j})), Scalar::one(ring_));
  h.terms.emplace(pack_hkey(0, pack_mono(Mono4{0, d - j, j, 0})), Scalar::one(ring_));
  Scalar minus_a = -Scalar::a_power(1, ring_);
  for (int i = 0; i < d; ++i) {
    CommPoly lo = gamma_lower(i, j);
    if (lo.is_zero()) continue;
    CommPoly up = gamma_upper(i, j);
    if (up.is_zero()) continue;
    Scalar pref = minus_a.times_root(-2L * i * j);
    uint32_t wc = wcode(reflection(d, i));
    for (const auto& [kl, cl] : lo.terms()) {
      Mono4 ml = unpack_mono(kl);
      for (const auto& [ku, cu] : up.terms()) {
        Mono4 mu = unpack_mono(ku);
        Mono4 m{ml.a, ml.b, mu.g, mu.h};
        h.add_term(pack_hkey(wc, pack_mono(m)), pref * cl * cu);
      }
    }
  }
  return h;
}

HElement Algebra::central_q() const {
  HElement h;
  h.terms.emplace(pack_hkey(0, pack_mono(Mono4{1, 1, 0, 0})), Scalar::one(ring_));
  return h;
}

HElement Algebra::central_Q() const {
  HElement h;
  h.terms.emplace(pack_hkey(0, pack_mono(Mono4{0, 0, 1, 1})), Scalar::one(ring_));
  return h;
}

HElement Algebra::mul_qQ(const HElement& h, int b, int g) const {
  HElement out;
  for (const auto& [key, c] : h.terms) {
    Mono4 m = unpack_mono(static_cast<uint32_t>(key & 0xffffffffu));
    m.a += b;
    m.b += b;
    m.g += g;
    m.h += g;
    out.terms.emplace(pack_hkey(static_cast<uint32_t>(key >> 32), pack_mono(m)), c);
  }
  return out;
}

HElement Algebra::eval_at_eu_q_Q(const PsiPoly& p) const {
  HElement out;
  for (const auto& [key, c] : p.terms()) {
    int te = static_cast<int>(key >> 16);
    int qe = static_cast<int>((key >> 8) & 0xff);
    int Qe = static_cast<int>(key & 0xff);
    HElement pw;
    {
      std::lock_guard<std::mutex> lock(euler_mu_);
      if (euler_pow_cache_.empty()) euler_pow_cache_.push_back(one());
      while (static_cast<int>(euler_pow_cache_.size()) <= te)
        euler_pow_cache_.push_back(mul(euler_pow_cache_.back(), euler()));
      pw = euler_pow_cache_[te];
    }
    out += mul_qQ(pw, qe, Qe).scale(c);
  }
  return out;
}

void Algebra::self_test() const {
  int d = ring_.d;
  dihedral_self_test(d);
  // The action convention is locked by s_i (X - zeta^i Y) = -(X - zeta^i Y),
  // which makes every Demazure quotient polynomial.
  for (int i = 0; i < d; ++i) {
    CommPoly f = CommPoly::variable(2, ring_, 1);
    f += CommPoly::monomial(Mono4{0, 0, 0, 1}, -Scalar::one(ring_).times_root(2L * i));
    if (act(reflection(d, i), f) != -f)
      throw EngineError("reflection convention self-test failed");
  }
  // Base commutation relations.
  Scalar a = Scalar::a_power(1, ring_);
  auto refl_sum = [&](long zmult, const Scalar& coef) {
    HElement h;
    for (int i = 0; i < d; ++i)
      h.add_term(pack_hkey(wcode(reflection(d, i)), 0), coef.times_root(2L * i * zmult));
    return h;
  };
  HElement t_one = ring_.t_order > 1 ? scalar(Scalar::t_power(1, ring_)) : zero();
  struct Case {
    int v1, v2;
    HElement expected;
  };
  std::vector<Case> cases;
  cases.push_back({0, 2, t_one + refl_sum(0, -a)});   // [x,X] = t - a sum s_i
  cases.push_back({0, 3, refl_sum(-1, a)});           // [x,Y] = a sum zeta^-i s_i
  cases.push_back({1, 2, refl_sum(1, a)});            // [y,X] = a sum zeta^i s_i
  cases.push_back({1, 3, t_one + refl_sum(0, -a)});   // [y,Y] = t - a sum s_i
  for (const auto& c : cases) {
    if (commutator(variable(c.v1), variable(c.v2)) != c.expected)
      throw EngineError("base commutation relation self-test failed");
  }
  // [x,P] for higher P against the closed Demazure formula.
  std::vector<Mono4> ps = {Mono4{0, 0, 2, 0}, Mono4{0, 0, 1, 1}, Mono4{0, 0, 0, 2},
                           Mono4{0, 0, 3, 0}};
  for (const Mono4& pm : ps) {
    CommPoly P = CommPoly::monomial(pm, Scalar::one(ring_));
    HElement expected;
    if (ring_.t_order > 1) {
      CommPoly dP = P.derivative(2);
      expected += from_comm(dP).scale(Scalar::t_power(1, ring_));
    }
    for (int i = 0; i < d; ++i) {
      CommPoly den = CommPoly::variable(2, ring_, 1);
      den += CommPoly::monomial(Mono4{0, 0, 0, 1}, -Scalar::one(ring_).times_root(2L * i));
      CommPoly delta = divide_exact(P - act(reflection(d, i), P), den);
      // Delta_i(P) s_i = s_i (s_i . Delta_i(P))
      CommPoly moved = act(reflection(d, i), delta);
      for (const auto& [k, c] : moved.terms())
        expected.add_term(pack_hkey(wcode(reflection(d, i)), k), c * (-a));
    }
    if (commutator(variable(0), from_comm(P)) != expected)
      throw EngineError("generalized commutation rule self-test failed");
  }
  // Deformation sign pin: {q, Q} = +eu.
  if (ring_.t_order > 1) {
    HElement com = commutator(central_q(), central_Q());
    if (!com.t_coefficient(0).is_zero() || com.t_coefficient(1) != euler())
      throw EngineError("deformation convention self-test failed: {q,Q} != eu");
  }
}

Session::Session(int d, int t_order, bool self_test) : d_(d) {
  if (t_order < 2) throw std::invalid_argument("session t_order must be >= 2");
  h0_ = std::make_unique<Algebra>(d, 1, self_test);
  h1_ = std::make_unique<Algebra>(d, t_order, self_test);
}

HElement import_element(const Algebra& target, const HElement& h) {
  return h.with_t_order(target.t_order());
}

HElement Session::poisson(const HElement& z1, const HElement& z2) {
  if (!z1.is_t_free() || !z2.is_t_free())
    throw std::invalid_argument("poisson bracket inputs must be t-free lifts");
  if (!h0().is_central(import_element(h0(), z1)) || !h0().is_central(import_element(h0(), z2)))
    throw NonCentralError("poisson bracket requires elements central at t = 0");
  HElement com = h1().commutator(z1, z2);
  if (!com.t_coefficient(0).is_zero())
    throw EngineError("t^0 part of a commutator of central elements did not vanish");
  return com.t_coefficient(1);
}

const HElement& Session::bracket_a(int i, int j) {
  if (i > j) throw std::invalid_argument("bracket_a expects i <= j");
  std::lock_guard<std::mutex> lock(bracket_mu_);
  auto key = std::make_pair(i, j);
  auto it = bracket_cache_.find(key);
  if (it != bracket_cache_.end()) return it->second;
  HElement b = poisson(h1().central_a(i), h1().central_a(j));
  return bracket_cache_.emplace(key, std::move(b)).first->second;
}

}  // namespace cmdih
