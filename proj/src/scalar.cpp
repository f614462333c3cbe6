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

#include "scalar.hpp"

#include <stdexcept>

namespace cmdih {

namespace {
void check_compatible(const Scalar& u, const Scalar& v) {
  if (u.order() != 0 && v.order() != 0 &&
      (u.order() != v.order() || u.t_order() != v.t_order()))
    throw std::invalid_argument("mixed session parameters in scalar arithmetic");
}
}  // namespace

Scalar Scalar::rational(const Rat& v, const Ring& r) {
  Scalar s(r.m(), r.t_order);
  if (v != 0) s.terms_.emplace(scalar_key(0, 0), Cyclotomic::rational(v, r.m()));
  return s;
}

Scalar Scalar::cyclotomic(const Cyclotomic& v, int t_order) {
  Scalar s(v.order(), t_order);
  if (!v.is_zero()) s.terms_.emplace(scalar_key(0, 0), v);
  return s;
}

Scalar Scalar::a_power(int k, const Ring& r) {
  Scalar s(r.m(), r.t_order);
  s.terms_.emplace(scalar_key(k, 0), Cyclotomic::one(r.m()));
  return s;
}

Scalar Scalar::t_power(int k, const Ring& r) {
  Scalar s(r.m(), r.t_order);
  if (k < r.t_order) s.terms_.emplace(scalar_key(0, k), Cyclotomic::one(r.m()));
  return s;
}

void Scalar::insert_term(uint16_t key, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    Cyclotomic sum = it->second + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum;
  }
}

Scalar Scalar::operator-() const {
  Scalar s(m_, t_order_);
  for (const auto& [k, c] : terms_) s.terms_.emplace(k, -c);
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_compatible(*this, o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Scalar s = *this;
  for (const auto& [k, c] : o.terms_) s.insert_term(k, c);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_compatible(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero() && m_ == 0) {
    *this = o;
    return *this;
  }
  if (m_ == 0) {
    m_ = o.m_;
    t_order_ = o.t_order_;
  }
  for (const auto& [k, c] : o.terms_) insert_term(k, c);
  return *this;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_compatible(*this, o);
  if (is_zero() || o.is_zero()) return Scalar();
  Scalar s(m_, t_order_);
  for (const auto& [k1, c1] : terms_) {
    int a1 = k1 >> 8, t1 = k1 & 0xff;
    for (const auto& [k2, c2] : o.terms_) {
      int a2 = k2 >> 8, t2 = k2 & 0xff;
      if (t1 + t2 >= t_order_) continue;  // t^N = 0
      s.insert_term(scalar_key(a1 + a2, t1 + t2), c1 * c2);
    }
  }
  return s;
}

Scalar Scalar::operator*(const Rat& r) const {
  if (r == 0) return Scalar();
  Scalar s(m_, t_order_);
  for (const auto& [k, c] : terms_) s.terms_.emplace(k, c * r);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_zero() && o.is_zero()) return true;
  check_compatible(*this, o);
  return terms_ == o.terms_;
}

Scalar Scalar::times_a(int k) const {
  Scalar s(m_, t_order_);
  for (const auto& [key, c] : terms_) s.terms_.emplace(scalar_key((key >> 8) + k, key & 0xff), c);
  return s;
}

Scalar Scalar::times_t(int k) const {
  Scalar s(m_, t_order_);
  for (const auto& [key, c] : terms_) {
    int te = (key & 0xff) + k;
    if (te < t_order_) s.terms_.emplace(scalar_key(key >> 8, te), c);
  }
  return s;
}

Scalar Scalar::times_root(long k) const {
  if (is_zero()) return *this;
  return times_cyc(Cyclotomic::root_power(m_, k));
}

Scalar Scalar::times_cyc(const Cyclotomic& z) const {
  if (is_zero()) return *this;
  if (z.is_zero()) return Scalar();
  Scalar s(m_, t_order_);
  for (const auto& [key, c] : terms_) s.terms_.emplace(key, c * z);
  return s;
}

Scalar Scalar::specialize_a(const Rat& value) const {
  Scalar s(m_, t_order_);
  for (const auto& [key, c] : terms_) {
    int ae = key >> 8;
    Rat f(1);
    for (int i = 0; i < ae; ++i) f *= value;
    s.insert_term(scalar_key(0, key & 0xff), c * f);
  }
  return s;
}

Scalar Scalar::t_coefficient(int k) const {
  Scalar s(m_, t_order_);
  for (const auto& [key, c] : terms_)
    if ((key & 0xff) == k) s.terms_.emplace(scalar_key(key >> 8, 0), c);
  return s;
}

Scalar Scalar::with_t_order(int new_t_order) const {
  Scalar s(m_, new_t_order);
  for (const auto& [key, c] : terms_)
    if ((key & 0xff) < new_t_order) s.terms_.emplace(key, c);
  return s;
}

bool Scalar::is_pure_cyclotomic() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

bool Scalar::is_pure_rational() const {
  return is_pure_cyclotomic() && (terms_.empty() || terms_.begin()->second.is_rational());
}

Cyclotomic Scalar::cyclotomic_value(int m_hint) const {
  if (terms_.empty()) return Cyclotomic::zero(m_ ? m_ : m_hint);
  if (!is_pure_cyclotomic()) throw std::domain_error("scalar is not a pure field element");
  return terms_.begin()->second;
}

Rat Scalar::rational_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_pure_rational()) throw std::domain_error("scalar is not rational");
  return terms_.begin()->second.rational_value();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar division by zero");
  if (!is_pure_cyclotomic())
    throw std::domain_error("scalar inverse supported for field coefficients only");
  Scalar s(m_, t_order_);
  s.terms_.emplace(scalar_key(0, 0), terms_.begin()->second.inverse());
  return s;
}

int Scalar::max_a_exp() const {
  int best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, key >> 8);
  return best;
}

int Scalar::min_a_exp() const {
  if (terms_.empty()) return 0;
  int best = 1 << 14;
  for (const auto& [key, c] : terms_) best = std::min(best, key >> 8);
  return best;
}

Scalar Scalar::shift_a_down(int k) const {
  Scalar s(m_, t_order_);
  for (const auto& [key, c] : terms_) {
    int ae = key >> 8;
    if (ae < k) throw std::domain_error("scalar not divisible by a^" + std::to_string(k));
    s.terms_.emplace(scalar_key(ae - k, key & 0xff), c);
  }
  return s;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    int ae = key >> 8, te = key & 0xff;
    std::string coef;
    bool neg = false;
    if (c.is_rational()) {
      Rat v = c.rational_value();
      neg = v < 0;
      Rat mag = neg ? Rat(-v) : v;
      coef = rat_to_string(mag);
    } else {
      coef = "(" + c.to_string() + ")";
    }
    std::string mono;
    if (ae == 1)
      mono = "a";
    else if (ae > 1)
      mono = "a^" + std::to_string(ae);
    if (te >= 1) {
      if (!mono.empty()) mono += "*";
      mono += te == 1 ? "t" : "t^" + std::to_string(te);
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

}  // namespace cmdih
