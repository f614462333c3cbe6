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

#include "dihedral.hpp"

#include <stdexcept>

namespace cmdih {

namespace {
int mod(int x, int d) {
  int r = x % d;
  return r < 0 ? r + d : r;
}
}  // namespace

GroupElement identity(int d) { return GroupElement{d, false, 0}; }
GroupElement rotation(int d, int k) { return GroupElement{d, false, mod(k, d)}; }
GroupElement reflection(int d, int i) { return GroupElement{d, true, mod(i, d)}; }

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.d != h.d) throw std::invalid_argument("mixed dihedral orders");
  int d = g.d;
  if (!g.reflection && !h.reflection) return rotation(d, g.index + h.index);
  if (!g.reflection && h.reflection) return reflection(d, h.index + g.index);
  if (g.reflection && !h.reflection) return reflection(d, g.index - h.index);
  return rotation(d, g.index - h.index);
}

GroupElement inverse(const GroupElement& g) {
  return g.reflection ? g : rotation(g.d, -g.index);
}

GroupElement longest_element(int d) {
  GroupElement s = reflection(d, 0), t = reflection(d, 1);
  GroupElement st = compose(s, t);
  GroupElement w = identity(d);
  if (d % 2 == 1) {
    w = t;
    for (int i = 0; i < (d - 1) / 2; ++i) w = compose(w, st);
  } else {
    for (int i = 0; i < d / 2; ++i) w = compose(w, st);
  }
  return w;
}

GroupElement tau_conjugate(const GroupElement& g) {
  return g.reflection ? reflection(g.d, 1 - g.index) : rotation(g.d, -g.index);
}

std::pair<long, Mono4> act_mono(const GroupElement& g, const Mono4& m) {
  if (g.reflection) {
    long e = mod(g.index * (m.b - m.a + m.g - m.h), g.d);
    return {e, Mono4{m.b, m.a, m.h, m.g}};
  }
  long e = mod(g.index * (m.a - m.b - m.g + m.h), g.d);
  return {e, m};
}

GroupElement element_from_wcode(int d, uint32_t code) {
  if (code >= 256) return reflection(d, static_cast<int>(code - 256));
  return rotation(d, static_cast<int>(code));
}

std::string to_string(const GroupElement& g) {
  if (g.reflection) return "s[" + std::to_string(g.index) + "]";
  if (g.index == 0) return "1";
  return "c[" + std::to_string(g.index) + "]";
}

std::vector<GroupElement> all_elements(int d) {
  std::vector<GroupElement> v;
  for (int k = 0; k < d; ++k) v.push_back(rotation(d, k));
  for (int i = 0; i < d; ++i) v.push_back(reflection(d, i));
  return v;
}

std::array<Cyclotomic, 4> matrix_of(const GroupElement& g) {
  int m = 2 * g.d;
  Cyclotomic z0 = Cyclotomic::zero(m);
  if (g.reflection) {
    // (0, zeta^i / zeta^-i, 0) with zeta = zeta_{2d}^2.
    return {z0, Cyclotomic::root_power(m, 2 * g.index), Cyclotomic::root_power(m, -2 * g.index),
            z0};
  }
  return {Cyclotomic::root_power(m, 2 * g.index), z0, z0,
          Cyclotomic::root_power(m, -2 * g.index)};
}

namespace {
std::array<Cyclotomic, 4> mat_mul(const std::array<Cyclotomic, 4>& A,
                                  const std::array<Cyclotomic, 4>& B) {
  return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
          A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
}
}  // namespace

void dihedral_self_test(int d) {
  auto elems = all_elements(d);
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      auto prod = matrix_of(compose(g, h));
      auto ref = mat_mul(matrix_of(g), matrix_of(h));
      if (prod != ref) throw std::logic_error("dihedral composition does not match matrices");
    }
  }
  // tau = (0, sqrt(zeta) / sqrt(zeta)^-1, 0) with sqrt(zeta) = zeta_{2d}.
  int m = 2 * d;
  std::array<Cyclotomic, 4> tau = {Cyclotomic::zero(m), Cyclotomic::root_power(m, 1),
                                   Cyclotomic::root_power(m, -1), Cyclotomic::zero(m)};
  for (const auto& g : elems) {
    auto conj = mat_mul(mat_mul(tau, matrix_of(g)), tau);  // tau is an involution
    if (conj != matrix_of(tau_conjugate(g)))
      throw std::logic_error("tau conjugation does not match matrices");
    if (!(tau_conjugate(tau_conjugate(g)) == g))
      throw std::logic_error("tau conjugation is not an involution");
  }
}

}  // namespace cmdih
