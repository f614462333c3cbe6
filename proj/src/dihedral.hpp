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

#ifndef CMDIH_DIHEDRAL_HPP
#define CMDIH_DIHEDRAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace cmdih {

/// Element of the dihedral group W of order 2d: a rotation c^k = diag(zeta^k,
/// zeta^-k) or a reflection s_i with matrix rows (0, zeta^i | zeta^-i, 0).
/// Stored abstractly as kind+index; matrices are materialized only for
/// self-tests.
struct GroupElement {
  int d = 0;
  bool reflection = false;
  int index = 0;  // reduced mod d

  bool is_identity() const { return !reflection && index == 0; }
  bool operator==(const GroupElement& o) const {
    return d == o.d && reflection == o.reflection && index == o.index;
  }
};

GroupElement identity(int d);
GroupElement rotation(int d, int k);
GroupElement reflection(int d, int i);

/// Group law matching the 2x2 matrix product:
///   s_i s_j = c^{i-j},  c^k s_j = s_{j+k},  s_j c^k = s_{j-k},  c^k c^l = c^{k+l}.
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// w_0 = t(st)^{(d-1)/2} for odd d, (st)^{d/2} for even d, with s = s_0, t = s_1.
GroupElement longest_element(int d);

/// Conjugation by the diagram automorphism: s_i -> s_{1-i}, c^k -> c^{-k}.
GroupElement tau_conjugate(const GroupElement& g);

/// Monomial exponents for x^a y^b X^g Y^h.
struct Mono4 {
  int a = 0, b = 0, g = 0, h = 0;
};

inline uint32_t pack_mono(const Mono4& m) {
  return (static_cast<uint32_t>(m.a) << 24) | (static_cast<uint32_t>(m.b) << 16) |
         (static_cast<uint32_t>(m.g) << 8) | static_cast<uint32_t>(m.h);
}
inline Mono4 unpack_mono(uint32_t k) {
  return Mono4{static_cast<int>(k >> 24), static_cast<int>((k >> 16) & 0xff),
               static_cast<int>((k >> 8) & 0xff), static_cast<int>(k & 0xff)};
}

/// Action of g on a monomial: returns the exponent e (mod d) of the zeta^e
/// coefficient and the image monomial. Conventions, locked by a startup
/// self-test: s_i x = zeta^-i y, s_i y = zeta^i x, s_i X = zeta^i Y,
/// s_i Y = zeta^-i X; c = s_1 s_0 acts by c x = zeta x, c X = zeta^-1 X.
std::pair<long, Mono4> act_mono(const GroupElement& g, const Mono4& m);

/// Sort key: rotations first (identity = 0), then reflections.
inline uint32_t wcode(const GroupElement& g) {
  return g.reflection ? 256u + static_cast<uint32_t>(g.index)
                      : static_cast<uint32_t>(g.index);
}
GroupElement element_from_wcode(int d, uint32_t code);

std::string to_string(const GroupElement& g);

/// All 2d elements in wcode order.
std::vector<GroupElement> all_elements(int d);

/// 2x2 matrix over Q(zeta_{2d}) in row-major order; entries use the embedded
/// zeta = zeta_{2d}^2.
std::array<Cyclotomic, 4> matrix_of(const GroupElement& g);

/// Exhaustive check that compose agrees with matrix multiplication and that
/// tau_conjugate agrees with conjugation by the tau matrix. Throws on failure.
void dihedral_self_test(int d);

}  // namespace cmdih

#endif
