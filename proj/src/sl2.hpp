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

#ifndef CMDIH_SL2_HPP
#define CMDIH_SL2_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "verify.hpp"

namespace cmdih {

/// Element of the free commutative algebra Sym(E) on the d+4 generator
/// symbols, ordered (q, Q, eu, a_0, ..., a_d). Star-monomials stay
/// unevaluated: a_0 * a_2 and a_1 * a_1 are distinct elements.
class SymElement {
 public:
  explicit SymElement(int d = 0) : d_(d) {}
  static SymElement generator(int d, int idx);

  int d() const { return d_; }
  int nsyms() const { return d_ + 4; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<uint8_t>, Rat>& terms() const { return terms_; }
  void add_term(const std::vector<uint8_t>& exps, const Rat& c);

  SymElement operator-() const;
  SymElement operator+(const SymElement& o) const;
  SymElement operator-(const SymElement& o) const;
  SymElement operator*(const SymElement& o) const;  ///< the star product
  SymElement scale(const Rat& r) const;
  bool operator==(const SymElement& o) const { return d_ == o.d_ && terms_ == o.terms_; }
  bool operator!=(const SymElement& o) const { return !(*this == o); }

  /// Total star-degree of the highest term; -1 for zero.
  int star_degree() const;

  std::string to_string() const;

 private:
  int d_;
  std::map<std::vector<uint8_t>, Rat> terms_;
};

/// Symbol indices in the fixed order.
constexpr int kSymQ = 0;   // q
constexpr int kSymQQ = 1;  // Q
constexpr int kSymEu = 2;  // eu
inline int sym_a(int i) { return 3 + i; }

/// Homogeneous polynomial in the V_2 coordinates (t, u) over Q.
using V2Poly = std::map<std::pair<int, int>, Rat>;

/// Universal evaluation Sym(E) -> Sym(V_2) through the identifications
/// q -> t^2/2, eu -> tu, Q -> u^2/2, a_i -> t^{d-i} u^i. The maps
/// epsilon_{m,n} and the multiplication map on the mixed component are all
/// restrictions of this evaluation.
V2Poly to_tu(const SymElement& z);

/// epsilon_{m,n} on a star-homogeneous input of degree m over degree-n
/// symbols (n = 2 selects {q, eu, Q}, n = d the a-block). Throws on degree
/// mismatch.
V2Poly epsilon(int m, int n, const SymElement& z);

/// The derivation action of sl2 on Sym(E); xi = 0,1,2 for e, h, f. On the
/// generators: e.q = -eu, e.eu = -2Q, e.a_j = (j-d) a_{j+1}, h.q = -2q,
/// h.Q = 2Q, h.a_j = (2j-d) a_j, f.Q = -eu, f.eu = -2q, f.a_j = -j a_{j-1}.
SymElement sl2_act(int xi, const SymElement& z);

/// The d(d-1)/2 elements a_{i-1} * a_{j+1} - a_i * a_j for 1 <= i <= j <= d-1,
/// in (i, j) lexicographic order.
std::vector<SymElement> kernel_basis_2d(int d);

/// The image of the (i,j) kernel basis element under the correspondence:
/// q^{d-j-1} * Q^{i-1} * Psi_{j-i}(eu, q, Q) evaluated with star products.
SymElement rho_basis_image(int d, int i, int j);

/// Psi evaluated with star products at (eu, q, Q).
SymElement psi_star(int d, const PsiPoly& p);

/// Linear extension of the basis assignment to any z in the kernel span;
/// throws when z is outside the span.
SymElement rho(int d, const SymElement& z);

/// Rank of the kernel family is d(d-1)/2, each member maps to zero under the
/// evaluation, and dim Sym^2(Sym^d V_2) - (2d+1) matches.
CheckReport verify_kernel_basis(int d);

/// The star-family q^{d-j-1} * Q^{i-1} * Psi_{j-i} is a basis of
/// Sym^{d-2}(E^sharp).
CheckReport verify_sym_sharp_basis(int d);

/// rho intertwines the sl2 action: rho(xi.b) = xi.rho(b) for xi in {e,f,h}
/// and every kernel basis element, plus exact dimension bookkeeping. The
/// designated mutation shifts the q-exponent in the assignment.
CheckReport verify_rho_equivariance(int d, Mutation m = Mutation::none);

/// In the mixed component E^sharp (x) E_d: the intersection of the kernel of
/// the multiplication map with the kernels of the two coordinate-derivation
/// maps equals the span of Q * a_{i-1} - eu * a_i + q * a_{i+1}. The
/// designated mutation flips the middle sign.
CheckReport verify_zi_intrinsic(int d, Mutation m = Mutation::none);

/// Operator identities [h,e] = 2e, [h,f] = -2f, [e,f] = h on all generators.
CheckReport verify_sl2_operator_relations(int d);

/// The derivation table agrees with the first-order deformation brackets of
/// the corresponding central elements.
CheckReport verify_sl2_oracle(Session& s);

/// dim Sym^m(Sym^n V_2) = dim Sym^n(Sym^m V_2) as binomials, m, n <= bound.
CheckReport verify_hermite_dimensions(int bound);

/// The moment matrix ((e, Q), (-q, -e)) at a point (q, Q, e, a_0, ..).
std::array<Rat, 4> moment(const std::vector<Rat>& point);

}  // namespace cmdih

#endif
