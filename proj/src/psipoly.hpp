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

#ifndef CMDIH_PSIPOLY_HPP
#define CMDIH_PSIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commpoly.hpp"
#include "rational.hpp"

namespace cmdih {

/// Sparse polynomial in the three indeterminates T, T', T'' over Q, rendered
/// with the variable names T, T1, T2.
class PsiPoly {
 public:
  PsiPoly() = default;
  static PsiPoly monomial(int i, int j, int k, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<uint32_t, Rat>& terms() const { return terms_; }
  void add_term(int i, int j, int k, const Rat& c);

  PsiPoly operator-() const;
  PsiPoly operator+(const PsiPoly& o) const;
  PsiPoly operator-(const PsiPoly& o) const;
  PsiPoly operator*(const PsiPoly& o) const;
  PsiPoly scale(const Rat& r) const;
  bool operator==(const PsiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const PsiPoly& o) const { return !(*this == o); }

  /// Partial derivative; v = 0 for T, 1 for T', 2 for T''.
  PsiPoly derivative(int v) const;

  bool is_homogeneous(int degree) const;
  int total_degree() const;  // -1 for zero
  /// Monic of the stated degree as a polynomial in T.
  bool is_monic_in_T(int degree) const;
  bool has_integer_coefficients() const;
  /// Evaluation at (T, 0, 0): the coefficient sequence of pure T powers.
  PsiPoly restrict_T_axis() const;

  std::string to_string() const;

 private:
  std::map<uint32_t, Rat> terms_;  // key = (T_exp<<16)|(T'_exp<<8)|T''_exp
};

/// The i-th member of the Chebyshev-like family: Psi_0 = 1, Psi_1 = T and
/// Psi_{i+1} = T Psi_i - T'T'' Psi_{i-1}. Cached; safe for concurrent use.
const PsiPoly& psi(int i);

/// Checks Psi_i(eu_0, q, Q) (xX - yY) = (xX)^{i+1} - (yY)^{i+1} by exact
/// division inside CommPoly, i.e. the closed form of the family.
bool verify_psi_closed_form(int i, const Ring& r, bool mutated = false);

/// Checks 2T' dPsi/dT + T dPsi/dT'' = (i+1) T' Psi_{i-1} and the mirror
/// identity with T' and T'' exchanged.
bool verify_psi_derivatives(int i, bool mutated = false);

/// Substitution T -> f, T' -> g, T'' -> h inside CommPoly.
CommPoly substitute(const PsiPoly& p, const CommPoly& f, const CommPoly& g, const CommPoly& h,
                    const Ring& r);

/// Coordinates of a homogeneous p of degree k in the basis
/// (T'^{k-j} T''^i Psi_{j-i})_{0<=i<=j<=k}; exact solve. Throws on
/// non-homogeneous input.
std::map<std::pair<int, int>, Rat> basis_coordinates(const PsiPoly& p, int k);

/// Verification mode: the family above has full rank (k+1)(k+2)/2.
bool psi_basis_full_rank(int k);

/// The monomials of C[T,T',T'']_k in a fixed deterministic order.
std::vector<std::array<int, 3>> homogeneous_monomials(int k);

/// The substitution map C[T,T',T'']_k -> C[V x V*], T -> eu_0, T' -> q,
/// T'' -> Q has zero kernel in degree k (algebraic independence at desk scale).
bool psi_substitution_injective(int k, const Ring& r);

/// Finds the homogeneous F of degree k with F(eu_0, q, Q) = target, if one
/// exists; target coefficients must be rational. Returns nullopt when the
/// system is inconsistent.
std::optional<PsiPoly> solve_in_eu_q_Q(const CommPoly& target, int k, const Ring& r);

}  // namespace cmdih

#endif
