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

#ifndef CMDIH_VARIETY_HPP
#define CMDIH_VARIETY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"
#include "verify.hpp"

namespace cmdih {

/// Sparse polynomial over Q in the d+4 coordinates, ordered
/// (q, Q, e, a_0, ..., a_d); exponent vectors have fixed length d+4.
class VarPoly {
 public:
  explicit VarPoly(int nvars = 0) : nvars_(nvars) {}
  static VarPoly variable(int nvars, int idx);
  static VarPoly constant(int nvars, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<uint8_t>, Rat>& terms() const { return terms_; }
  void add_term(const std::vector<uint8_t>& exps, const Rat& c);

  VarPoly operator-() const;
  VarPoly operator+(const VarPoly& o) const;
  VarPoly operator-(const VarPoly& o) const;
  VarPoly operator*(const VarPoly& o) const;
  VarPoly scale(const Rat& r) const;
  VarPoly pow(int e) const;
  bool operator==(const VarPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rat evaluate(const std::vector<Rat>& point) const;
  /// Substitutes 0 for every variable with index >= first (the a-block).
  VarPoly restrict_prefix(int first) const;
  /// Degree-1 part as a coefficient vector of length nvars.
  std::vector<Rat> linear_part() const;
  int min_total_degree() const;  // of nonzero terms; -1 for zero
  /// Exact division by the monomial var^e; throws when not divisible.
  VarPoly divide_by_power(int idx, int e) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<std::vector<uint8_t>, Rat> terms_;
};

/// Coordinate names q, Q, e, a0..ad.
std::vector<std::string> coordinate_names(int d);

/// The defining polynomials (LHS - RHS) of the family of varieties cut out by
///   e a_i = q a_{i+1} + Q a_{i-1}                       (1 <= i <= d-1)
///   a_{i-1} a_{j+1} - a_i a_j = P(e^2 - 4 q Q) q^{d-j-1} Q^{i-1} Psi_{j-i}(e, q, Q)
/// for a univariate P given by ascending coefficients. The Calogero-Moser
/// case is P(T) = T - d^2 a^2.
std::vector<VarPoly> relation_system(int d, const std::vector<Rat>& P_coeffs);
std::vector<VarPoly> calogero_moser_system(int d, const Rat& a_value);

std::vector<Rat> evaluate_point(const std::vector<Rat>& point, const std::vector<VarPoly>& system);

/// d+4 minus the exact rank of the Jacobian at the origin.
int tangent_dim_origin(int d, const Rat& a_value);

/// Structure constants of the Lie algebra on the cotangent space at the
/// cuspidal point, basis (q, Q, e, a_0..a_d). Brackets are the linear parts
/// of the Poisson brackets of the coordinate generators; the {a_i, a_j}
/// entries come from the degree-1 component of a^2 Phi_{i,j}.
struct LieTable {
  int d = 0;
  Rat a_value;
  int dim = 0;
  std::vector<std::string> labels;
  // c[{i,j,k}] with i < j: [b_i, b_j] = sum_k c b_k.
  std::map<std::array<int, 3>, Rat> c;

  Rat structure(int i, int j, int k) const;  // antisymmetric lookup
  std::vector<Rat> bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
};

LieTable lie_algebra_at_origin(Session& s, const Rat& a_value);

/// Exact antisymmetry (by construction) and Jacobi over all triples.
CheckReport verify_lie_table(const LieTable& t);

struct LieClassification {
  std::string description;
  int killing_rank = -1;  // computed for d = 4
  CheckReport report;
};

/// d >= 5: verifies the sl2 triple on (Q, e, -q), the abelian ideal spanned
/// by the a-block, the weight string of ad(e) and injectivity of the raising
/// operator, returning "sl2 + irreducible abelian (dim d+1)". d = 4: computes
/// the Killing form; nondegeneracy in dimension 8 identifies sl3.
LieClassification classify_lie(const LieTable& t);

}  // namespace cmdih

#endif
