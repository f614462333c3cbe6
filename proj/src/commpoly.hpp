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

#ifndef CMDIH_COMMPOLY_HPP
#define CMDIH_COMMPOLY_HPP

#include <map>
#include <string>

#include "dihedral.hpp"
#include "scalar.hpp"

namespace cmdih {

/// Sparse polynomial in x, y, X, Y over Scalar. Keys are packed exponent
/// quadruples ordered lexicographically on (x, y, X, Y); no zero coefficients
/// are stored, so the representation is canonical.
class CommPoly {
 public:
  CommPoly() = default;
  static CommPoly monomial(const Mono4& m, const Scalar& c);
  static CommPoly constant(const Scalar& c) { return monomial(Mono4{}, c); }
  static CommPoly variable(int v, const Ring& r, int e = 1);  // v: 0=x 1=y 2=X 3=Y

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<uint32_t, Scalar>& terms() const { return terms_; }

  CommPoly operator-() const;
  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly& operator+=(const CommPoly& o);
  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  CommPoly scale(const Scalar& c) const;
  CommPoly scale(const Rat& r) const;
  CommPoly pow(int e) const;
  /// Partial derivative with respect to variable v (0=x 1=y 2=X 3=Y).
  CommPoly derivative(int v) const;
  CommPoly specialize_a(const Rat& value) const;

  /// Total degree in x,y,X,Y of the highest term; -1 for zero.
  int total_degree() const;
  /// True when every term has (x,y)-degree p and (X,Y)-degree q.
  bool is_bihomogeneous(int p, int q) const;

  void add_term(uint32_t key, const Scalar& c);

  std::string to_string() const;

 private:
  std::map<uint32_t, Scalar> terms_;
};

/// Canonical Poisson bracket on C[V x V*]:
/// {f,g} = df/dx dg/dX - df/dX dg/dx + df/dy dg/dY - df/dY dg/dy.
CommPoly poisson_vv(const CommPoly& f, const CommPoly& g);

/// Exact quotient f/g via long division in the lexicographic order. Throws
/// ExactDivisionError when the division is not exact; every division used in
/// the algebra is exact by construction, so a throw signals a convention bug.
CommPoly divide_exact(const CommPoly& f, const CommPoly& g);

struct ExactDivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Algebra automorphism from the W-action on monomials.
CommPoly act(const GroupElement& g, const CommPoly& f);

/// Membership in C[V x V*]^W; checking the generating reflections s_0, s_1 suffices.
bool is_w_invariant(const CommPoly& f, int d);

// The named invariants of Z_0.
CommPoly gen_q(const Ring& r);        ///< xy
CommPoly gen_Q(const Ring& r);        ///< XY
CommPoly gen_eu0(const Ring& r);      ///< xX + yY
CommPoly gen_a0(int i, const Ring& r);         ///< x^{d-i} Y^i + y^{d-i} X^i
CommPoly gen_eu0_round(int i, const Ring& r);  ///< (xX)^i + (yY)^i, value 2 at i = 0
CommPoly gen_eu0_square(int i, const Ring& r); ///< ((xX)^{i+1} - (yY)^{i+1})/(xX - yY)

/// Dispatcher over the generator names used by the text interfaces:
/// q, Q, eu0, a0(i), eu0_round(i), eu0_square(i).
CommPoly invariant_generator(const std::string& name, int index, const Ring& r);

}  // namespace cmdih

#endif
