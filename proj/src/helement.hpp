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

#ifndef CMDIH_HELEMENT_HPP
#define CMDIH_HELEMENT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "psipoly.hpp"

namespace cmdih {

/// Element of the rational Cherednik algebra H_{t,c} of the dihedral group in
/// PBW normal form: a finite sum of monomials x^a y^b * w * X^g Y^h with
/// Scalar coefficients, stored flat with key (wcode(w) << 32 | packed
/// exponents). The representation is canonical and unique.
struct HElement {
  std::map<uint64_t, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(uint64_t key, const Scalar& c);
  HElement operator-() const;
  HElement operator+(const HElement& o) const;
  HElement operator-(const HElement& o) const;
  HElement& operator+=(const HElement& o);
  bool operator==(const HElement& o) const { return terms == o.terms; }
  bool operator!=(const HElement& o) const { return !(*this == o); }

  HElement scale(const Scalar& c) const;
  HElement scale(const Rat& r) const;
  HElement specialize_a(const Rat& value) const;
  /// The coefficient of t^k, t-free, same truncation order tag.
  HElement t_coefficient(int k) const;
  /// Same terms re-tagged with a new truncation order.
  HElement with_t_order(int t_order) const;
  /// Every stored scalar is t-free.
  bool is_t_free() const;
  /// Max total degree in x,y,X,Y; -1 for zero.
  int total_degree() const;
  /// Divides every coefficient by a^2 (fails if some term has a-degree < 2).
  HElement shift_a_down(int k) const;
  int min_a_exp() const;

  std::string to_string() const;
};

inline uint64_t pack_hkey(uint32_t wc, uint32_t mono) {
  return (static_cast<uint64_t>(wc) << 32) | mono;
}

struct EngineError : std::logic_error {
  using std::logic_error::logic_error;
};
struct NonCentralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Multiplication context for H_{t,c} at fixed session parameters (d, m = 2d,
/// t_order). Rewrites products to PBW normal form with the commutation rules
///   [x,P] = t dP/dX - a sum_i Delta_i(P) s_i,
///   [y,P] = t dP/dY + a sum_i zeta^i Delta_i(P) s_i,
/// for P in C[X,Y], where Delta_i(P) = (P - s_i(P))/(X - zeta^i Y), plus
/// w f = (w.f) w. Monomial swaps are memoized per context; the cache is
/// guarded for concurrent use and writes are idempotent.
class Algebra {
 public:
  Algebra(int d, int t_order, bool self_test = true);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  int d() const { return ring_.d; }
  int t_order() const { return ring_.t_order; }
  Ring ring() const { return ring_; }

  HElement zero() const { return HElement{}; }
  HElement one() const;
  HElement scalar(const Scalar& c) const;
  HElement variable(int v) const;  // 0=x 1=y 2=X 3=Y
  HElement from_group(const GroupElement& w) const;
  HElement from_comm(const CommPoly& f) const;  // f * (identity)

  HElement mul(const HElement& u, const HElement& v) const;
  HElement commutator(const HElement& u, const HElement& v) const;
  /// Identity-group-element component with t set to 0.
  CommPoly trunc(const HElement& h) const;
  /// Centrality at t = 0 against all six generators x, y, X, Y, s_0, s_1.
  /// Requires a t_order = 1 context.
  bool is_central(const HElement& h) const;

  /// eu = xX + yY + a sum_i s_i.
  HElement euler() const;
  /// a_j = x^{d-j} Y^j + y^{d-j} X^j - a sum_i zeta^{-ij} gamma_{i,j} s_i Gamma_{i,j}.
  HElement central_a(int j) const;
  HElement central_q() const;  ///< the central image of q = xy
  HElement central_Q() const;  ///< the central image of Q = XY

  /// q^b * h * Q^g; exact for central h, cheap (no rewriting).
  HElement mul_qQ(const HElement& h, int b, int g) const;
  /// Evaluation of a three-variable polynomial at (eu, q, Q) inside H_c,
  /// with cached euler powers.
  HElement eval_at_eu_q_Q(const PsiPoly& p) const;

  /// Left polynomial factors gamma_{i,j} and right factors Gamma_{i,j} of the
  /// displayed central elements, built by exact division.
  CommPoly gamma_lower(int i, int j) const;
  CommPoly gamma_upper(int i, int j) const;

 private:
  const HElement& swap_mono(int g, int h, int al, int be) const;
  HElement right_mul_reflection(const HElement& u, int i) const;
  void self_test() const;

  Ring ring_;
  mutable std::recursive_mutex mu_;
  mutable std::map<uint32_t, HElement> swap_cache_;
  mutable std::vector<HElement> euler_pow_cache_;
  mutable std::mutex euler_mu_;
};

/// A session couples the t = 0 context (relation and centrality checks) with
/// the first-order deformation context (Poisson brackets).
class Session {
 public:
  explicit Session(int d, int t_order = 2, bool self_test = true);
  int d() const { return d_; }
  Algebra& h0() { return *h0_; }
  Algebra& h1() { return *h1_; }
  const Algebra& h0() const { return *h0_; }
  const Algebra& h1() const { return *h1_; }

  /// First-order deformation bracket: checks both arguments are central at
  /// t = 0, forms the commutator in the deformation context, asserts the t^0
  /// part vanishes and returns the t^1 coefficient. Arguments and result live
  /// in the h1 context.
  HElement poisson(const HElement& z1, const HElement& z2);

  /// Cached bracket {a_i, a_j} (i < j), as an h1-context element.
  const HElement& bracket_a(int i, int j);

 private:
  int d_;
  std::unique_ptr<Algebra> h0_;
  std::unique_ptr<Algebra> h1_;
  std::map<std::pair<int, int>, HElement> bracket_cache_;
  std::mutex bracket_mu_;
};

/// Moves an element between contexts with different truncation orders.
HElement import_element(const Algebra& target, const HElement& h);

}  // namespace cmdih

#endif
