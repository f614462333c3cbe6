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

#ifndef CMDIH_SCALAR_HPP
#define CMDIH_SCALAR_HPP

#include <cstdint>
#include <map>
#include <string>

#include "cyclotomic.hpp"

namespace cmdih {

/// Session parameters shared by all ring elements: the dihedral order d
/// (the coefficient field is Q(zeta_{2d})) and the nilpotency order of the
/// deformation variable t (t^t_order = 0).
struct Ring {
  int d = 0;
  int t_order = 1;
  int m() const { return 2 * d; }
  bool operator==(const Ring& o) const { return d == o.d && t_order == o.t_order; }
};

/// Element of Q(zeta_m)[a][t]/(t^N): a sparse sum of cyclotomic coefficients
/// times a^i t^j, with j < N. The parameter a is a formal indeterminate;
/// specializing it is an explicit operation. No zero coefficients are stored
/// and t-exponents >= N are dropped by every operation, so representations
/// are canonical. Default-constructed scalars are a universal zero that
/// combines with any ring.
class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(const Ring& r) { return Scalar(r.m(), r.t_order); }
  static Scalar rational(const Rat& v, const Ring& r);
  static Scalar cyclotomic(const Cyclotomic& v, int t_order);
  static Scalar one(const Ring& r) { return rational(Rat(1), r); }
  /// a^k
  static Scalar a_power(int k, const Ring& r);
  /// t^k (zero when k >= t_order)
  static Scalar t_power(int k, const Ring& r);

  bool is_zero() const { return terms_.empty(); }
  int order() const { return m_; }
  int t_order() const { return t_order_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar operator*(const Rat& r) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar times_a(int k) const;
  Scalar times_t(int k) const;
  Scalar times_root(long k) const;  ///< multiply by zeta_m^k
  Scalar times_cyc(const Cyclotomic& z) const;

  /// Substitutes an exact rational for a.
  Scalar specialize_a(const Rat& value) const;
  /// The coefficient of t^k, returned as a t-free scalar in the same ring.
  Scalar t_coefficient(int k) const;
  /// Same value re-tagged with a new truncation order (terms with
  /// t-exponent >= the new order are dropped).
  Scalar with_t_order(int new_t_order) const;

  /// True when the value is a single a^0 t^0 term (or zero).
  bool is_pure_cyclotomic() const;
  /// True when additionally the cyclotomic part is rational.
  bool is_pure_rational() const;
  Cyclotomic cyclotomic_value(int m_hint) const;  ///< requires is_pure_cyclotomic
  Rat rational_value() const;                     ///< requires is_pure_rational
  /// Inverse of a unit scalar (single cyclotomic a^0 t^0 term). Throws
  /// std::domain_error otherwise.
  Scalar inverse() const;

  std::string to_string() const;

  /// Terms keyed by (a_exp << 8 | t_exp).
  const std::map<uint16_t, Cyclotomic>& terms() const { return terms_; }
  int max_a_exp() const;
  int min_a_exp() const;
  /// Divides every term by a^k; throws if some term has a-exponent < k.
  Scalar shift_a_down(int k) const;

 private:
  Scalar(int m, int t_order) : m_(m), t_order_(t_order) {}
  void insert_term(uint16_t key, const Cyclotomic& c);
  // m_ == 0 marks the universal zero.
  int m_ = 0;
  int t_order_ = 0;
  std::map<uint16_t, Cyclotomic> terms_;
};

inline uint16_t scalar_key(int a_exp, int t_exp) {
  return static_cast<uint16_t>((a_exp << 8) | t_exp);
}

}  // namespace cmdih

#endif
