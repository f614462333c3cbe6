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

#ifndef CMDIH_CYCLOTOMIC_HPP
#define CMDIH_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace cmdih {

/// Element of the cyclotomic field Q(zeta_m), represented as the canonical
/// reduced residue modulo the m-th cyclotomic polynomial Phi_m. The coefficient
/// vector always has length phi(m), so equality of values is equality of
/// representations. Values are immutable after construction and freely
/// shareable between threads.
class Cyclotomic {
 public:
  static Cyclotomic zero(int m);
  static Cyclotomic one(int m);
  static Cyclotomic rational(const Rat& r, int m);
  /// zeta_m^k (k arbitrary, reduced mod m).
  static Cyclotomic root_power(int m, long k);

  int order() const { return m_; }
  bool is_zero() const;
  /// True when the value lies in Q, i.e. all non-constant coordinates vanish.
  bool is_rational() const;
  /// Constant coordinate; only meaningful together with is_rational().
  const Rat& rational_value() const { return c_[0]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rat& r) const;
  /// Exact field inverse via extended gcd with Phi_m. Throws on zero.
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Polynomial in "z" with ascending exponents, e.g. "1/2 + z^2".
  std::string to_string() const;

 private:
  Cyclotomic(int m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  int m_ = 0;
  std::vector<Rat> c_;
};

/// Euler phi, for the small orders used here.
int euler_phi(int m);

/// Coefficients of Phi_m, ascending, monic (length phi(m)+1).
const std::vector<Rat>& cyclotomic_polynomial(int m);

}  // namespace cmdih

#endif
