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

#ifndef CMDIH_RATIONAL_HPP
#define CMDIH_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cmdih {

/// Exact rational number. All coefficient arithmetic in the library is
/// built on top of this type; no floating point appears anywhere.
using Rat = mpq_class;

/// Renders as "p" or "p/q" with q > 0.
inline std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : s) {
    if (ch != '-' && ch != '/' && (ch < '0' || ch > '9'))
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace cmdih

#endif
