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

#ifndef CMDIH_SUITES_HPP
#define CMDIH_SUITES_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cmdih {

struct RunConfig {
  int d = 5;
  std::optional<Rat> a_value;  ///< empty = formal parameter (lie/tau default to 1)
  int t_order = 2;
  std::vector<std::string> suites{"all"};
  int jobs = 1;
  int max_terms = 50;
  bool timing = false;
  int d_ceiling = 8;
};

using Json = nlohmann::ordered_json;

const std::vector<std::string>& known_suites();

/// Runs the selected suites and assembles the versioned report. The output is
/// byte-identical across runs with the same config; timing fields appear only
/// when requested and live outside the checks array.
Json run_report(const RunConfig& cfg);

bool report_all_pass(const Json& report);

/// Text rendering of the bracket of two named generators (q, Q, eu, a0..ad)
/// computed by the first-order deformation.
std::string bracket_text(int d, const std::string& g1, const std::string& g2);

/// Structured form of the same bracket: one entry per PBW term.
Json bracket_json(int d, const std::string& g1, const std::string& g2);

/// Single-subject reports used by the narrower command surfaces.
Json lie_report(int d, const Rat& a_value);
Json fixed_report(int d, const Rat& a_value);
Json sl2_report(int d);

}  // namespace cmdih

#endif
