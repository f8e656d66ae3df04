// Copyright 2026 <project authors>
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

#ifndef UQM_ACCEPTANCE_HPP
#define UQM_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace uqm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AcceptanceReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> results;
  bool passed() const;
};

// all, usd, comparison, coherent, ui, recovery, noise, channels,
// measurements, properties
std::vector<std::string> acceptance_suites();
AcceptanceReport run_acceptance(const std::string& suite, std::uint64_t seed);
// One "[PASS] n name: detail" line per criterion.
std::string format_report(const AcceptanceReport& r);

}  // namespace uqm

#endif  // UQM_ACCEPTANCE_HPP
