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

// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "uqm/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  std::string suite = "all";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      suite = argv[i];
    }
  }
  const uqm::AcceptanceReport r = uqm::run_acceptance(suite, seed);
  std::cout << uqm::format_report(r);
  return r.passed() ? 0 : 1;
}
