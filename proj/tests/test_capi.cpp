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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "uqm/uqm.h"

namespace {

struct Handle {
  uqm_result* r = nullptr;
  ~Handle() { uqm_result_destroy(r); }
};

double value(const uqm_result* r, const char* name) {
  double v = NAN;
  REQUIRE(uqm_result_value(r, name, &v) == UQM_OK);
  return v;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(uqm_version()) == "0.1.0");
  CHECK(std::string(uqm_status_name(UQM_OK)) != "");
  CHECK(std::string(uqm_status_name(UQM_ERR_UNSUPPORTED)) != std::string(uqm_status_name(UQM_ERR_ARGUMENT)));
}

TEST_CASE("tolerance round trip") {
  const double old = uqm_get_tolerance();
  CHECK(uqm_set_tolerance(1e-8) == UQM_OK);
  CHECK(uqm_get_tolerance() == 1e-8);
  CHECK(uqm_set_tolerance(-1.0) == UQM_ERR_ARGUMENT);
  CHECK(std::string(uqm_last_error()) != "");
  CHECK(uqm_set_tolerance(old) == UQM_OK);
}

TEST_CASE("two-state discrimination") {
  Handle h;
  REQUIRE(uqm_usd_idp(0.5, 0.5, &h.r) == UQM_OK);
  CHECK(value(h.r, "P_D") == doctest::Approx(0.5));
  bool found = false;
  for (size_t i = 0; i < uqm_result_string_count(h.r); ++i)
    if (std::string(uqm_result_string_name(h.r, i)) == "regime") {
      CHECK(std::string(uqm_result_string_at(h.r, i)) == "povm");
      found = true;
    }
  CHECK(found);
  double v = 0.0;
  CHECK(uqm_result_value(h.r, "missing", &v) != UQM_OK);
}

TEST_CASE("argument errors map to status codes") {
  Handle h;
  CHECK(uqm_usd_idp(1.5, 0.5, &h.r) == UQM_ERR_ARGUMENT);
  CHECK(h.r == nullptr);
  CHECK(uqm_usd_idp(0.5, 0.5, nullptr) == UQM_ERR_NULL);
  CHECK(uqm_meas_compare_unlabeled(3, 0.5, 100, 1, &h.r) == UQM_ERR_UNSUPPORTED);
  CHECK(uqm_figure("9.9", nullptr, nullptr, 0, 1.0, &h.r) == UQM_ERR_ARGUMENT);
  CHECK(uqm_figure("4.8", "3:0:0.1", nullptr, 0, 1.0, &h.r) == UQM_ERR_ARGUMENT);
  CHECK(uqm_acceptance("unknown-suite", 42, &h.r) == UQM_ERR_ARGUMENT);
  CHECK(std::string(uqm_last_error()).find("suite") != std::string::npos);
}

TEST_CASE("figure tables") {
  Handle h;
  REQUIRE(uqm_figure("4.8", "0:3:0.05", nullptr, 0, 1.0, &h.r) == UQM_OK);
  CHECK(uqm_result_rows(h.r) == 61);
  CHECK(uqm_result_columns(h.r) == 5);
  CHECK(std::string(uqm_result_column_name(h.r, 0)).rfind("delta", 0) == 0);
  CHECK(uqm_result_cell(h.r, 0, 1) == doctest::Approx(0.0));
  // Last row: known-state limit at delta = 3.
  CHECK(uqm_result_cell(h.r, 60, 4) == doctest::Approx(1.0 - std::exp(-4.5)).epsilon(1e-12));
  const std::string csv = uqm_result_text(h.r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 62);
  Handle again;
  REQUIRE(uqm_figure("4.8", "0:3:0.05", nullptr, 0, 1.0, &again.r) == UQM_OK);
  CHECK(std::string(uqm_result_text(again.r)) == csv);
  const std::string ids = uqm_figure_ids();
  CHECK(ids.find("4.3") != std::string::npos);
  CHECK(ids.find("C.5") != std::string::npos);
}

TEST_CASE("seeded commands are reproducible") {
  Handle a, b;
  REQUIRE(uqm_channels_fidelity(2, 0.5, 7, &a.r) == UQM_OK);
  REQUIRE(uqm_channels_fidelity(2, 0.5, 7, &b.r) == UQM_OK);
  CHECK(value(a.r, "F") == value(b.r, "F"));
  CHECK(value(a.r, "P_usd") == doctest::Approx(1.0 - value(a.r, "F")).epsilon(1e-12));
}

TEST_CASE("measurement commands") {
  Handle l, u, s;
  REQUIRE(uqm_meas_compare_labeled(2, 2000, 1, &l.r) == UQM_OK);
  CHECK(value(l.r, "P_closed") == doctest::Approx(0.5));
  REQUIRE(uqm_meas_compare_unlabeled(2, M_PI / 4.0, 2000, 1, &u.r) == UQM_OK);
  CHECK(value(u.r, "P") == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  REQUIRE(uqm_meas_audit_subspaces(&s.r) == UQM_OK);
  CHECK(uqm_result_value_count(s.r) > 0);
}

TEST_CASE("acceptance through the C interface") {
  Handle h;
  REQUIRE(uqm_acceptance("usd", 42, &h.r) == UQM_OK);
  CHECK(value(h.r, "passed") == 1.0);
  CHECK(value(h.r, "failed") == 0.0);
  CHECK(value(h.r, "criterion_1") == 1.0);
  CHECK(std::string(uqm_result_text(h.r)).find("[PASS] 1") != std::string::npos);
}

TEST_CASE("null handles are tolerated by accessors") {
  uqm_result_destroy(nullptr);
  CHECK(uqm_result_value_count(nullptr) == 0);
  CHECK(uqm_result_rows(nullptr) == 0);
}
