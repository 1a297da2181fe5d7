// Copyright 2026 The coherence-toolkit developers
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>

#include "core/errors.hpp"
#include "core/verification.hpp"

using namespace coh;

TEST_SUITE("verification") {

TEST_CASE("small sweep passes at the default tolerance") {
  VerifyOptions options;
  options.dim_lo = 2;
  options.dim_hi = 3;
  options.trials = 3;
  options.seed = 7;
  const auto summary = run_verification(options);
  CHECK(summary.all_passed());
  CHECK(summary.identities.size() >= 15);
  for (const auto& id : summary.identities) {
    INFO(id.name, " residual ", id.max_residual, " tol ", id.tolerance);
    CHECK(id.passed());
    CHECK(id.count >= 1);
  }
}

TEST_CASE("an unattainable tolerance fails") {
  VerifyOptions options;
  options.dim_lo = 2;
  options.dim_hi = 2;
  options.trials = 1;
  options.tol = 1e-16;
  CHECK_FALSE(run_verification(options).all_passed());
}

TEST_CASE("range and trial validation") {
  VerifyOptions options;
  options.dim_lo = 1;
  CHECK_THROWS_AS(run_verification(options), Error);
  options.dim_lo = 2;
  options.dim_hi = 7;
  CHECK_THROWS_AS(run_verification(options), Error);
  options.dim_hi = 4;
  options.trials = 0;
  CHECK_THROWS_AS(run_verification(options), Error);
}

}  // TEST_SUITE
