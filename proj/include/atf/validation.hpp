// SPDX-License-Identifier: Apache-2.0
//
// atf-relay: analysis and simulation of accumulate-then-forward energy
// harvesting relays under co-channel interference
// Copyright (C) 2026 The atf-relay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atf {

struct CheckResult {
    std::string module;    // "distributions", ..., or "acceptance"
    std::string property;  // short name; acceptance checks are "C1".."C8"
    bool passed = false;
    double observed = 0.0;
    double bound = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationOptions {
    /// Reduced sample counts. Statistical tolerances scale with the sample count;
    /// fixed tolerances that depend on it are loosened (see README).
    bool quick = false;
    /// Corrupt one transition case so the row-sum property must fail.
    bool inject_fault = false;
    std::uint64_t seed = 20160601;
};

/// The eight acceptance criteria, in order.
std::vector<CheckResult> run_acceptance(const ValidationOptions& opts);

/// Module property suites (invariants over randomized inputs).
std::vector<CheckResult> run_property_suite(const ValidationOptions& opts);

/// Property suite followed by the acceptance criteria.
std::vector<CheckResult> run_validation(const ValidationOptions& opts);

/// One line: "[PASS] module/property observed=... bound=... (detail) 1.2s".
std::string format_check(const CheckResult& r);

}  // namespace atf
