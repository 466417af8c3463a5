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

// Prints one line per acceptance criterion and fails if any criterion fails.
// Set ATF_QUICK=1 for reduced sample counts.

#include <cstdlib>
#include <iostream>

#include "atf/validation.hpp"

int main() {
    atf::ValidationOptions opts;
    const char* quick = std::getenv("ATF_QUICK");
    opts.quick = quick != nullptr && *quick != '\0' && *quick != '0';
    int failures = 0;
    for (const auto& r : atf::run_acceptance(opts)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.property << ": observed=" << r.observed
                  << " bound=" << r.bound << " | " << r.detail << " (" << r.seconds << " s)" << std::endl;
        failures += r.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria met" : "acceptance: criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
