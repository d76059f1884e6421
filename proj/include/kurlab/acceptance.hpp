// Copyright 2026 The kurlab Authors
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

#pragma once

// End-to-end acceptance checks with one verdict per criterion.

#include <string>
#include <vector>

namespace kurlab {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// Set only when the criterion fails for a fully explained, documented reason: the
  /// threshold itself is inconsistent with the model's exact closed form. Such a line still
  /// prints FAIL.
  bool known_unattainable = false;
  std::string analysis;
};

struct AcceptanceSummary {
  std::vector<CriterionResult> results;
  std::vector<std::string> notes;

  bool all_passed() const;
  /// True when every failure is a documented unattainable criterion.
  bool only_known_failures() const;
  std::string render() const;
};

AcceptanceSummary run_acceptance();

}  // namespace kurlab
