// Copyright 2026 The stinespring authors
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

#include <map>
#include <string>

namespace stinespring {

/// Outcome of one check. `passed` is always `residual <= tolerance`; a NaN
/// residual fails.
struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  int samples = 1;
  std::map<std::string, std::string> details;

  static VerificationReport make(std::string name, double residual,
                                 double tolerance, int samples = 1);
};

}  // namespace stinespring
