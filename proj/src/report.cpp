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

#include "stinespring/report.hpp"

#include <utility>

namespace stinespring {

VerificationReport VerificationReport::make(std::string name, double residual,
                                            double tolerance, int samples) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.samples = samples;
  r.passed = residual <= tolerance;  // false for NaN
  return r;
}

}  // namespace stinespring
