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

#include <iosfwd>
#include <string>
#include <vector>

namespace stinespring::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // domain error or a failed verification
  kBadInput = 2,     // unreadable or malformed input, bad flags
};

/// Entry point shared by the executable and the tests. `args` includes the
/// program name. Human-readable output goes to `out`/`err`; JSON reports go
/// to the paths named by the flags ("-" meaning `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stinespring::cli
