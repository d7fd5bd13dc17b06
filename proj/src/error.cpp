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

#include "stinespring/error.hpp"

namespace stinespring {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::shape: return "shape error";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::size: return "size error";
    case ErrorCode::numerical: return "numerical error";
    case ErrorCode::unsupported_method: return "unsupported method";
    case ErrorCode::not_cp: return "not completely positive";
    case ErrorCode::parse: return "parse error";
  }
  return "error";
}

}  // namespace stinespring
