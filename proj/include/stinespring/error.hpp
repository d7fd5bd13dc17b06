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

#include <stdexcept>
#include <string>

namespace stinespring {

enum class ErrorCode {
  shape,
  domain,
  size,
  numerical,
  unsupported_method,
  not_cp,
  parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Base class of every exception thrown by the library. The code tells the
/// CLI which exit status to use; the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define STINESPRING_DEFINE_ERROR(Name, Code)                              \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

STINESPRING_DEFINE_ERROR(ShapeError, shape)
STINESPRING_DEFINE_ERROR(DomainError, domain)
STINESPRING_DEFINE_ERROR(SizeError, size)
STINESPRING_DEFINE_ERROR(NumericalError, numerical)
STINESPRING_DEFINE_ERROR(UnsupportedMethodError, unsupported_method)
STINESPRING_DEFINE_ERROR(NotCpError, not_cp)
STINESPRING_DEFINE_ERROR(ParseError, parse)

#undef STINESPRING_DEFINE_ERROR

}  // namespace stinespring
