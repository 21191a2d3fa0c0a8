// Copyright 2026 The ffactor Authors.
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

namespace ffactor {

// Every failure raised by the library derives from Error. The kind() tag
// lets callers (the CLI, the Python bindings) map failures to exit codes
// without a dynamic_cast ladder.
enum class ErrorKind {
  kClassCViolation,
  kMalformedEdge,
  kNoSuchEdge,
  kNotAFactor,
  kInfiniteCapacityUnsupported,
  kBudgetExceeded,
  kNotDeficient,
  kNotAugmenting,
  kPropertyDoesNotHold,
  kInternalHereditaryFailure,
  kChooserFailure,
  kDeclarationViolated,
  kCapacityUnderflow,
  kParse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define FFACTOR_DEFINE_ERROR(Name, Kind)                          \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(Kind, what) {} \
  }

FFACTOR_DEFINE_ERROR(ClassCViolation, ErrorKind::kClassCViolation);
FFACTOR_DEFINE_ERROR(MalformedEdge, ErrorKind::kMalformedEdge);
FFACTOR_DEFINE_ERROR(NoSuchEdge, ErrorKind::kNoSuchEdge);
FFACTOR_DEFINE_ERROR(NotAFactor, ErrorKind::kNotAFactor);
FFACTOR_DEFINE_ERROR(InfiniteCapacityUnsupported,
                     ErrorKind::kInfiniteCapacityUnsupported);
FFACTOR_DEFINE_ERROR(BudgetExceeded, ErrorKind::kBudgetExceeded);
FFACTOR_DEFINE_ERROR(NotDeficient, ErrorKind::kNotDeficient);
FFACTOR_DEFINE_ERROR(NotAugmenting, ErrorKind::kNotAugmenting);
FFACTOR_DEFINE_ERROR(PropertyDoesNotHold, ErrorKind::kPropertyDoesNotHold);
FFACTOR_DEFINE_ERROR(InternalHereditaryFailure,
                     ErrorKind::kInternalHereditaryFailure);
FFACTOR_DEFINE_ERROR(ChooserFailure, ErrorKind::kChooserFailure);
FFACTOR_DEFINE_ERROR(DeclarationViolated, ErrorKind::kDeclarationViolated);
FFACTOR_DEFINE_ERROR(CapacityUnderflow, ErrorKind::kCapacityUnderflow);
FFACTOR_DEFINE_ERROR(ParseError, ErrorKind::kParse);

#undef FFACTOR_DEFINE_ERROR

}  // namespace ffactor
