// Copyright 2026 The spinorlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace spinorlab {

/// Base of every error raised by the library. `kind()` is a stable name used
/// in reports and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "Error"; }
};

#define SPINORLAB_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                       \
   public:                                                          \
    using Error::Error;                                             \
    const char *kind() const noexcept override { return #Name; }    \
  };

SPINORLAB_DEFINE_ERROR(DimensionError)
SPINORLAB_DEFINE_ERROR(RangeError)
SPINORLAB_DEFINE_ERROR(ParityError)
SPINORLAB_DEFINE_ERROR(ZeroSpinorError)
SPINORLAB_DEFINE_ERROR(ZeroVectorError)
SPINORLAB_DEFINE_ERROR(IllConditionedRankError)
SPINORLAB_DEFINE_ERROR(EmptyDistributionError)
SPINORLAB_DEFINE_ERROR(ResidualError)
SPINORLAB_DEFINE_ERROR(AssertionError)
SPINORLAB_DEFINE_ERROR(SpectrumMismatchError)
SPINORLAB_DEFINE_ERROR(ComplexStructureError)
SPINORLAB_DEFINE_ERROR(NoTotallyImpureError)
SPINORLAB_DEFINE_ERROR(UnreachableNullityError)
SPINORLAB_DEFINE_ERROR(InternalVerificationError)
SPINORLAB_DEFINE_ERROR(ParseError)
SPINORLAB_DEFINE_ERROR(ConfigError)

#undef SPINORLAB_DEFINE_ERROR

}  // namespace spinorlab
