// Copyright 2026 The eghz Authors
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

namespace eghz {

/// Input rejected: wrong shape, out of range, or not a physical state.
/// The CLI maps this family to exit status 1.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters that do not describe a positive semidefinite, unit-trace state.
class PhysicalityError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// An iterative kernel failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace eghz
