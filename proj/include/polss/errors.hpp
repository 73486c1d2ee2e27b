// Copyright 2026 The polss Authors
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

namespace polss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range parameters, mismatched dimensions, bad indices.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A numerical condition that prevents an answer: degenerate steady state,
/// rank-deficient system, invalid density matrix, integrator instability,
/// photon-truncation non-convergence.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Raised when a witness is requested for a state with a positive partial transpose.
class NotEntangled : public Error {
public:
    using Error::Error;
};

}  // namespace polss
