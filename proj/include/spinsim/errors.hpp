// Copyright 2026 The spinsim Authors
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

namespace spinsim {

/// Base class for all spinsim exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible qubit counts / vector lengths.
struct DimensionError : Error {
    using Error::Error;
};

/// An argument is outside its documented domain.
struct ParameterError : Error {
    using Error::Error;
};

/// A request exceeds a capacity cutoff (symbolic n <= 16, dense n <= 12).
struct CapacityError : Error {
    using Error::Error;
};

/// A caller-facing precondition or internal invariant was violated
/// (non-Hermitian observable, non-orthonormal state set, norm drift).
struct ContractError : Error {
    using Error::Error;
};

/// A task parameter sits on the decision boundary where classification
/// is not guaranteed.
struct BoundaryError : ParameterError {
    using ParameterError::ParameterError;
};

/// The requested combination of options is not defined.
struct UnsupportedError : Error {
    using Error::Error;
};

/// File output failed; the message carries the path.
struct IoError : Error {
    using Error::Error;
};

} // namespace spinsim
