// Copyright 2026-present the sparse-iht authors
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

namespace sparse_iht {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid numeric input: non-finite entries, mismatched dimensions, empty containers.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration: stepsize, sparsity budget, experiment parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed to converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A descent inequality was violated while the stepsize was within 1/L_s.
class CertificateViolation : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// File-system or parse failure; the message carries the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace sparse_iht
