// SPDX-License-Identifier: Apache-2.0
//
// nf-isac: near-field ISAC channel models and rate analysis
// Copyright (C) 2026 The nf-isac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace nfisac
{

// Invalid argument to a mathematical operation (out-of-range index, non-unit beamformer, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The requested channel model has no closed form for this quantity.
class UnsupportedModelError : public DomainError
{
public:
    using DomainError::DomainError;
};

// Missing or inconsistent configuration (CLI, config file, required constants).
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Iterative procedure failed; carries the name of the failing operation.
class NumericalError : public std::runtime_error
{
public:
    NumericalError(std::string operation, const std::string &what)
        : std::runtime_error(operation + ": " + what), operation_(std::move(operation)) {}

    const std::string &operation() const noexcept { return operation_; }

private:
    std::string operation_;
};

} // namespace nfisac
