// Copyright 2026 The cshadow Authors
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

namespace cshadow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    virtual const char *kind() const noexcept { return "error"; }
};

/// Qubit count or matrix dimension outside the supported range.
class SizeError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "size"; }
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "domain"; }
};

/// A numerical result violated a tolerance that distinguishes rounding from bugs.
class NumericalError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "numerical"; }
};

class ConfigError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "config"; }
};

class IoError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "io"; }
};

} // namespace cshadow
