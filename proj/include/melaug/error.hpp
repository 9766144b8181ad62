// Copyright 2026 The melaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace melaug {

/// Base of every error thrown by the library. The CLI maps UsageError and
/// its subclasses to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied an invalid parameter or malformed command input.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParamOutOfRange : public UsageError {
 public:
  using UsageError::UsageError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public FormatError {
 public:
  using FormatError::FormatError;
};

class InputTooShort : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class UndefinedReference : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Line-oriented text input (TSV, config) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public UsageError {
 public:
  using UsageError::UsageError;
};

class FixtureMiss : public Error {
 public:
  using Error::Error;
};

/// Remote service unreachable or timed out after all retries.
class TransientError : public Error {
 public:
  using Error::Error;
};

/// Remote service answered with a non-2xx status.
class ServiceError : public Error {
 public:
  ServiceError(int status, const std::string& what)
      : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace melaug
