// Copyright 2026 The qadc Authors
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

namespace qadc {

/// Base class of all library errors. `code()` is a stable machine-readable
/// identifier; the CLI maps codes to exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct DuplicateSubsystem : Error {
  explicit DuplicateSubsystem(const std::string& m) : Error("DuplicateSubsystem", m) {}
};

struct UnknownSubsystem : Error {
  explicit UnknownSubsystem(const std::string& m) : Error("UnknownSubsystem", m) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& m) : Error("NotHermitian", m) {}
};

struct SingularFunction : Error {
  explicit SingularFunction(const std::string& m) : Error("SingularFunction", m) {}
};

struct RegisterMismatch : Error {
  explicit RegisterMismatch(const std::string& m) : Error("RegisterMismatch", m) {}
};

struct ReferenceTooLarge : Error {
  explicit ReferenceTooLarge(const std::string& m) : Error("ReferenceTooLarge", m) {}
};

struct BadPartition : Error {
  explicit BadPartition(const std::string& m) : Error("BadPartition", m) {}
};

struct BadOrder : Error {
  explicit BadOrder(const std::string& m) : Error("BadOrder", m) {}
};

struct BadDistribution : Error {
  explicit BadDistribution(const std::string& m) : Error("BadDistribution", m) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& m) : Error("TooLarge", m) {}
};

struct BadOperatorRange : Error {
  explicit BadOperatorRange(const std::string& m) : Error("BadOperatorRange", m) {}
};

/// Semantic invariant violations: non-CPTP Kraus lists, invalid density
/// matrices, probability tables that do not sum to one, and the like.
struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error("Validation", m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error("Io", m) {}
};

}  // namespace qadc
