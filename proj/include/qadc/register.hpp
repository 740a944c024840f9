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

#include <optional>
#include <string>
#include <vector>

#include "qadc/errors.hpp"

namespace qadc {

struct Subsystem {
  std::string name;
  int dim = 1;
  bool operator==(const Subsystem&) const = default;
};

/// An ordered list of named subsystems. Composite indices are row-major in
/// subsystem order, so concat(a, b) indexes as i_a * dim(b) + i_b. Order is
/// significant and never silently changed; use permute() for reordering.
class Register {
 public:
  Register() = default;  // empty register, total dimension 1
  explicit Register(std::vector<Subsystem> subsystems);
  static Register single(const std::string& name, int dim);

  std::size_t size() const { return subs_.size(); }
  long dim() const;
  const Subsystem& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Subsystem>& subsystems() const { return subs_; }
  std::vector<int> dims() const;
  std::vector<std::string> names() const;
  std::optional<std::size_t> find(const std::string& name) const;
  bool has(const std::string& name) const { return find(name).has_value(); }

  /// Concatenation; throws DuplicateSubsystem on a name collision.
  Register concat(const Register& other) const;

  /// Sub-register of the named subsystems, in this register's order.
  /// Throws UnknownSubsystem for names not present.
  Register keep(const std::vector<std::string>& names) const;

  bool operator==(const Register&) const = default;

 private:
  std::vector<Subsystem> subs_;
};

std::string to_string(const Register& reg);

}  // namespace qadc
