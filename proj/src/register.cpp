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

#include "qadc/register.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qadc {

Register::Register(std::vector<Subsystem> subsystems) : subs_(std::move(subsystems)) {
  std::set<std::string> seen;
  for (const auto& s : subs_) {
    if (s.name.empty()) throw ValidationError("subsystem name must be nonempty");
    if (s.dim < 1) throw ValidationError("subsystem '" + s.name + "' has nonpositive dimension");
    if (!seen.insert(s.name).second)
      throw DuplicateSubsystem("duplicate subsystem name '" + s.name + "'");
  }
}

Register Register::single(const std::string& name, int dim) {
  return Register({Subsystem{name, dim}});
}

long Register::dim() const {
  long d = 1;
  for (const auto& s : subs_) d *= s.dim;
  return d;
}

std::vector<int> Register::dims() const {
  std::vector<int> d;
  d.reserve(subs_.size());
  for (const auto& s : subs_) d.push_back(s.dim);
  return d;
}

std::vector<std::string> Register::names() const {
  std::vector<std::string> n;
  n.reserve(subs_.size());
  for (const auto& s : subs_) n.push_back(s.name);
  return n;
}

std::optional<std::size_t> Register::find(const std::string& name) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].name == name) return i;
  return std::nullopt;
}

Register Register::concat(const Register& other) const {
  std::vector<Subsystem> subs = subs_;
  for (const auto& s : other.subs_) {
    if (has(s.name))
      throw DuplicateSubsystem("subsystem '" + s.name + "' present in both registers");
    subs.push_back(s);
  }
  return Register(std::move(subs));
}

Register Register::keep(const std::vector<std::string>& names) const {
  for (const auto& n : names)
    if (!has(n)) throw UnknownSubsystem("no subsystem named '" + n + "'");
  std::vector<Subsystem> subs;
  for (const auto& s : subs_)
    if (std::find(names.begin(), names.end(), s.name) != names.end()) subs.push_back(s);
  return Register(std::move(subs));
}

std::string to_string(const Register& reg) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (i) out << ", ";
    out << reg[i].name << ":" << reg[i].dim;
  }
  out << "]";
  return out.str();
}

}  // namespace qadc
