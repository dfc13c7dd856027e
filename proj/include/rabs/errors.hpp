// Copyright 2026 The Authors.
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

#ifndef RABS_ERRORS_HPP_
#define RABS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rabs {

// Invalid or inconsistent configuration (bad spacing, negative power, unknown
// config key, ...). The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A physically infeasible model instance (laser cannot sustain the platform
// even at zero distance, tether shorter than the operating altitude, ...).
// The CLI maps this to exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rabs

#endif  // RABS_ERRORS_HPP_
