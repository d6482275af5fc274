// Copyright 2026 The npc-coref Authors
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

namespace npc {

// Raised when an input file violates its format contract. The location
// string names the offending document/line or JSON path.
class MalformedInput : public std::runtime_error {
 public:
  MalformedInput(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// Raised when an operation needs an annotation layer the document lacks.
class MissingLayer : public std::runtime_error {
 public:
  explicit MissingLayer(const std::string& layer)
      : std::runtime_error("required annotation layer missing: " + layer),
        layer_(layer) {}

  const std::string& layer() const { return layer_; }

 private:
  std::string layer_;
};

}  // namespace npc
