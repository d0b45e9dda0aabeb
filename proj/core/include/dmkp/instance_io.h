// Copyright 2026 The dmkp Authors
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

#ifndef DMKP_INSTANCE_IO_H_
#define DMKP_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "dmkp/instance.h"

namespace dmkp {

// Instance documents are JSON objects with exactly two keys:
//
//   {"items": [{"id": 0, "cost": 8, "weight": 4}, ...],
//    "capacities": [10, 7]}
//
// Unknown keys, non-integer numbers, and ids that differ from list position
// are rejected. See docs/formats.md.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::filesystem::path& path);

// Canonical form: fixed key order, one item per line, trailing newline.
std::string SerializeInstance(const Instance& instance);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

// FNV-1a 64 over the canonical serialization, as 16 lowercase hex digits.
std::string InstanceDigest(const Instance& instance);

}  // namespace dmkp

#endif  // DMKP_INSTANCE_IO_H_
