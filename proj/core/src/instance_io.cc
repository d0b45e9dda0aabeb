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

#include "dmkp/instance_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dmkp {
namespace {

using nlohmann::json;

int64_t RequireInteger(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw InvalidInstance(where + " must be an integer");
  }
  if (value.is_number_unsigned()) {
    const auto v = value.get<uint64_t>();
    if (v > static_cast<uint64_t>(kMaxMagnitude)) {
      throw InvalidInstance(where + " out of range");
    }
    return static_cast<int64_t>(v);
  }
  return value.get<int64_t>();
}

void RequireOnlyKeys(const json& object, std::initializer_list<const char*> keys,
                     const std::string& where) {
  for (const auto& [key, unused] : object.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw InvalidInstance(where + ": unknown field '" + key + "'");
  }
  for (const char* k : keys) {
    if (!object.contains(k)) {
      throw InvalidInstance(where + ": missing field '" + std::string(k) + "'");
    }
  }
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInstance("instance must be a JSON object");
  RequireOnlyKeys(doc, {"items", "capacities"}, "instance");
  if (!doc["items"].is_array()) throw InvalidInstance("'items' must be a list");
  if (!doc["capacities"].is_array()) {
    throw InvalidInstance("'capacities' must be a list");
  }

  Instance instance;
  int position = 0;
  for (const json& entry : doc["items"]) {
    const std::string where = "items[" + std::to_string(position) + "]";
    if (!entry.is_object()) throw InvalidInstance(where + " must be an object");
    RequireOnlyKeys(entry, {"id", "cost", "weight"}, where);
    const int64_t id = RequireInteger(entry["id"], where + ".id");
    if (id != position) {
      throw InvalidInstance(where + ".id must equal its position " +
                            std::to_string(position));
    }
    instance.items.push_back(Item{
        position,
        RequireInteger(entry["cost"], where + ".cost"),
        RequireInteger(entry["weight"], where + ".weight"),
    });
    ++position;
  }
  int j = 0;
  for (const json& capacity : doc["capacities"]) {
    instance.capacities.push_back(
        RequireInteger(capacity, "capacities[" + std::to_string(j++) + "]"));
  }
  ValidateInstance(instance);
  return instance;
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot read instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string SerializeInstance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n  \"items\": [";
  for (int i = 0; i < instance.num_items(); ++i) {
    const Item& item = instance.items[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"id\": " << item.id
        << ", \"cost\": " << item.cost << ", \"weight\": " << item.weight
        << "}";
  }
  out << (instance.items.empty() ? "]" : "\n  ]") << ",\n  \"capacities\": [";
  for (int j = 0; j < instance.num_knapsacks(); ++j) {
    out << (j == 0 ? "" : ", ") << instance.capacities[j];
  }
  out << "]\n}\n";
  return out.str();
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInstance("cannot write instance file " + path.string());
  out << SerializeInstance(instance);
}

std::string InstanceDigest(const Instance& instance) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : SerializeInstance(instance)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace dmkp
