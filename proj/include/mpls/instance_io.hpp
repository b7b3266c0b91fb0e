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

// Instance files:
//   {"k": 3, "vertices": 9,
//    "edges": [{"verts": [0, 1, 2], "w": "0.7"}, ...],
//    "matroid": {"kind": "partition", "blocks": [[0, 3]], "capacities": [1]}}
// Weights are exact decimal strings ("p/q" when not a terminating decimal).

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mpls/errors.hpp"
#include "mpls/instance.hpp"
#include "mpls/matroid.hpp"
#include "mpls/rational.hpp"

namespace mpls {

inline nlohmann::json instance_to_json(const ParityInstance& inst) {
  auto matroid = inst.matroid().describe();
  if (!matroid) {
    throw ConstructionError("instance matroid of kind '" + inst.matroid().kind() + "' has no file representation");
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : inst.edges()) edges.push_back({{"verts", e.verts}, {"w", format_rational(e.weight)}});
  return nlohmann::json{{"k", inst.k()}, {"vertices", inst.vertex_count()}, {"edges", edges}, {"matroid", *matroid}};
}

/// Parses an instance as written; hyperedges may overlap.
inline ParityInstance instance_from_json(const nlohmann::json& j) {
  try {
    std::vector<Hyperedge> edges;
    for (const auto& e : j.at("edges")) {
      Hyperedge h;
      h.verts = e.at("verts").get<std::vector<Element>>();
      const auto& w = e.at("w");
      h.weight = w.is_string() ? parse_rational(w.get<std::string>()) : parse_rational(w.dump());
      edges.push_back(std::move(h));
    }
    return ParityInstance(j.at("k").get<std::size_t>(), j.at("vertices").get<std::size_t>(), std::move(edges),
                          matroid_from_json(j.at("matroid")));
  } catch (const nlohmann::json::exception& ex) {
    throw ConstructionError(std::string("malformed instance: ") + ex.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConstructionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads an instance file and brings it to disjoint normal form.
inline ParityInstance load_instance(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& ex) {
    throw ConstructionError("'" + path + "' is not valid JSON: " + ex.what());
  }
  return make_disjoint(instance_from_json(j));
}

inline void save_instance(const std::string& path, const ParityInstance& inst) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConstructionError("cannot write '" + path + "'");
  out << instance_to_json(inst).dump(2) << '\n';
}

}  // namespace mpls
