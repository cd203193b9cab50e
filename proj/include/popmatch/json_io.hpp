// Copyright 2026 The popmatch Authors.
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

// JSON forms of matchings and certificates.

#ifndef POPMATCH_JSON_IO_HPP_
#define POPMATCH_JSON_IO_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "popmatch/instance.hpp"
#include "popmatch/verify.hpp"

namespace popmatch {

// [["a1","b2"], ...] sorted by name.
inline nlohmann::json matching_to_json(const Instance& inst, const Matching& m) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Edge& e : m.pairs()) pairs.emplace_back(inst.man_name(e.man), inst.woman_name(e.woman));
  std::sort(pairs.begin(), pairs.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

inline nlohmann::json edge_to_json(const Instance& inst, Edge e) {
  return {inst.man_name(e.man), inst.woman_name(e.woman)};
}

inline nlohmann::json certificate_to_json(const Instance& inst, const Certificate& c) {
  nlohmann::json witness = nlohmann::json::array();
  for (const Vertex& v : c.witness) witness.push_back(inst.name(v));
  return {{"kind", std::string(to_string(c.kind))}, {"witness", witness}};
}

// Accepts either the line format or a JSON object with a "matching" array.
inline Matching parse_matching_auto(std::string_view text, const Instance& inst) {
  const auto body = detail::trim(text);
  if (body.empty() || body.front() != '{') return parse_matching(text, inst);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matching") || !doc["matching"].is_array()) {
    throw ParseError(0, "JSON matching must be an object with a \"matching\" array");
  }
  Matching out(inst);
  for (const auto& pair : doc["matching"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw ParseError(0, "JSON matching entries must be [man, woman]");
    }
    const auto a = pair[0].get<std::string>();
    const auto b = pair[1].get<std::string>();
    const auto e = edge_from_names(inst, a, b);
    if (!e || !inst.has_edge(*e)) throw ParseError(0, "(" + a + "," + b + ") is not an edge");
    if (out.partner_of_man(e->man) != kUnmatched) throw ParseError(0, "vertex '" + a + "' matched twice");
    if (out.partner_of_woman(e->woman) != kUnmatched) throw ParseError(0, "vertex '" + b + "' matched twice");
    out.add(*e);
  }
  return out;
}

}  // namespace popmatch

#endif  // POPMATCH_JSON_IO_HPP_
