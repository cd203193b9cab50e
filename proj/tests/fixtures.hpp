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

// Shared instances for the test suites.

#ifndef POPMATCH_TESTS_FIXTURES_HPP_
#define POPMATCH_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "popmatch/popmatch.hpp"

namespace popmatch::testing {

// Two men share b1 as top choice; b2 is adjacent to a1 only.
inline constexpr const char* kFig1 = R"(men: a1 a2
women: b1 b2
a1: b1 b2
a2: b1
b1: a1 a2
b2: a1
)";

// b2, b3 and a3 each have one neighbor (a2, a1 and b1).
inline constexpr const char* kFig2 = R"(men: a1 a2 a3
women: b1 b2 b3
a1: b1 b3
a2: b1 b2
a3: b1
b1: a2 a1 a3
b2: a2
b3: a1
)";

// b1 tops every list, b2 is second for a1 and a2, b3 third for a1.
inline constexpr const char* kFig3 = R"(men: a1 a2 a3
women: b1 b2 b3
a1: b1 b2 b3
a2: b1 b2
a3: b1
b1: a1 a2 a3
b2: a1 a2
b3: a1
)";

// Two men and two women, all pairs adjacent, both men prefer b', both
// women prefer a.
inline constexpr const char* kFig4 = R"(men: a a'
women: b b'
a: b' b
a': b' b
b: a a'
b': a a'
)";

inline Instance fig1() { return parse_instance(kFig1); }
inline Instance fig2() { return parse_instance(kFig2); }
inline Instance fig3() { return parse_instance(kFig3); }
inline Instance fig4() { return parse_instance(kFig4); }

inline Matching pairs(const Instance& inst,
                      std::initializer_list<std::pair<std::string_view, std::string_view>> p) {
  return matching_from_names(inst, p);
}

inline Edge edge(const Instance& inst, std::string_view a, std::string_view b) {
  return *edge_from_names(inst, a, b);
}

struct EnsembleSpec {
  int men;
  int women;
  double density;
  std::uint64_t seed;
};

// Sizes sweep 2..6 on both sides, densities cycle through 0.4, 0.7, 1.0.
inline std::vector<EnsembleSpec> ensemble_specs(int count) {
  static constexpr double kDensities[] = {0.4, 0.7, 1.0};
  std::vector<EnsembleSpec> out;
  for (int i = 0; i < count; ++i) {
    out.push_back({2 + i % 5, 2 + (i / 5) % 5, kDensities[i % 3], 1000u + static_cast<std::uint64_t>(i)});
  }
  return out;
}

inline Instance make(const EnsembleSpec& s) { return generate_random(s.men, s.women, s.density, s.seed); }

// Instances small enough for the default enumeration limit.
inline std::vector<Instance> small_ensemble(int count, std::size_t max_edges = 16) {
  std::vector<Instance> out;
  for (const auto& s : ensemble_specs(count * 4)) {
    Instance inst = make(s);
    if (inst.num_edges() <= max_edges) out.push_back(std::move(inst));
    if (static_cast<int>(out.size()) == count) break;
  }
  return out;
}

inline OracleOptions roomy() {
  OracleOptions o;
  o.max_edges = 40;
  return o;
}

inline bool contains(const std::vector<Matching>& family, const Matching& m) {
  return std::find(family.begin(), family.end(), m) != family.end();
}

}  // namespace popmatch::testing

namespace popmatch {

inline void PrintTo(const Matching& m, std::ostream* os) {
  *os << "{";
  bool first = true;
  for (const Edge& e : m.pairs()) {
    *os << (first ? "" : ", ") << "(" << e.man << "," << e.woman << ")";
    first = false;
  }
  *os << "}";
}

inline void PrintTo(const Edge& e, std::ostream* os) { *os << "(" << e.man << "," << e.woman << ")"; }

}  // namespace popmatch

#endif  // POPMATCH_TESTS_FIXTURES_HPP_
