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

// Popular matchings through a prescribed edge, and the split of a popular
// matching into a dominant core and a stable rest.

#ifndef POPMATCH_POPULAR_EDGE_HPP_
#define POPMATCH_POPULAR_EDGE_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"
#include "popmatch/level_graph.hpp"
#include "popmatch/verify.hpp"

namespace popmatch {

// `core` is M on the partition sets A0+A1 / B0+B1 (blocking pairs only as
// seeds); `rest` is M on everything else.
struct Decomposition {
  Matching core;
  Matching rest;
  Partition partition;

  std::vector<char> core_men() const {
    std::vector<char> out(partition.a0.size());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = partition.a0[a] || partition.a1[a];
    return out;
  }
  std::vector<char> core_women() const {
    std::vector<char> out(partition.b0.size());
    for (std::size_t b = 0; b < out.size(); ++b) out[b] = partition.b0[b] || partition.b1[b];
    return out;
  }
};

inline Decomposition decompose(const Instance& inst, const Matching& m) {
  if (auto v = is_popular(inst, m); !v.holds) {
    throw VerificationError("decompose: matching is not popular", *v.certificate);
  }
  Decomposition d{Matching(inst), Matching(inst), partition(inst, m, false)};
  for (const Edge& e : m.pairs()) {
    const bool in_men = d.partition.a0[e.man] || d.partition.a1[e.man];
    const bool in_women = d.partition.b0[e.woman] || d.partition.b1[e.woman];
    if (in_men != in_women) throw std::logic_error("decompose: matched pair split by the partition");
    (in_men ? d.core : d.rest).add(e);
  }
  return d;
}

struct LiftTrace {
  Matching result;
  Decomposition decomposition;
  // Over the rest vertices: men whose level-1 copy kept its dummy (y0) or
  // whose level-0 copy took it (y1); women won by a level-1 copy (z1) or not.
  std::vector<char> y0, y1, z0, z1;
};

// Keeps the core and re-solves the rest on its level graph, warm-started
// from the rest of m.
inline LiftTrace lift_to_dominant_traced(const Instance& inst, const Matching& m) {
  Decomposition d = decompose(inst, m);
  const auto core_men = d.core_men();
  const auto core_women = d.core_women();
  std::vector<char> keep_men(core_men.size()), keep_women(core_women.size());
  for (std::size_t a = 0; a < keep_men.size(); ++a) keep_men[a] = !core_men[a];
  for (std::size_t b = 0; b < keep_women.size(); ++b) keep_women[b] = !core_women[b];
  const SubInstance sub = induced(inst, keep_men, keep_women);
  const LevelInstance level = build_level_graph(sub.instance);
  const Instance& h = level.graph();

  StartState start{Matching(h), std::vector<int>{}};
  for (int y = 0; y < sub.instance.num_men(); ++y) {
    const int z = d.rest.partner_of_man(sub.man_to_base[y]);
    if (z != kUnmatched) {
      start.initial.add({level.copy(y, 0), sub.base_to_woman[z]});
      start.initial.add({level.copy(y, 1), level.dummy(y)});
    } else {
      start.initial.add({level.copy(y, 0), level.dummy(y)});
      start.free_men->push_back(level.copy(y, 1));
    }
  }
  const Matching lifted = run(h, {}, start);

  LiftTrace t{d.core, d, {}, {}, {}, {}};
  const auto local = collapse_to_base(level, lifted);
  for (const Edge& e : sub.to_base(local, inst).pairs()) t.result.add(e);

  t.y0.assign(static_cast<std::size_t>(inst.num_men()), 0);
  t.y1.assign(static_cast<std::size_t>(inst.num_men()), 0);
  t.z0.assign(static_cast<std::size_t>(inst.num_women()), 0);
  t.z1.assign(static_cast<std::size_t>(inst.num_women()), 0);
  for (int y = 0; y < sub.instance.num_men(); ++y) {
    const int a = sub.man_to_base[y];
    if (lifted.partner_of_man(level.copy(y, 1)) == level.dummy(y)) t.y0[a] = 1;
    if (lifted.partner_of_man(level.copy(y, 0)) == level.dummy(y)) t.y1[a] = 1;
  }
  for (int z = 0; z < sub.instance.num_women(); ++z) {
    const int b = sub.woman_to_base[z];
    const int p = lifted.partner_of_woman(z);
    (p != kUnmatched && level.level(p) == 1 ? t.z1 : t.z0)[b] = 1;
  }
  return t;
}

inline Matching lift_to_dominant(const Instance& inst, const Matching& m) {
  return lift_to_dominant_traced(inst, m).result;
}

// Keeps the rest and re-solves the core with plain lists, starting from the
// core pairs of A1 and letting the A0 men propose afresh.
inline Matching lower_to_stable(const Instance& inst, const Matching& m) {
  const Decomposition d = decompose(inst, m);
  const SubInstance sub = induced(inst, d.core_men(), d.core_women());
  const Instance& h = sub.instance;
  StartState start{Matching(h), std::vector<int>{}};
  for (int x = 0; x < h.num_men(); ++x) {
    const int a = sub.man_to_base[x];
    if (d.partition.a0[a]) {
      start.free_men->push_back(x);
    } else if (int b = d.core.partner_of_man(a); b != kUnmatched && d.partition.b1[b]) {
      start.initial.add({x, sub.base_to_woman[b]});
    }
  }
  Matching out = d.rest;
  for (const Edge& e : sub.to_base(run(h, {}, start), inst).pairs()) out.add(e);
  return out;
}

inline std::optional<Matching> dominant_with_edge(const Instance& inst, Edge e) {
  if (e.man < 0 || e.man >= inst.num_men() || e.woman < 0 || e.woman >= inst.num_women() ||
      !inst.has_edge(e)) {
    throw std::invalid_argument("dominant_with_edge: not an edge of the instance");
  }
  const LevelInstance level = build_level_graph(inst);
  for (int lvl = 0; lvl < 2; ++lvl) {
    if (auto lm = stable_with_edge(level.graph(), {level.copy(e.man, lvl), e.woman})) {
      return collapse_to_base(level, *lm);
    }
  }
  return std::nullopt;
}

enum class WitnessKind { kStable, kDominant };

struct PopularEdgeWitness {
  Matching matching;
  WitnessKind kind;
};

// A popular matching containing e if one exists: stable when possible,
// otherwise dominant.
inline std::optional<PopularEdgeWitness> popular_edge(const Instance& inst, Edge e) {
  if (auto m = stable_with_edge(inst, e)) return PopularEdgeWitness{std::move(*m), WitnessKind::kStable};
  if (auto m = dominant_with_edge(inst, e)) {
    return PopularEdgeWitness{std::move(*m), WitnessKind::kDominant};
  }
  return std::nullopt;
}

}  // namespace popmatch

#endif  // POPMATCH_POPULAR_EDGE_HPP_
