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

// Deciding whether every popular matching is stable. Any unstable popular
// matching can be traded for an unstable dominant one, so the search runs
// over stable matchings of the level graph.

#ifndef POPMATCH_UNSTABLE_POPULAR_HPP_
#define POPMATCH_UNSTABLE_POPULAR_HPP_

#include <functional>
#include <optional>
#include <stdexcept>

#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"
#include "popmatch/level_graph.hpp"

namespace popmatch {

struct UnstableWitness {
  Matching matching;
  Edge blocking_pair;
};

namespace detail {

inline bool blocks(const Instance& inst, const Matching& m, Edge e) {
  if (m.contains(e)) return false;
  const int pa = m.partner_of_man(e.man);
  const int pb = m.partner_of_woman(e.woman);
  return (pa == kUnmatched || inst.man_rank(e.man, e.woman) < inst.man_rank(e.man, pa)) &&
         (pb == kUnmatched || inst.woman_rank(e.woman, e.man) < inst.woman_rank(e.woman, pb));
}

}  // namespace detail

// A stable matching of G' through (a0, v) and (u1, b), collapsed, where
// e1 = (a, v) and e2 = (u, b) and a, b prefer each other to v, u.
inline std::optional<Matching> unstable_via_pair(const LevelInstance& level, Edge e1, Edge e2) {
  const Instance& inst = level.base();
  if (!inst.has_edge(e1) || !inst.has_edge(e2)) {
    throw std::invalid_argument("unstable_via_pair: not an edge of the instance");
  }
  if (e1.man == e2.man || e1.woman == e2.woman) return std::nullopt;
  const int a = e1.man, v = e1.woman, u = e2.man, b = e2.woman;
  if (!inst.has_edge(a, b) || inst.man_rank(a, b) >= inst.man_rank(a, v) ||
      inst.woman_rank(b, a) >= inst.woman_rank(b, u)) {
    throw std::invalid_argument("unstable_via_pair: endpoints do not prefer each other");
  }
  const Instance& g = level.graph();
  const Edge f1{level.copy(a, 0), v};
  const Edge f2{level.copy(u, 1), b};
  ProposalRules rules;
  rules.acceptance_floor[b] = f2.man;
  rules.acceptance_floor[v] = f1.man;
  const Matching lm = run(g, rules);
  if (!lm.contains(f1) || !lm.contains(f2) || !is_stable(g, lm).stable) return std::nullopt;
  return collapse_to_base(level, lm);
}

inline std::optional<Matching> unstable_via_pair(const Instance& inst, Edge e1, Edge e2) {
  return unstable_via_pair(build_level_graph(inst), e1, e2);
}

// One restricted proposal run per edge (a, b), in edge order: b only hears
// level-1 men and a0 is refused by everyone he ranks above b.
inline std::optional<UnstableWitness> exists_unstable_popular(const Instance& inst) {
  const LevelInstance level = build_level_graph(inst);
  const Instance& g = level.graph();
  const std::function<bool(int)> level_one = [](int x) { return x % 2 == 1; };
  for (const Edge& e : inst.edges()) {
    const int a0 = level.copy(e.man, 0);
    ProposalRules rules;
    rules.level_filter[e.woman] = level_one;
    for (int w : inst.man_pref(e.man)) {
      if (w == e.woman) break;
      rules.forced_rejections.insert({a0, w});
    }
    const Matching lm = run(g, rules);
    if (!is_stable(g, lm).stable) continue;
    if (lm.partner_of_man(a0) == level.dummy(e.man)) continue;
    const int held = lm.partner_of_woman(e.woman);
    if (held != kUnmatched && g.woman_rank(e.woman, held) < g.woman_rank(e.woman, level.copy(e.man, 1))) {
      continue;
    }
    Matching m = collapse_to_base(level, lm);
    if (!detail::blocks(inst, m, e)) continue;
    return UnstableWitness{std::move(m), e};
  }
  return std::nullopt;
}

// The same question answered by trying every admissible pair of edges.
inline std::optional<UnstableWitness> exists_unstable_popular_cubic(const Instance& inst) {
  const LevelInstance level = build_level_graph(inst);
  for (const Edge& e : inst.edges()) {
    const auto men_list = inst.man_pref(e.man);
    const auto women_list = inst.woman_pref(e.woman);
    for (std::size_t i = static_cast<std::size_t>(inst.man_rank(e.man, e.woman)) + 1; i < men_list.size(); ++i) {
      for (std::size_t j = static_cast<std::size_t>(inst.woman_rank(e.woman, e.man)) + 1;
           j < women_list.size(); ++j) {
        if (auto m = unstable_via_pair(level, {e.man, men_list[i]}, {women_list[j], e.woman})) {
          return UnstableWitness{std::move(*m), e};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace popmatch

#endif  // POPMATCH_UNSTABLE_POPULAR_HPP_
