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

// Rotations of the stable matching lattice and their precedence relation.
// Stable matchings correspond one-to-one to predecessor-closed sets of
// rotations, applied to the men-optimal matching.

#ifndef POPMATCH_ROTATIONS_HPP_
#define POPMATCH_ROTATIONS_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"

namespace popmatch {

struct RotationMove {
  int man;
  int from;  // woman before the rotation
  int to;    // woman after
};

struct Rotation {
  std::vector<RotationMove> moves;
};

struct RotationPoset {
  Matching man_optimal;
  // In elimination order, which is a linear extension of the poset.
  std::vector<Rotation> rotations;
  // Generating arcs: predecessors[r] must be eliminated before r.
  std::vector<std::vector<int>> predecessors;
};

inline RotationPoset build_rotation_poset(const Instance& inst) {
  RotationPoset poset{men_optimal(inst), {}, {}};
  Matching m = poset.man_optimal;
  const int n = inst.num_men();
  std::vector<int> ptr(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    if (int w = m.partner_of_man(a); w != kUnmatched) ptr[a] = inst.man_rank(a, w) + 1;
  }
  // Next woman below a's partner who would take him; pointers only advance
  // because women's partners only improve.
  auto successor = [&](int a) -> int {
    if (m.partner_of_man(a) == kUnmatched) return kUnmatched;
    const auto pref = inst.man_pref(a);
    const auto cross = inst.man_cross_ranks(a);
    while (ptr[a] < static_cast<int>(pref.size())) {
      const int w = pref[ptr[a]];
      const int held = m.partner_of_woman(w);
      // A woman single here is single in every stable matching, so a can
      // never drop below her.
      if (held == kUnmatched) return kUnmatched;
      if (cross[ptr[a]] < inst.woman_rank(w, held)) return w;
      ++ptr[a];
    }
    return kUnmatched;
  };

  std::map<std::pair<int, int>, int> arrived_by;  // (man, woman) -> rotation
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  int round = 0;
  while (true) {
    std::optional<std::vector<int>> cycle;
    for (int start = 0; start < n && !cycle; ++start) {
      if (stamp[start] >= 0 && stamp[start] < round) continue;
      ++round;
      std::vector<int> walk;
      int x = start;
      while (true) {
        if (stamp[x] == round) {
          auto it = std::find(walk.begin(), walk.end(), x);
          cycle.emplace(it, walk.end());
          break;
        }
        if (stamp[x] >= 0 && stamp[x] < round) break;
        stamp[x] = round;
        walk.push_back(x);
        const int w = successor(x);
        if (w == kUnmatched) break;
        x = m.partner_of_woman(w);
      }
    }
    if (!cycle) break;
    Rotation r;
    for (int a : *cycle) r.moves.push_back({a, m.partner_of_man(a), successor(a)});
    const int id = static_cast<int>(poset.rotations.size());
    for (const auto& mv : r.moves) m.remove({mv.man, mv.from});
    for (const auto& mv : r.moves) {
      m.add({mv.man, mv.to});
      ptr[mv.man] = inst.man_rank(mv.man, mv.to) + 1;
      arrived_by[{mv.man, mv.to}] = id;
    }
    poset.rotations.push_back(std::move(r));
    std::fill(stamp.begin(), stamp.end(), -1);
    round = 0;
  }

  // Per woman, the rotations that changed her partner: (rotation, old, new).
  std::vector<std::vector<std::tuple<int, int, int>>> changes(static_cast<std::size_t>(inst.num_women()));
  for (int id = 0; id < static_cast<int>(poset.rotations.size()); ++id) {
    const auto& moves = poset.rotations[id].moves;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const auto& prev = moves[(i + moves.size() - 1) % moves.size()];
      changes[moves[i].from].emplace_back(id, moves[i].man, prev.man);
    }
  }

  poset.predecessors.resize(poset.rotations.size());
  for (int id = 0; id < static_cast<int>(poset.rotations.size()); ++id) {
    auto& preds = poset.predecessors[id];
    for (const auto& mv : poset.rotations[id].moves) {
      if (auto it = arrived_by.find({mv.man, mv.from}); it != arrived_by.end() && it->second != id) {
        preds.push_back(it->second);
      }
      const auto pref = inst.man_pref(mv.man);
      for (int k = inst.man_rank(mv.man, mv.from) + 1; k < inst.man_rank(mv.man, mv.to); ++k) {
        const int w = pref[k];
        const int mine = inst.woman_rank(w, mv.man);
        for (const auto& [rid, old_man, new_man] : changes[w]) {
          if (rid != id && inst.woman_rank(w, old_man) > mine && inst.woman_rank(w, new_man) < mine) {
            preds.push_back(rid);
          }
        }
      }
    }
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
  }
  return poset;
}

// The stable matching of a closed set, given as a membership mask.
inline Matching apply_rotations(const RotationPoset& poset, const std::vector<char>& chosen) {
  Matching m = poset.man_optimal;
  for (std::size_t id = 0; id < poset.rotations.size(); ++id) {
    if (!chosen[id]) continue;
    for (const auto& mv : poset.rotations[id].moves) {
      if (!m.contains({mv.man, mv.from})) throw std::invalid_argument("apply_rotations: set is not closed");
      m.remove({mv.man, mv.from});
    }
    for (const auto& mv : poset.rotations[id].moves) m.add({mv.man, mv.to});
  }
  return m;
}

}  // namespace popmatch

#endif  // POPMATCH_ROTATIONS_HPP_
