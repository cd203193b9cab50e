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

// The two-level graph G' of an instance and the correspondence between its
// stable matchings and the dominant matchings of the instance.
//
// Man a of the base instance becomes a0 = 2a and a1 = 2a+1 in G'. Base women
// keep their indices and the dummy d(a) is woman num_women() + a. Level-graph
// ids use ':' (never legal in base ids), e.g. "a1:0", "a1:1", "d:a1".

#ifndef POPMATCH_LEVEL_GRAPH_HPP_
#define POPMATCH_LEVEL_GRAPH_HPP_

#include <climits>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"
#include "popmatch/verify.hpp"

namespace popmatch {

class LevelInstance {
 public:
  LevelInstance(const Instance& base, Instance graph) : base_(&base), graph_(std::move(graph)) {}

  const Instance& base() const { return *base_; }
  const Instance& graph() const { return graph_; }

  int copy(int a, int level) const { return 2 * a + level; }
  int dummy(int a) const { return base_->num_women() + a; }
  int base_man(int level_man) const { return level_man / 2; }
  int level(int level_man) const { return level_man % 2; }
  bool is_dummy(int level_woman) const { return level_woman >= base_->num_women(); }
  int dummy_owner(int level_woman) const { return level_woman - base_->num_women(); }

 private:
  const Instance* base_;
  Instance graph_;
};

inline LevelInstance build_level_graph(const Instance& inst) {
  const int n = inst.num_men();
  const int k = inst.num_women();
  std::vector<std::string> men, women;
  men.reserve(static_cast<std::size_t>(2 * n));
  women.reserve(static_cast<std::size_t>(k + n));
  for (int a = 0; a < n; ++a) {
    men.push_back(inst.man_name(a) + ":0");
    men.push_back(inst.man_name(a) + ":1");
  }
  for (int b = 0; b < k; ++b) women.push_back(inst.woman_name(b));
  for (int a = 0; a < n; ++a) women.push_back("d:" + inst.man_name(a));

  std::vector<std::vector<int>> men_pref(static_cast<std::size_t>(2 * n));
  std::vector<std::vector<int>> women_pref(static_cast<std::size_t>(k + n));
  for (int a = 0; a < n; ++a) {
    const auto pref = inst.man_pref(a);
    auto& l0 = men_pref[2 * a];
    auto& l1 = men_pref[2 * a + 1];
    l0.reserve(pref.size() + 1);
    l1.reserve(pref.size() + 1);
    l0.assign(pref.begin(), pref.end());
    l0.push_back(k + a);
    l1.push_back(k + a);
    l1.insert(l1.end(), pref.begin(), pref.end());
    women_pref[k + a] = {2 * a, 2 * a + 1};
  }
  for (int b = 0; b < k; ++b) {
    const auto pref = inst.woman_pref(b);
    auto& l = women_pref[b];
    l.reserve(2 * pref.size());
    for (int a : pref) l.push_back(2 * a + 1);
    for (int a : pref) l.push_back(2 * a);
  }
  return LevelInstance(inst, Instance(std::move(men), std::move(women), std::move(men_pref),
                                      std::move(women_pref)));
}

// Drops dummy edges and merges each man's two copies.
inline Matching collapse_to_base(const LevelInstance& level, const Matching& lm) {
  const Instance& base = level.base();
  Matching out(base);
  for (int a = 0; a < base.num_men(); ++a) {
    const int p0 = lm.partner_of_man(level.copy(a, 0));
    const int p1 = lm.partner_of_man(level.copy(a, 1));
    const bool real0 = p0 != kUnmatched && !level.is_dummy(p0);
    const bool real1 = p1 != kUnmatched && !level.is_dummy(p1);
    if (real0 && real1) {
      throw std::invalid_argument("collapse_to_base: both copies of '" + base.man_name(a) +
                                  "' hold base women");
    }
    if (real0) out.add({a, p0});
    if (real1) out.add({a, p1});
  }
  return out;
}

struct FValues {
  std::vector<int> men;
  std::vector<int> women;
};

inline FValues f_values(const LevelInstance& level, const Matching& lm) {
  const Instance& base = level.base();
  FValues f;
  f.men.resize(static_cast<std::size_t>(base.num_men()));
  f.women.resize(static_cast<std::size_t>(base.num_women()));
  for (int a = 0; a < base.num_men(); ++a) {
    f.men[a] = lm.partner_of_man(level.copy(a, 1)) == level.dummy(a) ? 0 : 1;
  }
  for (int b = 0; b < base.num_women(); ++b) {
    const int p = lm.partner_of_woman(b);
    f.women[b] = p != kUnmatched && level.level(p) == 1 ? 1 : 0;
  }
  return f;
}

inline Matching dominant_via_level_graph(const Instance& inst) {
  const LevelInstance level = build_level_graph(inst);
  return collapse_to_base(level, run(level.graph()));
}

// Active copies propose: a man starts at level 0 and, once every neighbor
// has rejected him, restarts his list at level 1. Women rank any level-1
// proposer above any level-0 proposer.
inline Matching dominant_two_level(const Instance& inst) {
  const int n = inst.num_men();
  std::vector<int> next(static_cast<std::size_t>(n), 0);
  std::vector<int> lvl(static_cast<std::size_t>(n), 0);
  std::vector<int> man(static_cast<std::size_t>(n), kUnmatched);
  std::vector<int> woman(static_cast<std::size_t>(inst.num_women()), kUnmatched);
  std::vector<int> held(static_cast<std::size_t>(inst.num_women()), INT_MAX);
  std::deque<int> queue;
  for (int a = 0; a < n; ++a) queue.push_back(a);

  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    const auto pref = inst.man_pref(a);
    const auto cross = inst.man_cross_ranks(a);
    const int deg = static_cast<int>(pref.size());
    while (true) {
      if (next[a] == deg) {
        if (lvl[a] == 1) break;
        lvl[a] = 1;
        next[a] = 0;
        continue;
      }
      const int k = next[a]++;
      const int w = pref[k];
      const int key = lvl[a] == 1 ? cross[k] : inst.degree(woman_vertex(w)) + cross[k];
      if (key >= held[w]) continue;
      const int loser = woman[w];
      woman[w] = a;
      man[a] = w;
      held[w] = key;
      if (loser != kUnmatched) {
        man[loser] = kUnmatched;
        queue.push_back(loser);
      }
      break;
    }
  }
  Matching out(inst);
  for (int a = 0; a < n; ++a) {
    if (man[a] != kUnmatched) out.add({a, man[a]});
  }
  return out;
}

// A stable matching of G' whose collapse is m. Requires m dominant.
inline Matching expand_to_level(const LevelInstance& level, const Matching& m) {
  const Instance& base = level.base();
  if (auto v = is_dominant(base, m); !v.holds) {
    throw VerificationError("expand_to_level: matching is not dominant", *v.certificate);
  }
  const Partition p = partition(base, m, true);
  if (auto a = p.man_overlap()) {
    throw VerificationError("expand_to_level: partition overlap",
                            Certificate{CertificateKind::kPartitionOverlap, {man_vertex(*a)}});
  }
  if (auto b = p.woman_overlap()) {
    throw VerificationError("expand_to_level: partition overlap",
                            Certificate{CertificateKind::kPartitionOverlap, {woman_vertex(*b)}});
  }
  for (int a = 0; a < base.num_men(); ++a) {
    if (p.a0[a] && m.partner_of_man(a) == kUnmatched) {
      throw std::logic_error("expand_to_level: unmatched man in A0");
    }
  }
  for (int b = 0; b < base.num_women(); ++b) {
    if (p.b1[b] && m.partner_of_woman(b) == kUnmatched) {
      throw std::logic_error("expand_to_level: unmatched woman in B1");
    }
  }

  Matching out(level.graph());
  for (int a = 0; a < base.num_men(); ++a) {
    const int partner = m.partner_of_man(a);
    if (p.a0[a]) {
      out.add({level.copy(a, 0), partner});
      out.add({level.copy(a, 1), level.dummy(a)});
    } else if (p.a1[a]) {
      out.add({level.copy(a, 0), level.dummy(a)});
      if (partner != kUnmatched) out.add({level.copy(a, 1), partner});
    } else {
      if (partner != kUnmatched) out.add({level.copy(a, 0), partner});
      out.add({level.copy(a, 1), level.dummy(a)});
    }
  }
  return out;
}

}  // namespace popmatch

#endif  // POPMATCH_LEVEL_GRAPH_HPP_
