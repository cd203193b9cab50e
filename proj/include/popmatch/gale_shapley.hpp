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

// Men-proposing deferred acceptance with hooks for restricted acceptance and
// warm starts.

#ifndef POPMATCH_GALE_SHAPLEY_HPP_
#define POPMATCH_GALE_SHAPLEY_HPP_

#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

struct ProposalRules {
  // woman -> least preferred man she still accepts.
  std::map<int, int> acceptance_floor;
  // woman -> predicate on proposers; false means she ignores him.
  std::map<int, std::function<bool(int)>> level_filter;
  // (man, woman) proposals that are always rejected.
  std::set<Edge> forced_rejections;

  bool empty() const {
    return acceptance_floor.empty() && level_filter.empty() && forced_rejections.empty();
  }
};

struct StartState {
  Matching initial;
  // Defaults to the men unmatched in `initial`, in index order.
  std::optional<std::vector<int>> free_men;
};

struct StabilityVerdict {
  bool stable = true;
  std::optional<Edge> blocking_pair;
};

namespace detail {

// Rules flattened to per-vertex tables for O(1) checks inside the loop.
class CompiledRules {
 public:
  CompiledRules(const Instance& inst, const ProposalRules& rules)
      : inst_(inst), floor_(static_cast<std::size_t>(inst.num_women()), INT_MAX),
        filter_(static_cast<std::size_t>(inst.num_women()), nullptr) {
    for (const auto& [w, m] : rules.acceptance_floor) {
      check_woman(w);
      if (m < 0 || m >= inst.num_men()) throw std::invalid_argument("rules: floor is not a man");
      const int r = inst.woman_rank(w, m);
      if (r < 0) throw std::invalid_argument("rules: floor is not a neighbor of its woman");
      floor_[w] = r;
    }
    for (const auto& [w, f] : rules.level_filter) {
      check_woman(w);
      if (f) filter_[w] = &f;
    }
    if (!rules.forced_rejections.empty()) {
      rejected_.resize(static_cast<std::size_t>(inst.num_men()));
      for (const Edge& e : rules.forced_rejections) {
        if (e.man < 0 || e.man >= inst.num_men() || e.woman < 0 || e.woman >= inst.num_women() ||
            !inst.has_edge(e)) {
          throw std::invalid_argument("rules: forced rejection is not an edge");
        }
        rejected_[e.man].insert(e.woman);
      }
    }
  }

  // `rank` is m's position in w's list.
  bool accepts(int w, int m, int rank) const {
    if (rank > floor_[w]) return false;
    if (filter_[w] && !(*filter_[w])(m)) return false;
    if (!rejected_.empty() && rejected_[m].count(w)) return false;
    return true;
  }

  bool accepts(int w, int m) const { return accepts(w, m, inst_.woman_rank(w, m)); }

 private:
  void check_woman(int w) const {
    if (w < 0 || w >= inst_.num_women()) throw std::invalid_argument("rules: unknown woman");
  }

  const Instance& inst_;
  std::vector<int> floor_;
  std::vector<const std::function<bool(int)>*> filter_;
  std::vector<std::set<int>> rejected_;
};

}  // namespace detail

// Deferred acceptance from `start`. Free men are served FIFO; a displaced man
// rejoins the back of the queue and resumes below his lost partner.
inline Matching run(const Instance& inst, const ProposalRules& rules, const StartState& start) {
  const detail::CompiledRules compiled(inst, rules);
  Matching m = start.initial.num_men() == 0 && start.initial.num_women() == 0 ? Matching(inst)
                                                                             : start.initial;
  if (!is_valid_matching(inst, m)) throw std::invalid_argument("start: not a matching of the instance");

  const int n = inst.num_men();
  std::vector<int> next(static_cast<std::size_t>(n), 0);
  std::vector<int> held(static_cast<std::size_t>(inst.num_women()), INT_MAX);
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;

  for (const Edge& e : m.pairs()) {
    const int r = inst.woman_rank(e.woman, e.man);
    if (!compiled.accepts(e.woman, e.man, r)) {
      throw std::invalid_argument("start: pair (" + inst.man_name(e.man) + "," +
                                  inst.woman_name(e.woman) + ") violates the rules");
    }
    held[e.woman] = r;
    next[e.man] = inst.man_rank(e.man, e.woman) + 1;
  }
  if (start.free_men) {
    for (int a : *start.free_men) {
      if (a < 0 || a >= n) throw std::invalid_argument("start: unknown free man");
      if (m.partner_of_man(a) != kUnmatched) {
        throw std::invalid_argument("start: free man '" + inst.man_name(a) + "' is matched");
      }
      if (queued[a]) throw std::invalid_argument("start: man queued twice");
      queued[a] = 1;
      queue.push_back(a);
    }
  } else {
    for (int a = 0; a < n; ++a) {
      if (m.partner_of_man(a) == kUnmatched) {
        queued[a] = 1;
        queue.push_back(a);
      }
    }
  }
  // Men outside the queue never propose again unless displaced, so none of
  // them may sit on a blocking pair.
  for (int a = 0; a < n; ++a) {
    if (queued[a]) continue;
    const auto pref = inst.man_pref(a);
    const auto cross = inst.man_cross_ranks(a);
    const int stop = m.partner_of_man(a) == kUnmatched ? static_cast<int>(pref.size()) : next[a] - 1;
    for (int k = 0; k < stop; ++k) {
      const int w = pref[k];
      if (cross[k] < held[w] && compiled.accepts(w, a, cross[k])) {
        throw std::invalid_argument("start: (" + inst.man_name(a) + "," + inst.woman_name(w) +
                                    ") blocks the initial matching");
      }
    }
    if (m.partner_of_man(a) == kUnmatched) next[a] = static_cast<int>(pref.size());
  }

  std::vector<int> man(static_cast<std::size_t>(n));
  std::vector<int> woman(static_cast<std::size_t>(inst.num_women()));
  for (int a = 0; a < n; ++a) man[a] = m.partner_of_man(a);
  for (int w = 0; w < inst.num_women(); ++w) woman[w] = m.partner_of_woman(w);

  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    const auto pref = inst.man_pref(a);
    const auto cross = inst.man_cross_ranks(a);
    const int deg = static_cast<int>(pref.size());
    while (next[a] < deg) {
      const int k = next[a]++;
      const int w = pref[k];
      const int r = cross[k];
      if (r >= held[w] || !compiled.accepts(w, a, r)) continue;
      const int loser = woman[w];
      woman[w] = a;
      man[a] = w;
      held[w] = r;
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

inline Matching run(const Instance& inst, const ProposalRules& rules = {}) {
  return run(inst, rules, StartState{Matching(inst), std::nullopt});
}

// Reports the least blocking pair in (man, woman) index order.
inline StabilityVerdict is_stable(const Instance& inst, const Matching& m) {
  for (int a = 0; a < inst.num_men(); ++a) {
    const auto pref = inst.man_pref(a);
    const auto cross = inst.man_cross_ranks(a);
    const int p = m.partner_of_man(a);
    const int stop = p == kUnmatched ? static_cast<int>(pref.size()) : inst.man_rank(a, p);
    std::optional<int> best;
    for (int k = 0; k < stop; ++k) {
      const int w = pref[k];
      const int q = m.partner_of_woman(w);
      if (q == kUnmatched || cross[k] < inst.woman_rank(w, q)) {
        if (!best || w < *best) best = w;
      }
    }
    if (best) return {false, Edge{a, *best}};
  }
  return {true, std::nullopt};
}

inline Matching men_optimal(const Instance& inst) { return run(inst); }

inline Matching women_optimal(const Instance& inst) {
  return transpose(run(transpose(inst)));
}

// The men-optimal stable matching containing e, if any.
inline std::optional<Matching> stable_with_edge(const Instance& inst, Edge e) {
  if (e.man < 0 || e.man >= inst.num_men() || e.woman < 0 || e.woman >= inst.num_women() ||
      !inst.has_edge(e)) {
    throw std::invalid_argument("stable_with_edge: not an edge of the instance");
  }
  ProposalRules rules;
  rules.acceptance_floor[e.woman] = e.man;
  Matching m = run(inst, rules);
  if (!m.contains(e) || !is_stable(inst, m).stable) return std::nullopt;
  return m;
}

}  // namespace popmatch

#endif  // POPMATCH_GALE_SHAPLEY_HPP_
