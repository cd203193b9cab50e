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

// Exhaustive reference implementations. Everything here follows the
// definitions literally and is only meant for small instances.

#ifndef POPMATCH_ORACLES_HPP_
#define POPMATCH_ORACLES_HPP_

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"

namespace popmatch {

class EnumerationLimitError : public std::length_error {
 public:
  EnumerationLimitError(std::size_t edges, std::size_t limit)
      : std::length_error("instance has " + std::to_string(edges) +
                          " edges, above the enumeration limit of " + std::to_string(limit)) {}
};

// POPMATCH_MAX_ENUM if set to a positive integer, otherwise 24.
inline std::size_t default_max_edges() {
  if (const char* env = std::getenv("POPMATCH_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 24;
}

struct OracleOptions {
  std::size_t max_edges = default_max_edges();
  unsigned threads = 1;
};

// All matchings, ordered lexicographically by their sorted pair lists.
inline std::vector<Matching> enumerate_matchings(const Instance& inst,
                                                 const OracleOptions& opt = {}) {
  if (inst.num_edges() > opt.max_edges) throw EnumerationLimitError(inst.num_edges(), opt.max_edges);
  std::vector<std::vector<int>> by_index(static_cast<std::size_t>(inst.num_men()));
  for (const Edge& e : inst.edges()) by_index[e.man].push_back(e.woman);

  std::vector<Matching> out;
  Matching cur(inst);
  // Every extension of `cur` by men >= i: first `cur` itself, then by the
  // next pair added.
  std::function<void(int)> rec = [&](int i) {
    out.push_back(cur);
    for (int a = i; a < inst.num_men(); ++a) {
      for (int w : by_index[a]) {
        if (cur.partner_of_woman(w) != kUnmatched) continue;
        cur.add({a, w});
        rec(a + 1);
        cur.remove({a, w});
      }
    }
  };
  rec(0);
  return out;
}

namespace detail {

// Partner rank per vertex, men first; unmatched ranks below every neighbor.
inline std::vector<int> score(const Instance& inst, const Matching& m) {
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(inst.num_vertices()));
  for (int a = 0; a < inst.num_men(); ++a) {
    const int p = m.partner_of_man(a);
    s.push_back(p == kUnmatched ? INT_MAX : inst.man_rank(a, p));
  }
  for (int b = 0; b < inst.num_women(); ++b) {
    const int p = m.partner_of_woman(b);
    s.push_back(p == kUnmatched ? INT_MAX : inst.woman_rank(b, p));
  }
  return s;
}

// (votes for x, votes for y).
inline std::pair<int, int> tally(const int* x, const int* y, std::size_t n) {
  int fx = 0, fy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    fx += x[i] < y[i];
    fy += y[i] < x[i];
  }
  return {fx, fy};
}

// f(i, worker) for i in [0, n), strided over `workers` threads.
template <typename F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i, 0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < workers; ++k) {
    pool.emplace_back([&, k] {
      for (std::size_t i = k; i < n; i += workers) f(i, k);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

struct OracleCensus {
  std::vector<Matching> all;
  std::vector<char> popular;
  std::vector<char> stable;
  std::vector<char> dominant;

  std::vector<Matching> select(const std::vector<char>& flags) const {
    std::vector<Matching> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (flags[i]) out.push_back(all[i]);
    }
    return out;
  }
  std::vector<Matching> popular_set() const { return select(popular); }
  std::vector<Matching> stable_set() const { return select(stable); }
  std::vector<Matching> dominant_set() const { return select(dominant); }
};

// Classifies every matching: popular if it loses no election, dominant if no
// matching defeats it, stable if no edge blocks it.
inline OracleCensus census(const Instance& inst, const OracleOptions& opt = {}) {
  OracleCensus c;
  c.all = enumerate_matchings(inst, opt);
  const std::size_t n = c.all.size();
  const std::size_t nv = static_cast<std::size_t>(inst.num_vertices());
  std::vector<int> scores(n * nv);
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = detail::score(inst, c.all[i]);
    std::copy(s.begin(), s.end(), scores.begin() + static_cast<std::ptrdiff_t>(i * nv));
    sizes[i] = c.all[i].size();
  }
  auto row = [&](std::size_t i) { return scores.data() + i * nv; };

  c.popular.assign(n, 0);
  c.dominant.assign(n, 0);
  c.stable.assign(n, 0);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(opt.threads, 1, std::max<std::size_t>(n, 1)));
  // Matchings that recently won an election are likely to win again, so
  // they are tried before the full scan.
  std::vector<std::vector<std::size_t>> recent(workers);
  detail::parallel_for(n, workers, [&](std::size_t i, unsigned k) {
    auto& winners = recent[k];
    auto beats = [&](std::size_t j) {
      const auto [fj, fi] = detail::tally(row(j), row(i), nv);
      return fj > fi;
    };
    bool popular = true;
    for (std::size_t j : winners) {
      if (beats(j)) {
        popular = false;
        break;
      }
    }
    if (popular) {
      for (std::size_t j = 0; j < n; ++j) {
        if (beats(j)) {
          popular = false;
          winners.insert(winners.begin(), j);
          if (winners.size() > 16) winners.pop_back();
          break;
        }
      }
    }
    c.popular[i] = popular;
    if (popular) {
      bool undefeated = true;
      for (std::size_t j = 0; j < n && undefeated; ++j) {
        const auto [fj, fi] = detail::tally(row(j), row(i), nv);
        if (fj > fi || (fj == fi && sizes[j] > sizes[i])) undefeated = false;
      }
      c.dominant[i] = undefeated;
    }
    bool stable = true;
    for (const Edge& e : inst.edges()) {
      if (c.all[i].contains(e)) continue;
      const int pa = c.all[i].partner_of_man(e.man);
      const int pb = c.all[i].partner_of_woman(e.woman);
      const bool a_wants = pa == kUnmatched || inst.man_rank(e.man, e.woman) < inst.man_rank(e.man, pa);
      const bool b_wants =
          pb == kUnmatched || inst.woman_rank(e.woman, e.man) < inst.woman_rank(e.woman, pb);
      if (a_wants && b_wants) {
        stable = false;
        break;
      }
    }
    c.stable[i] = stable;
  });
  return c;
}

inline std::vector<Matching> popular_set(const Instance& inst, const OracleOptions& opt = {}) {
  return census(inst, opt).popular_set();
}
inline std::vector<Matching> stable_set(const Instance& inst, const OracleOptions& opt = {}) {
  return census(inst, opt).stable_set();
}
inline std::vector<Matching> dominant_set(const Instance& inst, const OracleOptions& opt = {}) {
  return census(inst, opt).dominant_set();
}

// Edges lying in some popular matching, in (man, woman) order.
inline std::vector<Edge> popular_edges(const std::vector<Matching>& popular) {
  std::vector<Edge> out;
  for (const auto& m : popular) {
    for (const Edge& e : m.pairs()) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Edge> popular_edges(const Instance& inst, const OracleOptions& opt = {}) {
  return popular_edges(popular_set(inst, opt));
}

inline std::size_t maximum_matching_size(const Instance& inst) {
  std::vector<int> woman(static_cast<std::size_t>(inst.num_women()), kUnmatched);
  std::vector<int> seen(static_cast<std::size_t>(inst.num_women()), -1);
  std::function<bool(int, int)> augment = [&](int a, int stamp) {
    for (int w : inst.man_pref(a)) {
      if (seen[w] == stamp) continue;
      seen[w] = stamp;
      if (woman[w] == kUnmatched || augment(woman[w], stamp)) {
        woman[w] = a;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (int a = 0; a < inst.num_men(); ++a) {
    if (augment(a, a)) ++size;
  }
  return size;
}

// All stable matchings, lexicographically ordered. Each man is tried only on
// women between his men-optimal and women-optimal partners; every candidate
// is checked against every edge before it is kept.
inline std::vector<Matching> enumerate_stable_matchings(const Instance& inst) {
  const Matching hi = men_optimal(inst);
  const Matching lo = women_optimal(inst);
  const int n = inst.num_men();
  std::vector<std::vector<int>> options(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int p = hi.partner_of_man(a);
    if (p == kUnmatched) continue;
    const int q = lo.partner_of_man(a);
    const int last = q == kUnmatched ? inst.degree(man_vertex(a)) - 1 : inst.man_rank(a, q);
    const auto pref = inst.man_pref(a);
    for (int r = inst.man_rank(a, p); r <= last; ++r) options[a].push_back(pref[r]);
  }

  std::vector<Matching> out;
  Matching cur(inst);
  auto blocks = [&](int a, int w) {
    const int pa = cur.partner_of_man(a);
    const int pw = cur.partner_of_woman(w);
    return pa != kUnmatched && pw != kUnmatched && pa != w &&
           inst.man_rank(a, w) < inst.man_rank(a, pa) && inst.woman_rank(w, a) < inst.woman_rank(w, pw);
  };
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      if (is_stable(inst, cur).stable) out.push_back(cur);
      return;
    }
    if (options[a].empty()) {
      rec(a + 1);
      return;
    }
    for (int w : options[a]) {
      if (cur.partner_of_woman(w) != kUnmatched) continue;
      cur.add({a, w});
      bool ok = true;
      for (int x : inst.man_pref(a)) {
        if (x == w) break;
        if (blocks(a, x)) {
          ok = false;
          break;
        }
      }
      for (int y : inst.woman_pref(w)) {
        if (!ok || y == a) break;
        if (blocks(y, w)) ok = false;
      }
      if (ok) rec(a + 1);
      cur.remove({a, w});
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace popmatch

#endif  // POPMATCH_ORACLES_HPP_
