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

// Votes, head-to-head elections between matchings, and the edge labels that
// define the pruned graph G_M.

#ifndef POPMATCH_ELECTIONS_HPP_
#define POPMATCH_ELECTIONS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

enum class Vote : int { kMinus = -1, kZero = 0, kPlus = 1 };

inline char vote_symbol(Vote v) {
  return v == Vote::kPlus ? '+' : v == Vote::kMinus ? '-' : '0';
}

// How u compares x against y, where y may be kUnmatched.
inline Vote vote(const Instance& inst, Vertex u, int x, int y) {
  const int rx = inst.rank(u, x);
  if (rx < 0) {
    throw std::invalid_argument("vote: '" + inst.name(u) + "' is not adjacent to the candidate");
  }
  if (y == kUnmatched) return Vote::kPlus;
  if (x == y) return Vote::kZero;
  const int ry = inst.rank(u, y);
  if (ry < 0) {
    throw std::invalid_argument("vote: '" + inst.name(u) + "' is not adjacent to the incumbent");
  }
  return rx < ry ? Vote::kPlus : Vote::kMinus;
}

struct ElectionResult {
  int for_first = 0;
  int for_second = 0;

  friend bool operator==(const ElectionResult&, const ElectionResult&) = default;
};

namespace detail {

// +1 if v prefers partner p to q, -1 if q to p, 0 if indifferent.
inline int side_preference(const Instance& inst, Vertex v, int p, int q) {
  if (p == q) return 0;
  if (p == kUnmatched) return -1;
  if (q == kUnmatched) return 1;
  return inst.rank(v, p) < inst.rank(v, q) ? 1 : -1;
}

}  // namespace detail

inline ElectionResult compare(const Instance& inst, const Matching& m1, const Matching& m2) {
  ElectionResult r;
  auto tally = [&](int pref) {
    if (pref > 0) ++r.for_first;
    if (pref < 0) ++r.for_second;
  };
  for (int a = 0; a < inst.num_men(); ++a) {
    tally(detail::side_preference(inst, man_vertex(a), m1.partner_of_man(a), m2.partner_of_man(a)));
  }
  for (int b = 0; b < inst.num_women(); ++b) {
    tally(detail::side_preference(inst, woman_vertex(b), m1.partner_of_woman(b),
                                  m2.partner_of_woman(b)));
  }
  return r;
}

inline bool more_popular(const Instance& inst, const Matching& m1, const Matching& m2) {
  const auto r = compare(inst, m1, m2);
  return r.for_first > r.for_second;
}

inline bool defeats(const Instance& inst, const Matching& m1, const Matching& m2) {
  const auto r = compare(inst, m1, m2);
  return r.for_first > r.for_second || (r.for_first == r.for_second && m1.size() > m2.size());
}

struct EdgeLabel {
  Vote man_vote = Vote::kZero;
  Vote woman_vote = Vote::kZero;

  bool plus_plus() const { return man_vote == Vote::kPlus && woman_vote == Vote::kPlus; }
  bool minus_minus() const { return man_vote == Vote::kMinus && woman_vote == Vote::kMinus; }
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

// Labels of E \ M w.r.t. M, indexed by edge id, and the adjacency of G_M.
class LabeledGraph {
 public:
  LabeledGraph(const Instance& inst, const Matching& m) : inst_(&inst) {
    const auto edges = inst.edges();
    labels_.resize(edges.size());
    in_gm_.assign(edges.size(), 1);
    man_adj_.resize(static_cast<std::size_t>(inst.num_men()));
    woman_adj_.resize(static_cast<std::size_t>(inst.num_women()));
    for (std::size_t id = 0; id < edges.size(); ++id) {
      const Edge e = edges[id];
      if (m.contains(e)) {
        man_adj_[e.man].push_back(e.woman);
        woman_adj_[e.woman].push_back(e.man);
        continue;
      }
      const EdgeLabel label{vote(inst, man_vertex(e.man), e.woman, m.partner_of_man(e.man)),
                            vote(inst, woman_vertex(e.woman), e.man, m.partner_of_woman(e.woman))};
      labels_[id] = label;
      if (label.minus_minus()) {
        in_gm_[id] = 0;
        continue;
      }
      if (label.plus_plus()) plus_plus_.push_back(e);
      man_adj_[e.man].push_back(e.woman);
      woman_adj_[e.woman].push_back(e.man);
    }
  }

  const Instance& instance() const { return *inst_; }

  // Absent for edges of M.
  std::optional<EdgeLabel> label(Edge e) const {
    auto id = inst_->edge_id(e.man, e.woman);
    if (!id) throw std::invalid_argument("label: not an edge");
    return labels_[*id];
  }
  std::optional<EdgeLabel> label_by_id(std::size_t id) const { return labels_[id]; }

  bool in_gm(Edge e) const {
    auto id = inst_->edge_id(e.man, e.woman);
    return id && in_gm_[*id];
  }

  // G_M neighbors, in (man, woman) edge-id order.
  const std::vector<int>& man_neighbors(int a) const { return man_adj_[a]; }
  const std::vector<int>& woman_neighbors(int b) const { return woman_adj_[b]; }

  // Blocking pairs of M in edge-id order.
  const std::vector<Edge>& plus_plus_edges() const { return plus_plus_; }

  std::size_t num_gm_edges() const {
    std::size_t n = 0;
    for (char c : in_gm_) n += c ? 1 : 0;
    return n;
  }

 private:
  const Instance* inst_;
  std::vector<std::optional<EdgeLabel>> labels_;
  std::vector<char> in_gm_;
  std::vector<std::vector<int>> man_adj_;
  std::vector<std::vector<int>> woman_adj_;
  std::vector<Edge> plus_plus_;
};

inline LabeledGraph label_edges(const Instance& inst, const Matching& m) {
  return LabeledGraph(inst, m);
}

}  // namespace popmatch

#endif  // POPMATCH_ELECTIONS_HPP_
