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

// Certificate-producing checks for stability, popularity and dominance, and
// the A0/A1/B0/B1 partition of a matching.
//
// Alternating paths are searched in a digraph D on the vertices of G: a man
// points to every G_M neighbor other than his partner, and a matched woman
// points to her partner. Every alternating path of G_M, read in the direction
// in which its non-matching edges run man to woman, is a path of D.

#ifndef POPMATCH_VERIFY_HPP_
#define POPMATCH_VERIFY_HPP_

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "popmatch/elections.hpp"
#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"

namespace popmatch {

enum class CertificateKind {
  kBlockingPair,
  kPlusPlusCycle,
  kPlusPlusPathFromUnmatched,
  kTwoPlusPlusPath,
  kAugmentingPath,
  kPartitionOverlap,
};

inline std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kBlockingPair: return "blocking-pair";
    case CertificateKind::kPlusPlusCycle: return "pp-cycle";
    case CertificateKind::kPlusPlusPathFromUnmatched: return "pp-path-from-unmatched";
    case CertificateKind::kTwoPlusPlusPath: return "two-pp-path";
    case CertificateKind::kAugmentingPath: return "augmenting-path";
    case CertificateKind::kPartitionOverlap: return "partition-overlap";
  }
  return "unknown";
}

struct Certificate {
  CertificateKind kind = CertificateKind::kBlockingPair;
  // Consecutive vertices are G_M edges; a cycle repeats its first vertex.
  std::vector<Vertex> witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Certificate> certificate;
};

class VerificationError : public std::invalid_argument {
 public:
  VerificationError(const std::string& what, Certificate cert)
      : std::invalid_argument(what), certificate_(std::move(cert)) {}
  const Certificate& certificate() const noexcept { return certificate_; }

 private:
  Certificate certificate_;
};

struct Partition {
  std::vector<char> a0, a1;  // men
  std::vector<char> b0, b1;  // women
  // Which seeds reach each vertex: unmatched vertices, or (+,+) endpoints.
  std::vector<char> man_via_unmatched, man_via_plus_plus;
  std::vector<char> woman_via_unmatched, woman_via_plus_plus;

  std::optional<int> man_overlap() const {
    for (std::size_t a = 0; a < a0.size(); ++a) {
      if (a0[a] && a1[a]) return static_cast<int>(a);
    }
    return std::nullopt;
  }
  std::optional<int> woman_overlap() const {
    for (std::size_t b = 0; b < b0.size(); ++b) {
      if (b0[b] && b1[b]) return static_cast<int>(b);
    }
    return std::nullopt;
  }
  bool disjoint() const { return !man_overlap() && !woman_overlap(); }

  bool in_prime(Vertex v) const {
    return v.side == Side::kMan ? (a0[v.index] || a1[v.index]) : (b0[v.index] || b1[v.index]);
  }
};

namespace detail {

struct PartitionSets {
  std::vector<char> a0, a1, b0, b1;
};

// Steps 1-3 from the given seeds. With `matched_only`, closures skip
// unmatched vertices.
inline PartitionSets partition_closure(const Instance& inst, const Matching& m,
                                       const LabeledGraph& g, bool seed_unmatched,
                                       bool seed_plus_plus, bool matched_only) {
  PartitionSets s;
  s.a0.assign(static_cast<std::size_t>(inst.num_men()), 0);
  s.a1.assign(static_cast<std::size_t>(inst.num_men()), 0);
  s.b0.assign(static_cast<std::size_t>(inst.num_women()), 0);
  s.b1.assign(static_cast<std::size_t>(inst.num_women()), 0);
  if (seed_unmatched) {
    for (int a = 0; a < inst.num_men(); ++a) {
      if (m.partner_of_man(a) == kUnmatched) s.a1[a] = 1;
    }
    for (int b = 0; b < inst.num_women(); ++b) {
      if (m.partner_of_woman(b) == kUnmatched) s.b0[b] = 1;
    }
  }
  if (seed_plus_plus) {
    for (const Edge& e : g.plus_plus_edges()) {
      s.a0[e.man] = 1;
      if (int p = m.partner_of_man(e.man); p != kUnmatched) s.b0[p] = 1;
      s.b1[e.woman] = 1;
      if (int p = m.partner_of_woman(e.woman); p != kUnmatched) s.a1[p] = 1;
    }
  }

  std::deque<int> queue;
  for (int b = 0; b < inst.num_women(); ++b) {
    if (s.b0[b]) queue.push_back(b);
  }
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (int a : g.woman_neighbors(b)) {
      if (s.a0[a]) continue;
      const int p = m.partner_of_man(a);
      if (matched_only && p == kUnmatched) continue;
      s.a0[a] = 1;
      if (p != kUnmatched && !s.b0[p]) {
        s.b0[p] = 1;
        queue.push_back(p);
      }
    }
  }

  for (int a = 0; a < inst.num_men(); ++a) {
    if (s.a1[a]) queue.push_back(a);
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : g.man_neighbors(a)) {
      if (s.b1[b]) continue;
      const int p = m.partner_of_woman(b);
      if (matched_only && p == kUnmatched) continue;
      s.b1[b] = 1;
      if (p != kUnmatched && !s.a1[p]) {
        s.a1[p] = 1;
        queue.push_back(p);
      }
    }
  }
  return s;
}

}  // namespace detail

// With seed_unmatched the closure starts from unmatched vertices as well as
// blocking pairs and only ever adds matched vertices; without it, only
// blocking pairs seed and the closure is unrestricted.
inline Partition partition(const Instance& inst, const Matching& m, bool seed_unmatched) {
  const LabeledGraph g(inst, m);
  const bool matched_only = seed_unmatched;
  auto full = detail::partition_closure(inst, m, g, seed_unmatched, true, matched_only);
  auto from_pp = detail::partition_closure(inst, m, g, false, true, matched_only);
  Partition p;
  p.a0 = std::move(full.a0);
  p.a1 = std::move(full.a1);
  p.b0 = std::move(full.b0);
  p.b1 = std::move(full.b1);
  const auto nm = static_cast<std::size_t>(inst.num_men());
  const auto nw = static_cast<std::size_t>(inst.num_women());
  p.man_via_plus_plus.assign(nm, 0);
  p.woman_via_plus_plus.assign(nw, 0);
  p.man_via_unmatched.assign(nm, 0);
  p.woman_via_unmatched.assign(nw, 0);
  for (std::size_t a = 0; a < nm; ++a) p.man_via_plus_plus[a] = from_pp.a0[a] || from_pp.a1[a];
  for (std::size_t b = 0; b < nw; ++b) p.woman_via_plus_plus[b] = from_pp.b0[b] || from_pp.b1[b];
  if (seed_unmatched) {
    auto from_um = detail::partition_closure(inst, m, g, true, false, matched_only);
    for (std::size_t a = 0; a < nm; ++a) p.man_via_unmatched[a] = from_um.a0[a] || from_um.a1[a];
    for (std::size_t b = 0; b < nw; ++b) p.woman_via_unmatched[b] = from_um.b0[b] || from_um.b1[b];
  }
  return p;
}

namespace detail {

// Breadth-first search in D. Nodes are men 0..n-1 and women n..n+k-1.
class AlternatingDigraph {
 public:
  AlternatingDigraph(const Instance& inst, const Matching& m, const LabeledGraph& g)
      : inst_(inst), m_(m), g_(g), n_(inst.num_men()),
        size_(static_cast<std::size_t>(inst.num_men() + inst.num_women())) {}

  int node(Vertex v) const { return v.side == Side::kMan ? v.index : n_ + v.index; }
  Vertex vertex(int x) const { return x < n_ ? man_vertex(x) : woman_vertex(x - n_); }
  std::size_t size() const { return size_; }

  template <typename F>
  void successors(int x, F&& f) const {
    if (x < n_) {
      const int p = m_.partner_of_man(x);
      for (int b : g_.man_neighbors(x)) {
        if (b != p) f(n_ + b);
      }
    } else if (int p = m_.partner_of_woman(x - n_); p != kUnmatched) {
      f(p);
    }
  }

  template <typename F>
  void predecessors(int x, F&& f) const {
    if (x >= n_) {
      const int b = x - n_;
      const int p = m_.partner_of_woman(b);
      for (int a : g_.woman_neighbors(b)) {
        if (a != p) f(a);
      }
    } else if (int p = m_.partner_of_man(x); p != kUnmatched) {
      f(n_ + p);
    }
  }

  // Nodes reachable from `sources` (forward) or reaching them (backward).
  std::vector<char> reach(const std::vector<int>& sources, bool forward) const {
    std::vector<char> seen(size_, 0);
    std::deque<int> queue;
    for (int s : sources) {
      if (!seen[s]) {
        seen[s] = 1;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      auto visit = [&](int y) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      };
      if (forward) {
        successors(x, visit);
      } else {
        predecessors(x, visit);
      }
    }
    return seen;
  }

  // Shortest path from any source to a node accepted by `is_target`, never
  // entering `blocked`. Sources are tried in the order given.
  template <typename Target>
  std::optional<std::vector<int>> path(const std::vector<int>& sources,
                                       const std::vector<int>& blocked,
                                       Target&& is_target) const {
    std::vector<int> parent(size_, -2);
    for (int b : blocked) parent[b] = -3;
    std::deque<int> queue;
    for (int s : sources) {
      if (parent[s] != -2) continue;
      parent[s] = -1;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (is_target(x)) {
        std::vector<int> out;
        for (int y = x; y != -1; y = parent[y]) out.push_back(y);
        std::reverse(out.begin(), out.end());
        return out;
      }
      successors(x, [&](int y) {
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
      });
    }
    return std::nullopt;
  }

  std::vector<Vertex> to_vertices(const std::vector<int>& nodes) const {
    std::vector<Vertex> out;
    out.reserve(nodes.size());
    for (int x : nodes) out.push_back(vertex(x));
    return out;
  }

 private:
  const Instance& inst_;
  const Matching& m_;
  const LabeledGraph& g_;
  int n_;
  std::size_t size_;
};

}  // namespace detail

inline Verdict check_stable(const Instance& inst, const Matching& m) {
  const auto v = is_stable(inst, m);
  if (v.stable) return {};
  return {false, Certificate{CertificateKind::kBlockingPair,
                             {man_vertex(v.blocking_pair->man), woman_vertex(v.blocking_pair->woman)}}};
}

// Conditions (i)-(iii) on G_M. Violations are looked for first among paths
// from unmatched vertices, then paths with two blocking edges, then cycles;
// within a kind, blocking edges are taken in (man, woman) order.
inline Verdict is_popular(const Instance& inst, const Matching& m) {
  const LabeledGraph g(inst, m);
  const auto& pp = g.plus_plus_edges();
  if (pp.empty()) return {};
  const detail::AlternatingDigraph d(inst, m, g);
  const int n = inst.num_men();

  std::vector<int> unmatched_men, unmatched_women, tails;
  for (int a = 0; a < n; ++a) {
    if (m.partner_of_man(a) == kUnmatched) unmatched_men.push_back(a);
  }
  for (int b = 0; b < inst.num_women(); ++b) {
    if (m.partner_of_woman(b) == kUnmatched) unmatched_women.push_back(n + b);
  }
  for (const Edge& e : pp) tails.push_back(e.man);

  const auto from_unmatched = d.reach(unmatched_men, true);
  const auto to_unmatched = d.reach(unmatched_women, false);
  const auto to_tail = d.reach(tails, false);
  bool flagged = false;
  for (const Edge& e : pp) {
    if (from_unmatched[e.man] || to_unmatched[n + e.woman] || to_tail[n + e.woman]) flagged = true;
  }
  if (!flagged) return {};

  auto fail = [&](CertificateKind kind, std::vector<int> nodes) {
    return Verdict{false, Certificate{kind, d.to_vertices(nodes)}};
  };

  for (const Edge& e : pp) {
    const int a = e.man;
    const int b = n + e.woman;
    if (from_unmatched[a]) {
      auto p = d.path(unmatched_men, {b}, [&](int x) { return x == a; });
      if (p) {
        p->push_back(b);
        return fail(CertificateKind::kPlusPlusPathFromUnmatched, std::move(*p));
      }
    }
    if (to_unmatched[b]) {
      auto p = d.path({b}, {a}, [&](int x) { return x >= n && m.partner_of_woman(x - n) == kUnmatched; });
      if (p) {
        p->insert(p->begin(), a);
        std::reverse(p->begin(), p->end());
        return fail(CertificateKind::kPlusPlusPathFromUnmatched, std::move(*p));
      }
    }
  }

  for (const Edge& e1 : pp) {
    const int a1 = e1.man;
    const int b1 = n + e1.woman;
    if (!to_tail[b1]) continue;
    const auto near = d.reach({b1}, true);
    for (const Edge& e2 : pp) {
      if (e2 == e1) continue;
      const int a2 = e2.man;
      const int b2 = n + e2.woman;
      if (!near[a2] || a2 == a1 || b2 == b1) continue;
      auto p = d.path({b1}, {a1, b2}, [&](int x) { return x == a2; });
      if (p) {
        p->insert(p->begin(), a1);
        p->push_back(b2);
        return fail(CertificateKind::kTwoPlusPlusPath, std::move(*p));
      }
    }
  }

  for (const Edge& e : pp) {
    const int a = e.man;
    const int b = n + e.woman;
    if (!to_tail[b]) continue;
    auto p = d.path({b}, {}, [&](int x) { return x == a; });
    if (p) {
      p->insert(p->begin(), a);
      return fail(CertificateKind::kPlusPlusCycle, std::move(*p));
    }
  }
  throw std::logic_error("is_popular: reachability flagged a violation but no certificate was found");
}

inline std::optional<Certificate> find_augmenting_path(const Instance& inst, const Matching& m) {
  const LabeledGraph g(inst, m);
  const detail::AlternatingDigraph d(inst, m, g);
  const int n = inst.num_men();
  std::vector<int> sources;
  for (int a = 0; a < n; ++a) {
    if (m.partner_of_man(a) == kUnmatched) sources.push_back(a);
  }
  if (sources.empty()) return std::nullopt;
  auto p = d.path(sources, {}, [&](int x) { return x >= n && m.partner_of_woman(x - n) == kUnmatched; });
  if (!p) return std::nullopt;
  return Certificate{CertificateKind::kAugmentingPath, d.to_vertices(*p)};
}

inline Verdict is_dominant(const Instance& inst, const Matching& m) {
  auto v = is_popular(inst, m);
  if (!v.holds) return v;
  if (auto c = find_augmenting_path(inst, m)) return {false, std::move(*c)};
  return {};
}

// Re-derives the claim of a certificate from scratch.
inline bool replay(const Instance& inst, const Matching& m, const Certificate& cert) {
  const auto& w = cert.witness;
  auto in_range = [&](Vertex v) {
    return v.index >= 0 && v.index < (v.side == Side::kMan ? inst.num_men() : inst.num_women());
  };
  for (const Vertex& v : w) {
    if (!in_range(v)) return false;
  }
  if (cert.kind == CertificateKind::kPartitionOverlap) {
    if (w.size() != 1) return false;
    const auto p = partition(inst, m, true);
    return w[0].side == Side::kMan ? (p.a0[w[0].index] && p.a1[w[0].index])
                                   : (p.b0[w[0].index] && p.b1[w[0].index]);
  }
  if (w.size() < 2) return false;

  const LabeledGraph g(inst, m);
  const bool closed = cert.kind == CertificateKind::kPlusPlusCycle;
  if (closed && (w.size() < 5 || w.front() != w.back())) return false;
  const std::size_t distinct = closed ? w.size() - 1 : w.size();
  {
    std::vector<Vertex> sorted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(distinct));
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }

  int plus_plus = 0;
  std::optional<bool> last_matching;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].side == w[i + 1].side) return false;
    const Edge e = w[i].side == Side::kMan ? Edge{w[i].index, w[i + 1].index}
                                           : Edge{w[i + 1].index, w[i].index};
    if (!inst.has_edge(e) || !g.in_gm(e)) return false;
    const bool matching = m.contains(e);
    if (last_matching && *last_matching == matching) return false;
    last_matching = matching;
    if (!matching && g.label(e)->plus_plus()) ++plus_plus;
  }

  switch (cert.kind) {
    case CertificateKind::kBlockingPair:
      return w.size() == 2 && plus_plus == 1;
    case CertificateKind::kPlusPlusCycle: {
      // Alternation must also hold across the closing vertex.
      const Vertex x = w[0], y = w[1], z = w[w.size() - 2];
      const Edge first = x.side == Side::kMan ? Edge{x.index, y.index} : Edge{y.index, x.index};
      const Edge last = x.side == Side::kMan ? Edge{x.index, z.index} : Edge{z.index, x.index};
      return m.contains(first) != m.contains(last) && plus_plus >= 1;
    }
    case CertificateKind::kPlusPlusPathFromUnmatched:
      return !m.is_matched(w.front()) && plus_plus >= 1;
    case CertificateKind::kTwoPlusPlusPath:
      return plus_plus >= 2;
    case CertificateKind::kAugmentingPath:
      return !m.is_matched(w.front()) && !m.is_matched(w.back());
    case CertificateKind::kPartitionOverlap:
      break;
  }
  return false;
}

inline std::string describe(const Instance& inst, const Certificate& cert) {
  std::string out(to_string(cert.kind));
  out += ":";
  for (const Vertex& v : cert.witness) out += " " + inst.name(v);
  return out;
}

}  // namespace popmatch

#endif  // POPMATCH_VERIFY_HPP_
