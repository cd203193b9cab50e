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

// Exact min-cost stable and dominant matchings. A stable matching is the
// men-optimal one with a closed set of rotations applied, so the cheapest one
// comes from a maximum-weight closure, solved as a minimum cut.

#ifndef POPMATCH_MIN_COST_HPP_
#define POPMATCH_MIN_COST_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <deque>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/level_graph.hpp"
#include "popmatch/rotations.hpp"

namespace popmatch {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "12", "-3", "2.75", "-0.5", "7/4".
inline std::optional<Rational> parse_rational(std::string_view s) {
  auto digits = [](std::string_view t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!digits(p) || !digits(q)) return std::nullopt;
    const Integer den{std::string(q)};
    if (den == 0) return std::nullopt;
    out = Rational(Integer(std::string(p)), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto ip = body.substr(0, dot);
    const auto fp = body.substr(dot + 1);
    if ((!ip.empty() && !digits(ip)) || (!fp.empty() && !digits(fp)) || (ip.empty() && fp.empty())) {
      return std::nullopt;
    }
    Integer den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    const Integer num(std::string(ip.empty() ? "0" : ip) + std::string(fp));
    out = Rational(num, den);
  } else {
    if (!digits(body)) return std::nullopt;
    out = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-out) : out;
}

inline std::string format_fraction(const Rational& r) {
  std::string out = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1) out += "/" + boost::multiprecision::denominator(r).str();
  return out;
}

// Rounded half away from zero to `places` digits, trailing zeros dropped.
inline std::string format_decimal(const Rational& r, int places = 12) {
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Rational scaled = a * scale;
  Integer q = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  const Rational rest = scaled - Rational(q);
  if (rest * 2 >= 1) ++q;
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(places));
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (negative && out != "0") out.insert(0, "-");
  return out;
}

// Cost per edge id; absent entries are unpriced edges.
using CostFunction = std::vector<std::optional<Rational>>;

// Lines `<man> <woman> <cost>`.
inline CostFunction parse_costs(std::istream& in, const Instance& inst) {
  CostFunction c(inst.num_edges());
  for (const auto& [number, text] : detail::content_lines(in)) {
    const auto tokens = detail::split_ws(text);
    if (tokens.size() != 3) throw ParseError(number, "expected '<man> <woman> <cost>'");
    const auto e = edge_from_names(inst, tokens[0], tokens[1]);
    if (!e || !inst.has_edge(*e)) {
      throw ParseError(number, "(" + tokens[0] + "," + tokens[1] + ") is not an edge");
    }
    auto cost = parse_rational(tokens[2]);
    if (!cost) throw ParseError(number, "malformed cost '" + tokens[2] + "'");
    auto& slot = c[*inst.edge_id(e->man, e->woman)];
    if (slot) throw ParseError(number, "duplicate cost for (" + tokens[0] + "," + tokens[1] + ")");
    slot = std::move(*cost);
  }
  return c;
}

inline CostFunction parse_costs(std::string_view text, const Instance& inst) {
  std::istringstream in{std::string(text)};
  return parse_costs(in, inst);
}

inline void require_total(const Instance& inst, const CostFunction& c) {
  if (c.size() != inst.num_edges()) throw std::invalid_argument("cost function does not fit the instance");
  for (std::size_t id = 0; id < c.size(); ++id) {
    if (!c[id]) {
      const Edge e = inst.edges()[id];
      throw std::invalid_argument("missing cost for edge (" + inst.man_name(e.man) + "," +
                                  inst.woman_name(e.woman) + ")");
    }
  }
}

// Both copies of a man inherit his costs; dummy edges are free.
inline CostFunction extend_costs(const LevelInstance& level, const CostFunction& c) {
  const Instance& base = level.base();
  require_total(base, c);
  const Instance& g = level.graph();
  CostFunction out(g.num_edges());
  const auto edges = g.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge e = edges[id];
    if (level.is_dummy(e.woman)) {
      out[id] = Rational(0);
    } else {
      out[id] = *c[*base.edge_id(level.base_man(e.man), e.woman)];
    }
  }
  return out;
}

inline Rational matching_cost(const Instance& inst, const CostFunction& c, const Matching& m) {
  Rational total = 0;
  for (const Edge& e : m.pairs()) {
    const auto& v = c[*inst.edge_id(e.man, e.woman)];
    if (!v) throw std::invalid_argument("matching uses an unpriced edge");
    total += *v;
  }
  return total;
}

struct CostedMatching {
  Matching matching;
  Rational cost;
};

namespace detail {

// Edmonds-Karp on an adjacency-list residual graph.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(static_cast<std::size_t>(n)) {}

  void add_arc(int u, int v, const Rational& cap) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, Rational(0)});
  }

  Rational run(int s, int t) {
    Rational total = 0;
    const std::size_t n = adj_.size();
    while (true) {
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        const int u = queue.front();
        queue.pop_front();
        for (int id : adj_[u]) {
          const int v = arcs_[id].to;
          if (!seen[v] && arcs_[id].cap > 0) {
            seen[v] = 1;
            via[v] = id;
            queue.push_back(v);
          }
        }
      }
      if (!seen[t]) return total;
      Rational push = -1;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        if (push < 0 || arcs_[via[v]].cap < push) push = arcs_[via[v]].cap;
      }
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      total += push;
    }
  }

  // Vertices reachable from s in the residual graph.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int id : adj_[u]) {
        if (!seen[arcs_[id].to] && arcs_[id].cap > 0) {
          seen[arcs_[id].to] = 1;
          queue.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    Rational cap;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

inline CostedMatching min_cost_stable(const Instance& inst, const CostFunction& c) {
  require_total(inst, c);
  const RotationPoset poset = build_rotation_poset(inst);
  const int r = static_cast<int>(poset.rotations.size());
  auto cost_of = [&](int man, int woman) { return *c[*inst.edge_id(man, woman)]; };

  // Profit of a rotation: how much it lowers the cost.
  std::vector<Rational> profit(static_cast<std::size_t>(r));
  Rational big = 1;
  for (int id = 0; id < r; ++id) {
    for (const auto& mv : poset.rotations[id].moves) {
      profit[id] += cost_of(mv.man, mv.from) - cost_of(mv.man, mv.to);
    }
    big += profit[id] < 0 ? Rational(-profit[id]) : profit[id];
  }
  const int s = r, t = r + 1;
  detail::MaxFlow flow(r + 2);
  for (int id = 0; id < r; ++id) {
    if (profit[id] > 0) flow.add_arc(s, id, profit[id]);
    if (profit[id] < 0) flow.add_arc(id, t, -profit[id]);
    for (int p : poset.predecessors[id]) flow.add_arc(id, p, big);
  }
  flow.run(s, t);
  const auto side = flow.source_side(s);
  std::vector<char> chosen(static_cast<std::size_t>(r));
  for (int id = 0; id < r; ++id) chosen[id] = side[id];
  Matching m = apply_rotations(poset, chosen);
  Rational cost = matching_cost(inst, c, m);
  return {std::move(m), std::move(cost)};
}

inline CostedMatching min_cost_dominant(const Instance& inst, const CostFunction& c) {
  const LevelInstance level = build_level_graph(inst);
  const auto best = min_cost_stable(level.graph(), extend_costs(level, c));
  Matching m = collapse_to_base(level, best.matching);
  Rational cost = matching_cost(inst, c, m);
  return {std::move(m), std::move(cost)};
}

}  // namespace popmatch

#endif  // POPMATCH_MIN_COST_HPP_
