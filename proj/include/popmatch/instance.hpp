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

// Bipartite preference instances, matchings, the PREF v1 text format and a
// seeded random generator.
//
// Vertices are addressed by dense indices per side: men are 0..num_men()-1
// and women 0..num_women()-1, both in declaration order. Names are opaque
// tokens used only for I/O.

#ifndef POPMATCH_INSTANCE_HPP_
#define POPMATCH_INSTANCE_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace popmatch {

inline constexpr int kUnmatched = -1;

enum class Side : std::uint8_t { kMan, kWoman };

struct Vertex {
  Side side = Side::kMan;
  int index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex man_vertex(int m) { return {Side::kMan, m}; }
inline Vertex woman_vertex(int w) { return {Side::kWoman, w}; }

struct Edge {
  int man = 0;
  int woman = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Malformed PREF / matching / cost text. line() is 1-based, 0 when the
// problem is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class Instance {
 public:
  Instance() = default;

  // Preference lists hold indices into the opposite side, most preferred
  // first. Throws std::invalid_argument on duplicate names, out-of-range
  // indices, duplicate list entries or asymmetric adjacency.
  Instance(std::vector<std::string> men, std::vector<std::string> women,
           std::vector<std::vector<int>> men_pref,
           std::vector<std::vector<int>> women_pref)
      : men_(std::move(men)),
        women_(std::move(women)),
        men_pref_(std::move(men_pref)),
        women_pref_(std::move(women_pref)) {
    if (men_pref_.size() != men_.size() || women_pref_.size() != women_.size()) {
      throw std::invalid_argument("preference table size does not match vertex count");
    }
    index_names();
    men_lookup_ = build_lookup(men_pref_, num_women(), Side::kMan);
    women_lookup_ = build_lookup(women_pref_, num_men(), Side::kWoman);
    check_symmetry();
    build_edges();
  }

  int num_men() const { return static_cast<int>(men_.size()); }
  int num_women() const { return static_cast<int>(women_.size()); }
  int num_vertices() const { return num_men() + num_women(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& man_name(int m) const { return men_[m]; }
  const std::string& woman_name(int w) const { return women_[w]; }
  const std::string& name(Vertex v) const {
    return v.side == Side::kMan ? men_[v.index] : women_[v.index];
  }
  const std::vector<std::string>& men_names() const { return men_; }
  const std::vector<std::string>& women_names() const { return women_; }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  std::span<const int> man_pref(int m) const { return men_pref_[m]; }
  std::span<const int> woman_pref(int w) const { return women_pref_[w]; }
  std::span<const int> pref(Vertex v) const {
    return v.side == Side::kMan ? man_pref(v.index) : woman_pref(v.index);
  }
  int degree(Vertex v) const { return static_cast<int>(pref(v).size()); }

  // Parallel to man_pref(m): the position of m in each listed woman's list.
  std::span<const int> man_cross_ranks(int m) const { return men_cross_[m]; }

  // Position of w in m's list (0 = top choice), -1 if not adjacent.
  int man_rank(int m, int w) const { return lookup(men_lookup_[m], w).first; }
  int woman_rank(int w, int m) const { return lookup(women_lookup_[w], m).first; }
  int rank(Vertex v, int other) const {
    return v.side == Side::kMan ? man_rank(v.index, other) : woman_rank(v.index, other);
  }

  // Edge ids enumerate edges sorted by (man, woman) index.
  std::span<const Edge> edges() const { return edges_; }
  std::optional<std::size_t> edge_id(int m, int w) const {
    if (m < 0 || m >= num_men()) return std::nullopt;
    const auto& row = men_lookup_[m];
    auto it = std::lower_bound(row.begin(), row.end(), std::pair{w, 0},
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == row.end() || it->first != w) return std::nullopt;
    return edge_offset_[m] + static_cast<std::size_t>(it - row.begin());
  }
  bool has_edge(int m, int w) const { return man_rank(m, w) >= 0; }
  bool has_edge(Edge e) const { return has_edge(e.man, e.woman); }

 private:
  // Sorted (neighbor, rank) rows for O(log d) rank queries.
  using Lookup = std::vector<std::vector<std::pair<int, int>>>;

  static std::pair<int, int> lookup(const std::vector<std::pair<int, int>>& row, int other) {
    auto it = std::lower_bound(row.begin(), row.end(), std::pair{other, 0},
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == row.end() || it->first != other) return {-1, -1};
    return {it->second, static_cast<int>(it - row.begin())};
  }

  void index_names() {
    by_name_.reserve(men_.size() + women_.size());
    for (int m = 0; m < num_men(); ++m) {
      if (!by_name_.emplace(men_[m], man_vertex(m)).second) {
        throw std::invalid_argument("duplicate vertex id '" + men_[m] + "'");
      }
    }
    for (int w = 0; w < num_women(); ++w) {
      if (!by_name_.emplace(women_[w], woman_vertex(w)).second) {
        throw std::invalid_argument("duplicate vertex id '" + women_[w] + "'");
      }
    }
  }

  Lookup build_lookup(const std::vector<std::vector<int>>& prefs, int other_size,
                      Side side) const {
    Lookup out(prefs.size());
    for (std::size_t v = 0; v < prefs.size(); ++v) {
      auto& row = out[v];
      row.reserve(prefs[v].size());
      for (std::size_t k = 0; k < prefs[v].size(); ++k) {
        const int u = prefs[v][k];
        if (u < 0 || u >= other_size) {
          throw std::invalid_argument("preference entry out of range for '" +
                                      name({side, static_cast<int>(v)}) + "'");
        }
        row.emplace_back(u, static_cast<int>(k));
      }
      std::sort(row.begin(), row.end());
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (row[k].first == row[k - 1].first) {
          const Vertex dup{side == Side::kMan ? Side::kWoman : Side::kMan, row[k].first};
          throw std::invalid_argument("duplicate entry '" + name(dup) + "' in list of '" +
                                      name({side, static_cast<int>(v)}) + "'");
        }
      }
    }
    return out;
  }

  void check_symmetry() {
    men_cross_.resize(men_.size());
    for (int m = 0; m < num_men(); ++m) {
      men_cross_[m].reserve(men_pref_[m].size());
      for (int w : men_pref_[m]) {
        const int r = woman_rank(w, m);
        if (r < 0) {
          throw std::invalid_argument("asymmetric adjacency: edge (" + men_[m] + "," +
                                      women_[w] + ") missing from " + women_[w] + "'s list");
        }
        men_cross_[m].push_back(r);
      }
    }
    for (int w = 0; w < num_women(); ++w) {
      for (int m : women_pref_[w]) {
        if (man_rank(m, w) < 0) {
          throw std::invalid_argument("asymmetric adjacency: edge (" + men_[m] + "," +
                                      women_[w] + ") missing from " + men_[m] + "'s list");
        }
      }
    }
  }

  void build_edges() {
    edge_offset_.resize(men_.size());
    for (int m = 0; m < num_men(); ++m) {
      edge_offset_[m] = edges_.size();
      for (const auto& [w, r] : men_lookup_[m]) edges_.push_back({m, w});
    }
  }

  std::vector<std::string> men_;
  std::vector<std::string> women_;
  std::vector<std::vector<int>> men_pref_;
  std::vector<std::vector<int>> women_pref_;
  std::vector<std::vector<int>> men_cross_;
  Lookup men_lookup_;
  Lookup women_lookup_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> edge_offset_;
  std::unordered_map<std::string, Vertex> by_name_;
};

// Partner tables for both sides. Sized for one instance; the pairs are not
// tied to an instance until validated with is_valid_matching().
class Matching {
 public:
  Matching() = default;
  Matching(int num_men, int num_women)
      : man_(static_cast<std::size_t>(num_men), kUnmatched),
        woman_(static_cast<std::size_t>(num_women), kUnmatched) {}
  explicit Matching(const Instance& inst) : Matching(inst.num_men(), inst.num_women()) {}

  int num_men() const { return static_cast<int>(man_.size()); }
  int num_women() const { return static_cast<int>(woman_.size()); }

  int partner_of_man(int m) const { return man_[m]; }
  int partner_of_woman(int w) const { return woman_[w]; }
  int partner(Vertex v) const {
    return v.side == Side::kMan ? man_[v.index] : woman_[v.index];
  }
  bool is_matched(Vertex v) const { return partner(v) != kUnmatched; }
  bool contains(Edge e) const { return man_[e.man] == e.woman; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void add(Edge e) {
    if (man_[e.man] != kUnmatched || woman_[e.woman] != kUnmatched) {
      throw std::invalid_argument("vertex matched twice");
    }
    man_[e.man] = e.woman;
    woman_[e.woman] = e.man;
    ++size_;
  }

  void remove(Edge e) {
    if (!contains(e)) throw std::invalid_argument("pair not in matching");
    man_[e.man] = kUnmatched;
    woman_[e.woman] = kUnmatched;
    --size_;
  }

  // Pairs sorted by man index.
  std::vector<Edge> pairs() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (int m = 0; m < num_men(); ++m) {
      if (man_[m] != kUnmatched) out.push_back({m, man_[m]});
    }
    return out;
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.man_ == b.man_ && a.woman_ == b.woman_;
  }

  // Lexicographic on the sorted pair list.
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
    const auto pa = a.pairs();
    const auto pb = b.pairs();
    return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
  }

 private:
  std::vector<int> man_;
  std::vector<int> woman_;
  std::size_t size_ = 0;
};

inline bool is_valid_matching(const Instance& inst, const Matching& m) {
  if (m.num_men() != inst.num_men() || m.num_women() != inst.num_women()) return false;
  for (const Edge& e : m.pairs()) {
    if (!inst.has_edge(e)) return false;
  }
  return true;
}

// Throws std::invalid_argument if a pair is not an edge or reuses a vertex.
inline Matching matching_from_pairs(const Instance& inst, std::span<const Edge> pairs) {
  Matching out(inst);
  for (const Edge& e : pairs) {
    if (e.man < 0 || e.man >= inst.num_men() || e.woman < 0 || e.woman >= inst.num_women() ||
        !inst.has_edge(e)) {
      throw std::invalid_argument("pair is not an edge of the instance");
    }
    out.add(e);
  }
  return out;
}

// Men-first naming convenience for tests and fixtures.
inline Matching matching_from_names(
    const Instance& inst, std::initializer_list<std::pair<std::string_view, std::string_view>> pairs) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) {
    auto u = inst.find(a);
    auto v = inst.find(b);
    if (!u || !v || u->side != Side::kMan || v->side != Side::kWoman) {
      throw std::invalid_argument("unknown pair (" + std::string(a) + "," + std::string(b) + ")");
    }
    edges.push_back({u->index, v->index});
  }
  return matching_from_pairs(inst, edges);
}

inline std::optional<Edge> edge_from_names(const Instance& inst, std::string_view a,
                                           std::string_view b) {
  auto u = inst.find(a);
  auto v = inst.find(b);
  if (!u || !v || u->side != Side::kMan || v->side != Side::kWoman) return std::nullopt;
  return Edge{u->index, v->index};
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Yields (line number, content) for lines that are neither blank nor comments.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(number, std::string(t));
  }
  return out;
}

}  // namespace detail

// Parses PREF v1: `men: <ids>`, `women: <ids>`, then `<id>: <ids>` lines in
// decreasing preference. A vertex without a line has an empty list.
inline Instance parse_instance(std::istream& in) {
  const auto lines = detail::content_lines(in);
  auto header = [&](std::size_t i, std::string_view key) {
    if (i >= lines.size()) throw ParseError(0, "missing '" + std::string(key) + ":' line");
    const auto& [number, text] = lines[i];
    const auto colon = text.find(':');
    if (colon == std::string::npos || detail::trim(std::string_view(text).substr(0, colon)) != key) {
      throw ParseError(number, "expected '" + std::string(key) + ":' line");
    }
    return detail::split_ws(std::string_view(text).substr(colon + 1));
  };
  std::vector<std::string> men = header(0, "men");
  std::vector<std::string> women = header(1, "women");

  std::unordered_map<std::string, Vertex> ids;
  auto declare = [&](const std::vector<std::string>& names, Side side, int line) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].find(':') != std::string::npos) {
        throw ParseError(line, "malformed vertex id '" + names[i] + "'");
      }
      if (!ids.emplace(names[i], Vertex{side, static_cast<int>(i)}).second) {
        throw ParseError(line, "duplicate vertex id '" + names[i] + "'");
      }
    }
  };
  declare(men, Side::kMan, lines[0].first);
  declare(women, Side::kWoman, lines[1].first);

  std::vector<std::vector<int>> men_pref(men.size()), women_pref(women.size());
  std::vector<int> men_line(men.size(), 0), women_line(women.size(), 0);

  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(number, "malformed line, expected '<id>: <ids>'");
    const std::string id(detail::trim(std::string_view(text).substr(0, colon)));
    if (id.empty() || id.find_first_of(" \t") != std::string::npos) {
      throw ParseError(number, "malformed line, expected '<id>: <ids>'");
    }
    auto it = ids.find(id);
    if (it == ids.end()) throw ParseError(number, "unknown vertex id '" + id + "'");
    const Vertex owner = it->second;
    int& seen = owner.side == Side::kMan ? men_line[owner.index] : women_line[owner.index];
    if (seen != 0) throw ParseError(number, "duplicate preference line for '" + id + "'");
    seen = number;

    auto& list = owner.side == Side::kMan ? men_pref[owner.index] : women_pref[owner.index];
    std::vector<char> used(owner.side == Side::kMan ? women.size() : men.size(), 0);
    for (const auto& token : detail::split_ws(std::string_view(text).substr(colon + 1))) {
      auto nb = ids.find(token);
      if (nb == ids.end()) throw ParseError(number, "unknown neighbor id '" + token + "'");
      if (nb->second.side == owner.side) {
        throw ParseError(number, "'" + token + "' is on the same side as '" + id + "'");
      }
      if (used[nb->second.index]) {
        throw ParseError(number, "duplicate entry '" + token + "' in list of '" + id + "'");
      }
      used[nb->second.index] = 1;
      list.push_back(nb->second.index);
    }
  }

  // Symmetry, reported at the line that names the dangling edge.
  std::vector<std::vector<char>> woman_has(women.size());
  for (std::size_t w = 0; w < women.size(); ++w) {
    woman_has[w].assign(men.size(), 0);
    for (int m : women_pref[w]) woman_has[w][m] = 1;
  }
  std::vector<std::pair<int, std::string>> problems;
  for (std::size_t m = 0; m < men.size(); ++m) {
    for (int w : men_pref[m]) {
      if (!woman_has[w][m]) {
        problems.emplace_back(men_line[m], "asymmetric adjacency: edge (" + men[m] + "," +
                                               women[w] + ") missing from " + women[w] +
                                               "'s list");
        break;
      }
    }
  }
  for (std::size_t w = 0; w < women.size(); ++w) {
    for (int m : women_pref[w]) {
      const auto& l = men_pref[m];
      if (std::find(l.begin(), l.end(), static_cast<int>(w)) == l.end()) {
        problems.emplace_back(women_line[w], "asymmetric adjacency: edge (" + men[m] + "," +
                                                 women[w] + ") missing from " + men[m] +
                                                 "'s list");
        break;
      }
    }
  }
  if (!problems.empty()) {
    auto first = std::min_element(problems.begin(), problems.end(),
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
    throw ParseError(first->first, first->second);
  }
  return Instance(std::move(men), std::move(women), std::move(men_pref), std::move(women_pref));
}

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

inline std::string serialize_instance(const Instance& inst) {
  std::string out = "men:";
  for (const auto& n : inst.men_names()) out += " " + n;
  out += "\nwomen:";
  for (const auto& n : inst.women_names()) out += " " + n;
  out += "\n";
  for (int m = 0; m < inst.num_men(); ++m) {
    out += inst.man_name(m) + ":";
    for (int w : inst.man_pref(m)) out += " " + inst.woman_name(w);
    out += "\n";
  }
  for (int w = 0; w < inst.num_women(); ++w) {
    out += inst.woman_name(w) + ":";
    for (int m : inst.woman_pref(w)) out += " " + inst.man_name(m);
    out += "\n";
  }
  return out;
}

// One `<man> <woman>` per line.
inline Matching parse_matching(std::istream& in, const Instance& inst) {
  Matching out(inst);
  for (const auto& [number, text] : detail::content_lines(in)) {
    const auto tokens = detail::split_ws(text);
    if (tokens.size() != 2) throw ParseError(number, "expected '<man> <woman>'");
    auto a = inst.find(tokens[0]);
    auto b = inst.find(tokens[1]);
    if (!a || a->side != Side::kMan) throw ParseError(number, "'" + tokens[0] + "' is not a man");
    if (!b || b->side != Side::kWoman) throw ParseError(number, "'" + tokens[1] + "' is not a woman");
    if (!inst.has_edge(a->index, b->index)) {
      throw ParseError(number, "(" + tokens[0] + "," + tokens[1] + ") is not an edge");
    }
    if (out.partner_of_man(a->index) != kUnmatched) {
      throw ParseError(number, "vertex '" + tokens[0] + "' matched twice");
    }
    if (out.partner_of_woman(b->index) != kUnmatched) {
      throw ParseError(number, "vertex '" + tokens[1] + "' matched twice");
    }
    out.add({a->index, b->index});
  }
  return out;
}

inline Matching parse_matching(std::string_view text, const Instance& inst) {
  std::istringstream in{std::string(text)};
  return parse_matching(in, inst);
}

// Lines sorted lexicographically.
inline std::string serialize_matching(const Instance& inst, const Matching& m) {
  std::vector<std::string> lines;
  for (const Edge& e : m.pairs()) lines.push_back(inst.man_name(e.man) + " " + inst.woman_name(e.woman));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

namespace detail {

// Distribution mappings are spelled out so a seed gives the same instance
// with every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline void shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

}  // namespace detail

// Men a1..aN, women b1..bM; each pair is an edge with probability `density`.
inline Instance generate_random(int n_men, int n_women, double density, std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  if (n_men < 0 || n_women < 0) throw std::invalid_argument("vertex counts must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> men_pref(static_cast<std::size_t>(n_men));
  std::vector<std::vector<int>> women_pref(static_cast<std::size_t>(n_women));
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (int m = 0; m < n_men; ++m) {
    for (int w = 0; w < n_women; ++w) {
      const double u = static_cast<double>(rng() >> 11) * kScale;
      if (density >= 1.0 || u < density) {
        men_pref[m].push_back(w);
        women_pref[w].push_back(m);
      }
    }
  }
  for (auto& l : men_pref) detail::shuffle(l, rng);
  for (auto& l : women_pref) detail::shuffle(l, rng);
  std::vector<std::string> men, women;
  men.reserve(men_pref.size());
  women.reserve(women_pref.size());
  for (int m = 0; m < n_men; ++m) men.push_back("a" + std::to_string(m + 1));
  for (int w = 0; w < n_women; ++w) women.push_back("b" + std::to_string(w + 1));
  return Instance(std::move(men), std::move(women), std::move(men_pref), std::move(women_pref));
}

// Same vertices with the roles of the sides swapped.
inline Instance transpose(const Instance& inst) {
  std::vector<std::vector<int>> men_pref, women_pref;
  for (int w = 0; w < inst.num_women(); ++w) {
    auto l = inst.woman_pref(w);
    men_pref.emplace_back(l.begin(), l.end());
  }
  for (int m = 0; m < inst.num_men(); ++m) {
    auto l = inst.man_pref(m);
    women_pref.emplace_back(l.begin(), l.end());
  }
  return Instance(inst.women_names(), inst.men_names(), std::move(men_pref), std::move(women_pref));
}

inline Matching transpose(const Matching& m) {
  Matching out(m.num_women(), m.num_men());
  for (const Edge& e : m.pairs()) out.add({e.woman, e.man});
  return out;
}

// Induced subgraph with index maps in both directions (-1 where dropped).
struct SubInstance {
  Instance instance;
  std::vector<int> man_to_base;
  std::vector<int> woman_to_base;
  std::vector<int> base_to_man;
  std::vector<int> base_to_woman;

  Matching to_base(const Matching& local, const Instance& base) const {
    Matching out(base);
    for (const Edge& e : local.pairs()) out.add({man_to_base[e.man], woman_to_base[e.woman]});
    return out;
  }
};

inline SubInstance induced(const Instance& inst, std::span<const char> keep_men,
                           std::span<const char> keep_women) {
  SubInstance sub;
  sub.base_to_man.assign(static_cast<std::size_t>(inst.num_men()), -1);
  sub.base_to_woman.assign(static_cast<std::size_t>(inst.num_women()), -1);
  std::vector<std::string> men, women;
  for (int m = 0; m < inst.num_men(); ++m) {
    if (!keep_men[m]) continue;
    sub.base_to_man[m] = static_cast<int>(sub.man_to_base.size());
    sub.man_to_base.push_back(m);
    men.push_back(inst.man_name(m));
  }
  for (int w = 0; w < inst.num_women(); ++w) {
    if (!keep_women[w]) continue;
    sub.base_to_woman[w] = static_cast<int>(sub.woman_to_base.size());
    sub.woman_to_base.push_back(w);
    women.push_back(inst.woman_name(w));
  }
  std::vector<std::vector<int>> men_pref(men.size()), women_pref(women.size());
  for (std::size_t i = 0; i < men.size(); ++i) {
    for (int w : inst.man_pref(sub.man_to_base[i])) {
      if (sub.base_to_woman[w] >= 0) men_pref[i].push_back(sub.base_to_woman[w]);
    }
  }
  for (std::size_t j = 0; j < women.size(); ++j) {
    for (int m : inst.woman_pref(sub.woman_to_base[j])) {
      if (sub.base_to_man[m] >= 0) women_pref[j].push_back(sub.base_to_man[m]);
    }
  }
  sub.instance = Instance(std::move(men), std::move(women), std::move(men_pref), std::move(women_pref));
  return sub;
}

}  // namespace popmatch

#endif  // POPMATCH_INSTANCE_HPP_
