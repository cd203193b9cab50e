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

#include "popmatch/instance.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "fixtures.hpp"

namespace popmatch {
namespace {

using testing::fig1;
using testing::fig2;
using testing::fig3;
using testing::pairs;

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string parse_error_text(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseInstance, FigureEdgeCounts) {
  EXPECT_EQ(fig1().num_edges(), 3u);
  EXPECT_EQ(fig2().num_edges(), 5u);
  EXPECT_EQ(fig3().num_edges(), 6u);
}

TEST(ParseInstance, ListsKeepFileOrder) {
  const Instance inst = fig2();
  ASSERT_EQ(inst.num_men(), 3);
  EXPECT_EQ(inst.man_rank(0, 0), 0);
  EXPECT_EQ(inst.man_rank(0, 2), 1);
  EXPECT_EQ(inst.woman_rank(0, 1), 0);
  EXPECT_EQ(inst.woman_rank(0, 0), 1);
  EXPECT_EQ(inst.woman_rank(0, 2), 2);
  EXPECT_EQ(inst.man_rank(0, 1), -1);
}

TEST(ParseInstance, EmptyInstance) {
  const Instance inst = parse_instance("men:\nwomen:\n");
  EXPECT_EQ(inst.num_men(), 0);
  EXPECT_EQ(inst.num_women(), 0);
  EXPECT_EQ(inst.num_edges(), 0u);
}

TEST(ParseInstance, MissingLineMeansEmptyList) {
  const Instance inst = parse_instance("men: a1 a2\nwomen: b1\na1: b1\nb1: a1\n");
  EXPECT_EQ(inst.num_edges(), 1u);
  EXPECT_TRUE(inst.man_pref(1).empty());
}

TEST(ParseInstance, CommentsBlankLinesAndCrlf) {
  const Instance inst = parse_instance("# header\r\n\r\nmen: a1\r\n  # indented comment\nwomen: b1\r\nb1: a1\r\na1: b1\r\n");
  EXPECT_EQ(inst.num_edges(), 1u);
}

TEST(ParseInstance, AsymmetricAdjacencyNamesEdge) {
  std::string text = testing::kFig1;
  text.erase(text.find("b2: a1\n"));
  const std::string what = parse_error_text(text);
  EXPECT_NE(what.find("(a1,b2)"), std::string::npos) << what;
  EXPECT_EQ(parse_error_line(text), 3);
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("men: a1 a1\nwomen: b1\n"), 1);
  EXPECT_EQ(parse_error_line("men: a1\nwomen: a1\n"), 2);
  EXPECT_EQ(parse_error_line("men: a1\nwomen: b1\na1: b9\n"), 3);
  EXPECT_EQ(parse_error_line("men: a1\nwomen: b1\na1: b1 b1\nb1: a1\n"), 3);
  EXPECT_EQ(parse_error_line("men: a1\nwomen: b1\n\na1 b1\n"), 4);
  EXPECT_EQ(parse_error_line("men: a1\nwomen: b1\na1: b1\nb1: a1\na1: b1\n"), 5);
  EXPECT_EQ(parse_error_line("men: a1\nwomen: b1\nzz: b1\n"), 3);
  EXPECT_EQ(parse_error_line("women: b1\nmen: a1\n"), 1);
  EXPECT_EQ(parse_error_line("men: a1\n"), 0);
  EXPECT_EQ(parse_error_line("men: a1 a2\nwomen: b1\na1: a2\n"), 3);
}

TEST(ParseInstance, RoundTrip) {
  for (const auto& s : testing::ensemble_specs(30)) {
    const Instance inst = testing::make(s);
    const Instance again = parse_instance(serialize_instance(inst));
    EXPECT_EQ(serialize_instance(again), serialize_instance(inst));
    EXPECT_EQ(again.num_edges(), inst.num_edges());
  }
}

TEST(InstanceConstructor, RejectsAsymmetryAndDuplicates) {
  EXPECT_THROW(Instance({"a"}, {"b"}, {{0}}, {{}}), std::invalid_argument);
  EXPECT_THROW(Instance({"a"}, {"b"}, {{0, 0}}, {{0}}), std::invalid_argument);
  EXPECT_THROW(Instance({"x"}, {"x"}, {{}}, {{}}), std::invalid_argument);
  EXPECT_THROW(Instance({"a"}, {"b"}, {{1}}, {{0}}), std::invalid_argument);
}

TEST(InstanceEdges, SortedAndIndexed) {
  const Instance inst = fig3();
  const auto edges = inst.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_EQ(inst.edge_id(edges[i].man, edges[i].woman), i);
    if (i > 0) EXPECT_LT(edges[i - 1], edges[i]);
  }
  EXPECT_FALSE(inst.edge_id(2, 2).has_value());
}

TEST(Matching, SerializeFigureOne) {
  const Instance inst = fig1();
  const Matching m = pairs(inst, {{"a2", "b1"}, {"a1", "b2"}});
  EXPECT_EQ(serialize_matching(inst, m), "a1 b2\na2 b1\n");
  EXPECT_EQ(parse_matching(serialize_matching(inst, m), inst), m);
}

TEST(Matching, EmptySerializesToEmptyBody) {
  const Instance inst = fig1();
  EXPECT_EQ(serialize_matching(inst, Matching(inst)), "");
  EXPECT_TRUE(parse_matching("", inst).empty());
}

TEST(Matching, ParseErrors) {
  const Instance inst = fig1();
  try {
    parse_matching("a1 b1\na1 b2", inst);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("matched twice"), std::string::npos);
  }
  try {
    parse_matching("a2 b2\n", inst);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("not an edge"), std::string::npos);
  }
  EXPECT_THROW(parse_matching("a1\n", inst), ParseError);
  EXPECT_THROW(parse_matching("b1 a1\n", inst), ParseError);
}

TEST(Matching, SerializationSortsLines) {
  const Instance inst = parse_instance("men: z a\nwomen: y b\nz: y\na: b\ny: z\nb: a\n");
  EXPECT_EQ(serialize_matching(inst, pairs(inst, {{"z", "y"}, {"a", "b"}})), "a b\nz y\n");
}

TEST(Matching, OrderingIsLexicographicOnPairs) {
  const Instance inst = fig1();
  const Matching empty(inst);
  const Matching a = pairs(inst, {{"a1", "b1"}});
  const Matching b = pairs(inst, {{"a1", "b2"}, {"a2", "b1"}});
  const Matching c = pairs(inst, {{"a1", "b2"}});
  EXPECT_LT(empty, a);
  EXPECT_LT(a, c);
  EXPECT_LT(c, b);
}

TEST(GenerateRandom, DensityOneIsComplete) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Instance inst = generate_random(2, 2, 1.0, s);
    EXPECT_EQ(inst.num_edges(), 4u);
    for (int a = 0; a < 2; ++a) EXPECT_EQ(inst.man_pref(a).size(), 2u);
    for (int b = 0; b < 2; ++b) EXPECT_EQ(inst.woman_pref(b).size(), 2u);
  }
}

TEST(GenerateRandom, Deterministic) {
  EXPECT_EQ(serialize_instance(generate_random(5, 5, 0.5, 42)),
            serialize_instance(generate_random(5, 5, 0.5, 42)));
  EXPECT_NE(serialize_instance(generate_random(5, 5, 0.5, 42)),
            serialize_instance(generate_random(5, 5, 0.5, 43)));
}

TEST(GenerateRandom, NamesAndValidation) {
  const Instance inst = generate_random(3, 4, 0.6, 7);
  EXPECT_EQ(inst.man_name(0), "a1");
  EXPECT_EQ(inst.woman_name(3), "b4");
  EXPECT_THROW(generate_random(2, 2, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(generate_random(2, 2, 1.5, 1), std::invalid_argument);
}

TEST(GenerateRandom, DensityIsRoughlyRespected) {
  const Instance inst = generate_random(100, 100, 0.3, 5);
  EXPECT_NEAR(static_cast<double>(inst.num_edges()) / 10000.0, 0.3, 0.03);
}

TEST(GenerateRandom, ListsAreShuffled) {
  // With 8 neighbors, an identity order for every man would be absurd.
  const Instance inst = generate_random(10, 8, 1.0, 3);
  int sorted_lists = 0;
  for (int a = 0; a < inst.num_men(); ++a) {
    const auto l = inst.man_pref(a);
    if (std::is_sorted(l.begin(), l.end())) ++sorted_lists;
  }
  EXPECT_LT(sorted_lists, 2);
}

TEST(Transpose, SwapsSides) {
  const Instance inst = fig2();
  const Instance t = transpose(inst);
  EXPECT_EQ(t.num_men(), 3);
  EXPECT_EQ(t.man_name(0), "b1");
  EXPECT_EQ(t.man_rank(0, 1), 0);
  EXPECT_EQ(t.num_edges(), inst.num_edges());
}

TEST(Induced, KeepsRelativeOrder) {
  const Instance inst = fig3();
  const std::vector<char> men{1, 0, 1};
  const std::vector<char> women{1, 0, 1};
  const SubInstance sub = induced(inst, men, women);
  EXPECT_EQ(sub.instance.num_men(), 2);
  EXPECT_EQ(sub.instance.man_name(1), "a3");
  EXPECT_EQ(sub.instance.num_edges(), 3u);
  EXPECT_EQ(sub.base_to_man[1], -1);
  Matching local(sub.instance);
  local.add({1, 0});
  EXPECT_EQ(sub.to_base(local, inst), pairs(inst, {{"a3", "b1"}}));
}

}  // namespace
}  // namespace popmatch
