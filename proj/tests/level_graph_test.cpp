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

#include "popmatch/level_graph.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "popmatch/oracles.hpp"

namespace popmatch {
namespace {

using testing::contains;
using testing::edge;
using testing::fig1;
using testing::fig2;
using testing::fig3;
using testing::fig4;
using testing::pairs;

std::vector<std::string> man_list(const Instance& g, std::string_view man) {
  std::vector<std::string> out;
  for (int w : g.man_pref(g.find(man)->index)) out.push_back(g.woman_name(w));
  return out;
}

std::vector<std::string> woman_list(const Instance& g, std::string_view woman) {
  std::vector<std::string> out;
  for (int m : g.woman_pref(g.find(woman)->index)) out.push_back(g.man_name(m));
  return out;
}

using Names = std::vector<std::string>;

TEST(BuildLevelGraph, FigureOneWomanList) {
  const Instance inst = fig1();
  const LevelInstance level = build_level_graph(inst);
  EXPECT_EQ(woman_list(level.graph(), "b1"), (Names{"a1:1", "a2:1", "a1:0", "a2:0"}));
  EXPECT_EQ(woman_list(level.graph(), "b2"), (Names{"a1:1", "a1:0"}));
}

TEST(BuildLevelGraph, FigureFourLists) {
  const Instance inst = fig4();
  const LevelInstance level = build_level_graph(inst);
  const Instance& g = level.graph();
  EXPECT_EQ(g.num_men(), 4);
  EXPECT_EQ(g.num_women(), 4);
  EXPECT_EQ(man_list(g, "a:0"), (Names{"b'", "b", "d:a"}));
  EXPECT_EQ(man_list(g, "a:1"), (Names{"d:a", "b'", "b"}));
  EXPECT_EQ(man_list(g, "a':0"), (Names{"b'", "b", "d:a'"}));
  EXPECT_EQ(man_list(g, "a':1"), (Names{"d:a'", "b'", "b"}));
  EXPECT_EQ(woman_list(g, "b"), (Names{"a:1", "a':1", "a:0", "a':0"}));
  EXPECT_EQ(woman_list(g, "b'"), (Names{"a:1", "a':1", "a:0", "a':0"}));
  EXPECT_EQ(woman_list(g, "d:a"), (Names{"a:0", "a:1"}));
  EXPECT_EQ(woman_list(g, "d:a'"), (Names{"a':0", "a':1"}));
}

TEST(BuildLevelGraph, IndexLayout) {
  const Instance inst = fig2();
  const LevelInstance level = build_level_graph(inst);
  EXPECT_EQ(level.graph().num_edges(), 2 * inst.num_edges() + 2 * static_cast<std::size_t>(inst.num_men()));
  EXPECT_EQ(level.copy(2, 1), 5);
  EXPECT_EQ(level.base_man(5), 2);
  EXPECT_EQ(level.level(5), 1);
  EXPECT_EQ(level.dummy(1), 4);
  EXPECT_TRUE(level.is_dummy(4));
  EXPECT_FALSE(level.is_dummy(2));
  EXPECT_EQ(level.dummy_owner(4), 1);
  EXPECT_EQ(level.graph().man_name(5), "a3:1");
  EXPECT_EQ(level.graph().woman_name(4), "d:a2");
}

TEST(CollapseToBase, MergesCopiesAndDropsDummies) {
  const Instance inst = fig1();
  const LevelInstance level = build_level_graph(inst);
  const Instance& g = level.graph();
  const Matching lm = pairs(g, {{"a1:0", "b2"}, {"a1:1", "d:a1"}, {"a2:1", "b1"}, {"a2:0", "d:a2"}});
  EXPECT_EQ(collapse_to_base(level, lm), pairs(inst, {{"a1", "b2"}, {"a2", "b1"}}));
  EXPECT_TRUE(collapse_to_base(level, Matching(g)).empty());
  const Matching both = pairs(g, {{"a1:0", "b2"}, {"a1:1", "b1"}});
  EXPECT_THROW(collapse_to_base(level, both), std::invalid_argument);
}

TEST(DominantViaLevelGraph, Figures) {
  const Instance f1 = fig1();
  EXPECT_EQ(dominant_via_level_graph(f1), pairs(f1, {{"a1", "b2"}, {"a2", "b1"}}));
  const Instance f2 = fig2();
  EXPECT_EQ(dominant_via_level_graph(f2), pairs(f2, {{"a1", "b3"}, {"a2", "b2"}, {"a3", "b1"}}));
  const Instance f3 = fig3();
  EXPECT_EQ(dominant_via_level_graph(f3), pairs(f3, {{"a1", "b2"}, {"a2", "b1"}}));
  EXPECT_EQ(dominant_two_level(f3), pairs(f3, {{"a1", "b2"}, {"a2", "b1"}}));
  const Instance f4 = fig4();
  EXPECT_EQ(dominant_via_level_graph(f4), pairs(f4, {{"a", "b'"}, {"a'", "b"}}));
}

TEST(ExpandToLevel, FigureThree) {
  const Instance inst = fig3();
  const LevelInstance level = build_level_graph(inst);
  const Matching m2 = pairs(inst, {{"a1", "b2"}, {"a2", "b1"}});
  const Matching lm = expand_to_level(level, m2);
  EXPECT_EQ(lm, pairs(level.graph(), {{"a1:0", "b2"}, {"a1:1", "d:a1"}, {"a2:0", "d:a2"},
                                      {"a2:1", "b1"}, {"a3:0", "d:a3"}}));
  EXPECT_TRUE(is_stable(level.graph(), lm).stable);
  EXPECT_EQ(collapse_to_base(level, lm), m2);
}

TEST(ExpandToLevel, RejectsNonDominant) {
  const Instance inst = fig3();
  const LevelInstance level = build_level_graph(inst);
  const Matching m1 = pairs(inst, {{"a1", "b1"}, {"a2", "b2"}});
  try {
    expand_to_level(level, m1);
    FAIL() << "expected a verification error";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.certificate().kind, CertificateKind::kAugmentingPath);
    EXPECT_TRUE(replay(inst, m1, e.certificate()));
  }
}

class LevelGraphProperties : public ::testing::TestWithParam<int> {};

TEST_P(LevelGraphProperties, DominantAgreesWithOracle) {
  const Instance inst = testing::make(testing::ensemble_specs(120)[GetParam()]);
  const Matching m = dominant_via_level_graph(inst);
  ASSERT_EQ(dominant_two_level(inst), m);
  if (inst.num_edges() > 24) GTEST_SKIP();
  ASSERT_TRUE(contains(dominant_set(inst), m));
}

TEST_P(LevelGraphProperties, StableMatchingsOfLevelGraphCollapseToDominant) {
  const Instance inst = testing::make(testing::ensemble_specs(120)[GetParam()]);
  const LevelInstance level = build_level_graph(inst);
  const Instance& g = level.graph();
  const auto level_stable = enumerate_stable_matchings(g);
  const bool small = inst.num_edges() <= 24;
  const auto dominant = small ? dominant_set(inst) : std::vector<Matching>{};
  std::vector<Matching> images;
  for (const auto& lm : level_stable) {
    // d(a) always holds exactly one copy of a.
    for (int a = 0; a < inst.num_men(); ++a) {
      const int holder = lm.partner_of_woman(level.dummy(a));
      ASSERT_NE(holder, kUnmatched);
      ASSERT_EQ(level.base_man(holder), a);
    }
    const Matching m = collapse_to_base(level, lm);
    if (small) ASSERT_TRUE(contains(dominant, m));
    images.push_back(m);

    const FValues f = f_values(level, lm);
    const LabeledGraph lab(inst, m);
    for (const Edge& e : inst.edges()) {
      if (m.contains(e)) {
        ASSERT_EQ(f.men[e.man], f.women[e.woman]);
        continue;
      }
      const auto l = *lab.label(e);
      if (l.plus_plus()) {
        ASSERT_EQ(f.men[e.man], 0);
        ASSERT_EQ(f.women[e.woman], 1);
      }
      if (f.men[e.man] == 1 && f.women[e.woman] == 0) ASSERT_TRUE(l.minus_minus());
    }
    for (int a = 0; a < inst.num_men(); ++a) {
      if (m.partner_of_man(a) == kUnmatched) ASSERT_EQ(f.men[a], 1);
    }
    for (int b = 0; b < inst.num_women(); ++b) {
      if (m.partner_of_woman(b) == kUnmatched) ASSERT_EQ(f.women[b], 0);
    }
  }
  if (small) {
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    ASSERT_EQ(images, dominant);
  }
}

TEST_P(LevelGraphProperties, ExpandRoundTrip) {
  const Instance inst = testing::make(testing::ensemble_specs(120)[GetParam()]);
  if (inst.num_edges() > 24) GTEST_SKIP();
  const LevelInstance level = build_level_graph(inst);
  for (const auto& m : dominant_set(inst)) {
    const Matching lm = expand_to_level(level, m);
    ASSERT_TRUE(is_valid_matching(level.graph(), lm));
    ASSERT_TRUE(is_stable(level.graph(), lm).stable);
    ASSERT_EQ(collapse_to_base(level, lm), m);
  }
}

INSTANTIATE_TEST_SUITE_P(Ensemble, LevelGraphProperties, ::testing::Range(0, 120));

}  // namespace
}  // namespace popmatch
