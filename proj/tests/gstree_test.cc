// Copyright 2026 The prefsplit Authors
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

#include "prefsplit/gstree.h"

#include <gtest/gtest.h>

#include "prefsplit/domains.h"
#include "prefsplit/oracle.h"
#include "test_util.h"

namespace prefsplit {
namespace {

using testing::MakeProfile;

TEST(BuildGsTreeTest, ThreeVoteProfile) {
  const Profile p = MakeProfile({"a>b>c>d", "b>a>d>c", "c>d>b>a"});
  const OrderedBinaryTree t = build_gs_tree(p);
  EXPECT_EQ(t.to_string(p), "((a,b),(c,d))");
  EXPECT_TRUE(check_t_consistent(p, t));
}

TEST(BuildGsTreeTest, SingleVoteGivesCaterpillar) {
  const Profile p = MakeProfile({"a>b>c"});
  EXPECT_EQ(build_gs_tree(p).to_string(p), "(a,(b,c))");
}

TEST(BuildGsTreeTest, RejectsTheGsMinor) {
  const Profile p = MakeProfile({"a>b>c>d", "b>d>a>c"});
  try {
    build_gs_tree(p);
    FAIL();
  } catch (const NotGroupSeparable& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotGroupSeparable);
    EXPECT_EQ(e.failing_candidates(), (std::vector<Candidate>{0, 1, 2, 3}));
  }
}

TEST(CheckTConsistentTest, Examples) {
  const Profile one = parse_profile("candidates: a\nvote: a\n");
  EXPECT_TRUE(check_t_consistent(one, OrderedBinaryTree::Leaf(0)));

  const Profile p = MakeProfile({"b>d>a>c"});
  const OrderedBinaryTree t = parse_tree("((a,b),(c,d))", p);
  EXPECT_FALSE(check_t_consistent(p, t));

  const Profile q = MakeProfile({"a>b>c"});
  try {
    check_t_consistent(q, parse_tree("(a,b)", q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelMismatch);
  }
}

TEST(ParseTreeTest, RoundTrip) {
  const Profile p = MakeProfile({"a>b>c>d>e"});
  for (const char* text : {"(a,((b,c),(d,e)))", "((((a,b),c),d),e)", "((e,a),(d,(c,b)))"}) {
    EXPECT_EQ(parse_tree(text, p).to_string(p), text);
  }
  EXPECT_THROW(parse_tree("(a,b", p), Error);
  EXPECT_THROW(parse_tree("(a,z)", p), Error);
}

TEST(BuildGsTreeTest, SucceedsIffGsMember) {
  Rng rng(41);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Profile p = testing::RandomProfile(rng, 8, 1, 7);
    const bool member = !is_member(p, DomainId::kGS);
    try {
      const OrderedBinaryTree t = build_gs_tree(p);
      EXPECT_TRUE(member) << emit_profile(p);
      EXPECT_TRUE(check_t_consistent(p, t));
      ++built;
    } catch (const NotGroupSeparable&) {
      EXPECT_FALSE(member) << emit_profile(p);
    }
  }
  EXPECT_GT(built, 50);
}

TEST(RecognizeCaterpillarTest, Examples) {
  const Profile p = MakeProfile({"a>b>c", "c>b>a"});
  const auto r = recognize_caterpillar(p);
  ASSERT_TRUE(std::holds_alternative<CaterpillarOrder>(r));
  EXPECT_EQ(format_caterpillar(p, std::get<CaterpillarOrder>(r)), "a,b,c");

  const Profile q = MakeProfile({"a>b>c>d", "b>a>d>c"});
  const auto s = recognize_caterpillar(q);
  ASSERT_TRUE(std::holds_alternative<MinorWitness>(s));
  const MinorWitness& w = std::get<MinorWitness>(s);
  EXPECT_EQ(w.vote_indices, (std::vector<std::size_t>{0, 1}));
  std::vector<Candidate> cands = w.candidates;
  std::sort(cands.begin(), cands.end());
  EXPECT_EQ(cands, (std::vector<Candidate>{0, 1, 2, 3}));
  EXPECT_TRUE(replay_witness(q, domain_spec(DomainId::kCatGS), w));

  const Profile two = MakeProfile({"b>a", "a>b"});
  const auto t = recognize_caterpillar(two);
  ASSERT_TRUE(std::holds_alternative<CaterpillarOrder>(t));
  EXPECT_EQ(std::get<CaterpillarOrder>(t).order, (std::vector<Candidate>{0, 1}));

  try {
    recognize_caterpillar(parse_profile("candidates: a\nvote: a\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(VerifyCaterpillarTest, Examples) {
  const Profile p = MakeProfile({"a>b>d>c"});
  EXPECT_TRUE(verify_caterpillar(p, CaterpillarOrder{{0, 1, 2, 3}}));
  const Profile q = MakeProfile({"b>a>c"});
  EXPECT_FALSE(verify_caterpillar(q, CaterpillarOrder{{0, 1, 2}}));
  const Profile r = MakeProfile({"c>a>b"});
  EXPECT_TRUE(verify_caterpillar(r, CaterpillarOrder{{2, 0, 1}}));
  EXPECT_THROW(verify_caterpillar(r, CaterpillarOrder{{0, 1}}), Error);
}

// Segment form: the vote is C' in increasing order index followed by the
// rest in decreasing order index.
bool SegmentForm(const Profile& p, const CaterpillarOrder& order) {
  std::vector<std::size_t> index(p.candidate_count());
  for (std::size_t i = 0; i < order.order.size(); ++i) {
    index[static_cast<std::size_t>(order.order[i])] = i;
  }
  for (const Ranking& vote : p.votes()) {
    std::size_t k = 1;
    while (k < vote.size() && index[vote[k]] > index[vote[k - 1]]) ++k;
    bool ok = false;
    // The increasing run may end one step early: its last element can
    // equally start the decreasing tail.
    for (std::size_t cut : {k, k - 1}) {
      bool dec = true;
      for (std::size_t i = cut + 1; i < vote.size(); ++i) {
        dec = dec && index[vote[i]] < index[vote[i - 1]];
      }
      ok = ok || dec;
    }
    if (!ok) return false;
  }
  return true;
}

TEST(VerifyCaterpillarTest, BothFormsAgree) {
  Rng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const Profile p = testing::RandomProfile(rng, 4, 2, 6);
    std::vector<Candidate> order(p.candidate_count());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<Candidate>(c);
    rng.shuffle(order);
    const CaterpillarOrder co{order};
    EXPECT_EQ(verify_caterpillar(p, co), SegmentForm(p, co)) << emit_profile(p);
  }
  // Samples from the caterpillar generator satisfy both forms.
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Candidate> order(6);
    for (std::size_t c = 0; c < 6; ++c) order[c] = static_cast<Candidate>(c);
    rng.shuffle(order);
    std::vector<Ranking> votes;
    for (int i = 0; i < 4; ++i) votes.push_back(sample_catgs_vote(order, rng));
    const Profile p = Profile::WithDefaultNames(6, votes);
    EXPECT_TRUE(verify_caterpillar(p, CaterpillarOrder{order}));
    EXPECT_TRUE(SegmentForm(p, CaterpillarOrder{order}));
  }
}

TEST(VerifyCaterpillarTest, ClosedUnderCandidateDeletion) {
  Rng rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    GenParams g{6, 3 + rng.below(5), 1, rng.next(), GenModel::kCatGsUnion};
    const Profile p = generate(g);
    const auto r = recognize_caterpillar(p);
    ASSERT_TRUE(std::holds_alternative<CaterpillarOrder>(r));
    const auto& order = std::get<CaterpillarOrder>(r).order;
    const auto gone = static_cast<Candidate>(rng.below(p.candidate_count()));
    std::vector<Candidate> keep;
    std::vector<Candidate> new_order;
    for (std::size_t c = 0; c < p.candidate_count(); ++c) {
      if (static_cast<Candidate>(c) != gone) keep.push_back(static_cast<Candidate>(c));
    }
    for (Candidate c : order) {
      if (c != gone) new_order.push_back(c > gone ? c - 1 : c);
    }
    EXPECT_TRUE(verify_caterpillar(restrict(p, keep), CaterpillarOrder{new_order}));
  }
}

TEST(RecognizeCaterpillarTest, SucceedsIffCatGSMember) {
  Rng rng(45);
  int orders = 0;
  int witnesses = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Profile p = testing::RandomProfile(rng, 6, 2, 7);
    const bool member = !is_member(p, DomainId::kCatGS);
    const auto r = recognize_caterpillar(p);
    if (const auto* order = std::get_if<CaterpillarOrder>(&r)) {
      EXPECT_TRUE(member) << emit_profile(p);
      EXPECT_TRUE(verify_caterpillar(p, *order));
      ++orders;
    } else {
      EXPECT_FALSE(member) << emit_profile(p);
      EXPECT_TRUE(replay_witness(p, domain_spec(DomainId::kCatGS),
                                 std::get<MinorWitness>(r)));
      ++witnesses;
    }
  }
  EXPECT_GT(orders, 50);
  EXPECT_GT(witnesses, 50);
}

}  // namespace
}  // namespace prefsplit
