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

#include "prefsplit/partition2.h"

#include <map>

#include <gtest/gtest.h>

#include "prefsplit/oracle.h"
#include "test_util.h"

namespace prefsplit {
namespace {

using testing::MakeProfile;

const Profile& Cyclic() {
  static const Profile p = MakeProfile({"a>b>c", "b>c>a", "c>a>b"});
  return p;
}

TEST(Partition2Test, CyclicProfileVR) {
  const auto b = partition2(Cyclic(), DomainId::kVR);
  ASSERT_TRUE(b.has_value());
  std::vector<std::size_t> sizes{b->part1.size(), b->part2.size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(verify_bipartition(Cyclic(), DomainId::kVR, *b));
}

TEST(Partition2Test, MemberProfileStaysWhole) {
  const Profile p = MakeProfile({"a>b>c>d", "b>a>d>c", "c>d>b>a"});
  const auto report = partition2_report(p, DomainId::kGS);
  ASSERT_TRUE(report.result.has_value());
  EXPECT_EQ(report.which, PartitionCase::kMember);
  EXPECT_EQ(*report.result, (Bipartition{{0, 1, 2}, {}}));
}

// Three votes over three blocks of four candidates. Vote 0 is plain,
// vote 1 twists blocks 1 and 3, vote 2 twists block 2, so each vote pair
// realizes the GS pattern inside some block.
Profile PairwiseConflicts() {
  auto block = [](const std::string& row, char tag) {
    std::string out;
    for (char ch : row) {
      out += ch;
      if (ch != '>') out += tag;
    }
    return out;
  };
  const std::string same = "a>b>c>d";
  const std::string twist = "b>d>a>c";
  auto vote = [&](const std::string& b1, const std::string& b2,
                  const std::string& b3) {
    return block(b1, '1') + ">" + block(b2, '2') + ">" + block(b3, '3');
  };
  return MakeProfile(
      {vote(same, same, same), vote(twist, same, twist), vote(same, twist, same)});
}

TEST(Partition2Test, PairwiseConflictsGS) {
  const Profile p = PairwiseConflicts();
  ASSERT_EQ(p.candidate_count(), 12u);
  const ConflictMatrix cm = conflict_pairs(p, domain_spec(DomainId::kGS));
  EXPECT_TRUE(cm[0][1] && cm[1][2] && cm[0][2]);
  EXPECT_FALSE(partition2(p, DomainId::kGS));
  EXPECT_FALSE(bruteforce_has_bipartition(p, DomainId::kGS));
}

TEST(Partition2Test, GsUnionSplits) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Profile p = generate(GenParams{5, 6, 2, seed, GenModel::kGsUnion});
    const auto b = partition2(p, DomainId::kGS);
    ASSERT_TRUE(b.has_value()) << emit_profile(p);
    EXPECT_TRUE(verify_bipartition(p, DomainId::kGS, *b));
  }
}

TEST(VerifyBipartitionTest, Examples) {
  const Profile gs_minor = MakeProfile({"a>b>c>d", "b>d>a>c"});
  EXPECT_TRUE(verify_bipartition(gs_minor, DomainId::kGS, {{0}, {1}}));
  EXPECT_FALSE(verify_bipartition(gs_minor, DomainId::kGS, {{0, 1}, {}}));
  EXPECT_TRUE(verify_bipartition(MakeProfile({"a>b"}), DomainId::kSP, {{0}, {}}));
  for (const Bipartition& bad :
       {Bipartition{{0}, {0, 1}}, Bipartition{{0}, {}}, Bipartition{{0}, {2}}}) {
    try {
      verify_bipartition(gs_minor, DomainId::kGS, bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadIndex);
    }
  }
}

TEST(BuildCase2InstanceTest, EmptyThirdClass) {
  const Profile p = MakeProfile({"a>b>c", "b>c>a"});
  const TwoSatInstance inst = build_case2_instance(p, DomainId::kVR, {0, 1, 2}, 1, 0, 1);
  EXPECT_EQ(inst.var_count, 0);
  EXPECT_TRUE(solve_2sat(inst).has_value());
}

TEST(BuildCase2InstanceTest, CyclicProfile) {
  const TwoSatInstance inst =
      build_case2_instance(Cyclic(), DomainId::kVR, {0, 1, 2}, 1, 0, 1);
  ASSERT_EQ(inst.var_count, 1);
  for (bool x : {false, true}) {
    const Bipartition b = x ? Bipartition{{0, 2}, {1}} : Bipartition{{0}, {1, 2}};
    EXPECT_EQ(satisfies(inst, Assignment{x}),
              verify_bipartition(Cyclic(), DomainId::kVR, b));
  }
}

TEST(BuildCase2InstanceTest, Preconditions) {
  auto code = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::kBadParams;
  };
  EXPECT_EQ(code([] {
              build_case2_instance(Cyclic(), DomainId::kVR, {0, 1, 2}, 1, 0, 0);
            }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code([] {
              build_case2_instance(Cyclic(), DomainId::kBR, {0, 1, 2}, 2, 0, 1);
            }),
            ErrorCode::kPreconditionViolated);
  // Both votes put c in the middle of {a, c, e}, and together they contain
  // the GS pattern, so the class of c is not a member.
  const Profile p = MakeProfile({"a>b>c>d>e", "b>d>a>c>e"});
  EXPECT_EQ(code([&] {
              build_case2_instance(p, DomainId::kGS, {0, 2, 4}, 2, 0, 4);
            }),
            ErrorCode::kPreconditionViolated);
}

// Every assignment of the third class satisfies the instance exactly when
// the decoded split is valid.
TEST(BuildCase2InstanceTest, ClausesCaptureValidityExactly) {
  Rng rng(61);
  int instances = 0;
  for (int trial = 0; trial < 400 && instances < 150; ++trial) {
    const Profile p = dedupe(testing::RandomProfile(rng, 9, 3, 5)).representatives;
    for (DomainId d : kAllDomains) {
      const MinorIndex index(p, domain_spec(d));
      for (const DangerousTriple& dt : classify_dangerous(index)) {
        if (dt.non_member_count() != 0) continue;
        for (auto [uc, vc] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
          const TwoSatInstance inst = build_case2_instance(index, dt.split, uc, vc);
          const auto& free_votes = dt.split.classes[3 - uc - vc];
          ++instances;
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_votes.size()); ++mask) {
            Assignment a(free_votes.size());
            Bipartition b{dt.split.classes[uc], dt.split.classes[vc]};
            for (std::size_t x = 0; x < free_votes.size(); ++x) {
              a[x] = (mask >> x) & 1;
              (a[x] ? b.part1 : b.part2).push_back(free_votes[x]);
            }
            EXPECT_EQ(satisfies(inst, a), verify_bipartition(p, d, b));
          }
        }
        break;
      }
    }
  }
  EXPECT_GT(instances, 50);
}

TEST(Partition2Test, AgreesWithBruteForceOnAllDomains) {
  Rng rng(62);
  std::map<PartitionCase, int> cases;
  for (int trial = 0; trial < 150; ++trial) {
    const Profile p = testing::RandomProfile(rng, 9, 1, 6);
    for (DomainId d : kAllDomains) {
      const Partition2Report report = partition2_report(p, d);
      ++cases[report.which];
      EXPECT_EQ(report.result.has_value(), bruteforce_has_bipartition(p, d))
          << domain_name(d) << "\n" << emit_profile(p);
      if (!report.result) continue;
      EXPECT_TRUE(verify_bipartition(p, d, *report.result));
      // At most one class of any dangerous triple straddles the split.
      const MinorIndex index(p, domain_spec(d));
      const VoteSet first = make_vote_set(p.vote_count(), report.result->part1);
      for (const TripleClasses& e : index.dangerous()) {
        int straddling = 0;
        for (const VoteSet& cls : e.classes) {
          straddling += cls.intersects(first) && !cls.is_subset_of(first);
        }
        EXPECT_LE(straddling, 1);
      }
    }
  }
  for (PartitionCase c : {PartitionCase::kMember, PartitionCase::kRejected,
                          PartitionCase::kGraph, PartitionCase::kTwoSat}) {
    EXPECT_GT(cases[c], 10) << partition_case_name(c);
  }
}

TEST(Partition2Test, DuplicatesDoNotChangeTheAnswer) {
  Rng rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = testing::RandomProfile(rng, 8, 1, 6);
    if (p.vote_count() == 0) continue;
    std::vector<std::size_t> picks = testing::Iota(p.vote_count());
    for (int extra = 0; extra < 4; ++extra) picks.push_back(rng.below(p.vote_count()));
    const Profile q = select_votes(p, picks);
    for (DomainId d : kAllDomains) {
      const auto bq = partition2(q, d);
      EXPECT_EQ(partition2(p, d).has_value(), bq.has_value());
      if (!bq) continue;
      EXPECT_TRUE(verify_bipartition(q, d, *bq));
      const VoteSet first = make_vote_set(q.vote_count(), bq->part1);
      for (std::size_t a = 0; a < q.vote_count(); ++a) {
        for (std::size_t b = 0; b < q.vote_count(); ++b) {
          if (q.vote(a) == q.vote(b)) EXPECT_EQ(first.test(a), first.test(b));
        }
      }
    }
  }
}

}  // namespace
}  // namespace prefsplit
