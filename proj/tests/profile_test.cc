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

#include "prefsplit/profile.h"

#include <gtest/gtest.h>

#include "prefsplit/oracle.h"
#include "test_util.h"

namespace prefsplit {
namespace {

using testing::MakeProfile;

ErrorCode ParseError(std::string_view text) {
  try {
    parse_profile(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kBadParams;
}

TEST(ParseProfileTest, SmallestInput) {
  const Profile p = parse_profile("candidates: a,b\nvote: a>b");
  EXPECT_EQ(p.candidate_count(), 2u);
  ASSERT_EQ(p.vote_count(), 1u);
  EXPECT_EQ(p.vote(0), (Ranking{0, 1}));
}

TEST(ParseProfileTest, TwoVotesOverFourCandidates) {
  const Profile p =
      parse_profile("candidates: a,b,c,d\nvote: a>b>c>d\nvote: b>d>a>c");
  EXPECT_EQ(p.candidate_count(), 4u);
  ASSERT_EQ(p.vote_count(), 2u);
  EXPECT_EQ(p.vote(1), (Ranking{1, 3, 0, 2}));
  EXPECT_EQ(p.position(1, 0), 2u);
}

TEST(ParseProfileTest, CommentsAndBlankLinesIgnored) {
  const Profile p = parse_profile(
      "# header\n\ncandidates: x,y,z\n# middle\nvote: z>x>y\n\n");
  EXPECT_EQ(p.names(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(p.vote(0), (Ranking{2, 0, 1}));
}

TEST(ParseProfileTest, Errors) {
  EXPECT_EQ(ParseError("candidates: a,b\nvote: a>a"),
            ErrorCode::kNotAPermutation);
  EXPECT_EQ(ParseError("candidates: a,b\nvote: a"),
            ErrorCode::kNotAPermutation);
  EXPECT_EQ(ParseError("candidates: a,a"), ErrorCode::kDuplicateCandidate);
  EXPECT_EQ(ParseError("candidates: a,b\nvote: a>z"),
            ErrorCode::kUnknownCandidate);
  EXPECT_EQ(ParseError("candidates: a,b\nballot: a>b"),
            ErrorCode::kMalformedLine);
  EXPECT_EQ(ParseError("vote: a>b"), ErrorCode::kMalformedLine);
  EXPECT_EQ(ParseError("candidates: a\ncandidates: a"),
            ErrorCode::kMalformedLine);
}

TEST(EmitProfileTest, Examples) {
  EXPECT_EQ(emit_profile(parse_profile("candidates: a,b\nvote: a>b")),
            "candidates: a,b\nvote: a>b\n");
  EXPECT_EQ(emit_profile(parse_profile("candidates: a")), "candidates: a\n");
}

TEST(EmitProfileTest, RoundTripOnRandomProfiles) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = testing::RandomProfile(rng, 10, 1, 30);
    EXPECT_EQ(parse_profile(emit_profile(p)), p);
  }
}

TEST(RestrictTest, Examples) {
  const Profile abc = MakeProfile({"a>b>c"});
  const std::vector<Candidate> ac{0, 2};
  EXPECT_EQ(restrict(abc, ac).vote(0), (Ranking{0, 1}));
  EXPECT_EQ(restrict(abc, ac).names(), (std::vector<std::string>{"a", "c"}));

  const Profile p = MakeProfile({"a>b>c", "c>a>b"});
  const std::vector<Candidate> all{0, 1, 2};
  EXPECT_EQ(restrict(p, all), p);

  const Profile q = MakeProfile({"b>d>a>c"});
  const std::vector<Candidate> keep{0, 1, 2};
  EXPECT_EQ(emit_profile(restrict(q, keep)), "candidates: a,b,c\nvote: b>a>c\n");
}

TEST(RestrictTest, Errors) {
  const Profile p = MakeProfile({"a>b>c"});
  try {
    restrict(p, std::vector<Candidate>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCandidateSet);
  }
  try {
    restrict(p, std::vector<Candidate>{0, 7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownCandidate);
  }
}

TEST(RestrictTest, Composes) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = testing::RandomProfile(rng, 6, 3, 8);
    std::vector<Candidate> a;
    for (std::size_t c = 0; c < p.candidate_count(); ++c) {
      if (rng.coin() || a.empty()) a.push_back(static_cast<Candidate>(c));
    }
    // B is a subset of A, given both in p's ids and in restrict(p, A)'s ids.
    std::vector<Candidate> b_outer;
    std::vector<Candidate> b_inner;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (rng.coin() || (i + 1 == a.size() && b_outer.empty())) {
        b_outer.push_back(a[i]);
        b_inner.push_back(static_cast<Candidate>(i));
      }
    }
    EXPECT_EQ(restrict(restrict(p, a), b_inner), restrict(p, b_outer));
  }
}

TEST(DedupeTest, Examples) {
  const DedupMap twice = dedupe(MakeProfile({"a>b", "a>b"}));
  EXPECT_EQ(twice.representatives.vote_count(), 1u);
  EXPECT_EQ(twice.groups, (std::vector<std::vector<std::size_t>>{{0, 1}}));

  const Profile distinct = MakeProfile({"a>b>c", "c>b>a", "b>a>c"});
  const DedupMap id = dedupe(distinct);
  EXPECT_EQ(id.representatives, distinct);
  EXPECT_EQ(id.groups,
            (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
}

TEST(DedupeTest, ExpansionRestoresTheProfile) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile base = testing::RandomProfile(rng, 8, 1, 4);
    // Inject duplicates by sampling vote indices with replacement.
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < base.vote_count() * 2; ++i) {
      picks.push_back(static_cast<std::size_t>(rng.below(base.vote_count())));
    }
    const Profile p = select_votes(base, picks);
    const DedupMap dm = dedupe(p);
    std::size_t total = 0;
    for (std::size_t r = 0; r < dm.groups.size(); ++r) {
      total += dm.groups[r].size();
      for (std::size_t orig : dm.groups[r]) {
        EXPECT_EQ(p.vote(orig), dm.representatives.vote(r));
      }
    }
    EXPECT_EQ(total, p.vote_count());
    for (std::size_t a = 0; a < dm.representatives.vote_count(); ++a) {
      for (std::size_t b = a + 1; b < dm.representatives.vote_count(); ++b) {
        EXPECT_NE(dm.representatives.vote(a), dm.representatives.vote(b));
      }
    }
    EXPECT_EQ(expand_indices(dm, testing::Iota(dm.groups.size())),
              testing::Iota(p.vote_count()));
  }
}

}  // namespace
}  // namespace prefsplit
