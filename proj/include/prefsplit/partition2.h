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

// Polynomial-time split of a profile's voters into two groups that both
// lie in a domain characterized by 2-row patterns and j-minors.
//
// Pipeline on the deduplicated profile:
//   1. For every flagged position i, find the i-dangerous triples (all
//      three position classes non-empty) and test each class for
//      membership.
//   2. Two non-member classes in one dangerous triple: no split exists
//      (at most one class of a dangerous triple can straddle the split,
//      and a non-member class must straddle it).
//   3. Some dangerous triple with three member classes: for each ordered
//      pair of its classes pinned to opposite sides, a 2-SAT instance over
//      the third class decides the rest.
//   4. Otherwise every dangerous triple has exactly one non-member class:
//      the split is a 2-coloring of the graph whose edges are conflicting
//      vote pairs plus, per dangerous triple, all pairs across its two
//      member classes.

#ifndef PREFSPLIT_PARTITION2_H_
#define PREFSPLIT_PARTITION2_H_

#include <array>
#include <optional>
#include <vector>

#include "prefsplit/domains.h"
#include "prefsplit/minors.h"
#include "prefsplit/profile.h"
#include "prefsplit/satgraph.h"

namespace prefsplit {

// Vote indices of the original profile; disjoint and covering.
struct Bipartition {
  std::vector<std::size_t> part1;
  std::vector<std::size_t> part2;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct DangerousTriple {
  TripleSplit split;
  std::array<bool, 3> member_flags{};

  int non_member_count() const {
    return 3 - member_flags[0] - member_flags[1] - member_flags[2];
  }
};

enum class PartitionCase { kMember, kRejected, kGraph, kTwoSat };

const char* partition_case_name(PartitionCase c);

struct Partition2Report {
  std::optional<Bipartition> result;
  PartitionCase which = PartitionCase::kMember;
  std::size_t distinct_votes = 0;
  std::size_t dangerous_triples = 0;
};

std::optional<Bipartition> partition2(const Profile& p, DomainId d);
Partition2Report partition2_report(const Profile& p, DomainId d);

// Both parts, as subprofiles over all candidates, are members of d.
// Throws Error(kBadIndex) unless the parts are disjoint and cover 0..n-1.
bool verify_bipartition(const Profile& p, DomainId d, const Bipartition& b);

// All dangerous (triple, flagged position) entries with per-class
// membership, sorted by (triple, position).
std::vector<DangerousTriple> classify_dangerous(const MinorIndex& index);

// The 2-SAT instance that pins class `a_in_u` to the first part and class
// `b_in_v` to the second; variable k is the k-th vote (ascending) of the
// remaining class, true meaning "first part". All three classes of the
// triple at `position` must be members (kPreconditionViolated otherwise).
TwoSatInstance build_case2_instance(const Profile& p, DomainId d,
                                    std::array<Candidate, 3> triple,
                                    int position, Candidate a_in_u,
                                    Candidate b_in_v);
TwoSatInstance build_case2_instance(const MinorIndex& index,
                                    const TripleSplit& split,
                                    std::size_t u_class, std::size_t v_class);

}  // namespace prefsplit

#endif  // PREFSPLIT_PARTITION2_H_
