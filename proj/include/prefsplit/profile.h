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

#ifndef PREFSPLIT_PROFILE_H_
#define PREFSPLIT_PROFILE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefsplit/error.h"

namespace prefsplit {

// Index into a profile's candidate-name table.
using Candidate = std::int32_t;

// A complete strict ranking, most preferred first. Always a permutation of
// 0..m-1 once it is part of a Profile.
using Ranking = std::vector<Candidate>;

// Named candidate set plus an ordered list of complete rankings. Immutable
// after construction; every constructor path validates the invariants.
class Profile {
 public:
  // Throws Error(kDuplicateCandidate / kMalformedLine / kNotAPermutation).
  Profile(std::vector<std::string> names, std::vector<Ranking> votes);

  // Candidates named "a", "b", ... (or "c1", "c2", ... past 26).
  static Profile WithDefaultNames(std::size_t candidate_count,
                                  std::vector<Ranking> votes);

  std::size_t candidate_count() const { return names_.size(); }
  std::size_t vote_count() const { return votes_.size(); }
  bool empty() const { return votes_.empty(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Candidate c) const { return names_.at(c); }
  std::optional<Candidate> find_candidate(std::string_view name) const;

  const std::vector<Ranking>& votes() const { return votes_; }
  const Ranking& vote(std::size_t i) const { return votes_.at(i); }

  // position(v, c): 0-based position of candidate c in vote v.
  std::size_t position(std::size_t v, Candidate c) const {
    return positions_[v * names_.size() + static_cast<std::size_t>(c)];
  }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.names_ == b.names_ && a.votes_ == b.votes_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Ranking> votes_;
  std::vector<std::size_t> positions_;
};

bool IsValidCandidateName(std::string_view name);
std::vector<std::string> DefaultCandidateNames(std::size_t count);

Profile parse_profile(std::string_view text);
std::string emit_profile(const Profile& p);

// Deletes every candidate outside `keep` from every vote. The result is
// renumbered 0..|keep|-1 in increasing original id; names are carried over.
Profile restrict(const Profile& p, std::span<const Candidate> keep);

// The subprofile made of the listed votes, in the listed order.
Profile select_votes(const Profile& p, std::span<const std::size_t> indices);

// Representative profile with pairwise-distinct votes (first-occurrence
// order) plus, for each representative, the original indices it stands for.
struct DedupMap {
  Profile representatives;
  std::vector<std::vector<std::size_t>> groups;
};

DedupMap dedupe(const Profile& p);

// Inverse of dedupe for a set of representative indices.
std::vector<std::size_t> expand_indices(const DedupMap& map,
                                        std::span<const std::size_t> reps);

}  // namespace prefsplit

#endif  // PREFSPLIT_PROFILE_H_
