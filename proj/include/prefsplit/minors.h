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

// Forbidden-minor machinery shared by the domain checks, the caterpillar
// recognizer and the two-group partition engine.
//
// Two kinds of forbidden minors are supported:
//   * j-minors (j = 1, 2, 3): three votes and three candidates such that
//     every candidate sits at position j of exactly one of the three
//     restricted votes;
//   * explicit patterns: a fixed small profile, matched up to candidate
//     renaming and row order.

#ifndef PREFSPLIT_MINORS_H_
#define PREFSPLIT_MINORS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "prefsplit/profile.h"

namespace prefsplit {

using VoteSet = boost::dynamic_bitset<>;

VoteSet make_vote_set(std::size_t n, std::span<const std::size_t> members);
VoteSet full_vote_set(std::size_t n);
std::vector<std::size_t> members_of(const VoteSet& s);

// A p x q pattern: each row is a ranking of slots 0..q-1, top first.
struct MinorPattern {
  std::vector<std::vector<int>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
  // Rows written with slot letters, e.g. "a>b>c>d / b>d>a>c".
  std::string label() const;
};

// Builds a pattern from rows spelled with letters a, b, c, ... (slot 0 is
// 'a'). Throws Error(kMalformedLine) on anything that is not a permutation.
MinorPattern pattern_from_rows(const std::vector<std::string>& rows);

// Expands a braced row such as "{a,d}>b>c" into every concrete order
// ("a>d>b>c", "d>a>b>c"), braces expanded left to right.
std::vector<std::string> expand_braced_row(std::string_view row);

// Cross product of the braced expansions of each row.
std::vector<MinorPattern> expand_braced_pattern(
    const std::vector<std::string>& braced_rows);

struct DomainSpec {
  std::string name;
  std::vector<int> j_flags;  // ascending subset of {1, 2, 3}
  std::vector<MinorPattern> explicit_patterns;

  bool has_j(int j) const;
};

// j in 1..3 for a j-minor, 0 for an explicit pattern.
struct MinorSource {
  int j = 0;
  int pattern_index = -1;

  friend bool operator==(const MinorSource&, const MinorSource&) = default;
};

// For j-minors: three vote indices and the candidate triple, both sorted.
// For explicit patterns: vote_indices[r] plays pattern row r and
// candidates[s] is the candidate bound to slot s.
struct MinorWitness {
  std::vector<std::size_t> vote_indices;
  std::vector<Candidate> candidates;
  MinorSource source;

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

std::string describe_source(const DomainSpec& spec, const MinorSource& src);

bool is_j_minor(const Profile& p, std::span<const std::size_t> votes,
                std::span<const Candidate> triple, int j);
bool realizes_pattern(const Profile& p, const MinorWitness& w,
                      const MinorPattern& pat);
// True iff the witness's votes and candidates really form the minor its
// source names.
bool replay_witness(const Profile& p, const DomainSpec& spec,
                    const MinorWitness& w);

struct TripleSplit {
  std::array<Candidate, 3> triple;
  int position = 1;
  // classes[k]: votes whose restriction to the triple has triple[k] at
  // `position`.
  std::array<std::vector<std::size_t>, 3> classes;
};

TripleSplit triple_split(const Profile& p, std::array<Candidate, 3> triple,
                         int position);

std::optional<MinorWitness> find_j_minor(const Profile& p, int j);

// Does the ordered vote pair (u as row 0, v as row 1) realize the 2-row
// pattern? Returns the slot -> candidate binding of the first match.
std::optional<std::vector<Candidate>> match_vote_pair(const Profile& p,
                                                      std::size_t u,
                                                      std::size_t v,
                                                      const MinorPattern& pat);

std::optional<MinorWitness> find_explicit_minor(const Profile& p,
                                                const MinorPattern& pat);

using ConflictMatrix = std::vector<std::vector<bool>>;

ConflictMatrix conflict_pairs(const Profile& p, const DomainSpec& spec);

// One (candidate triple, position) whose three position classes are all
// non-empty and whose position is flagged by the spec.
struct TripleClasses {
  std::array<Candidate, 3> triple;
  int position = 1;
  std::array<VoteSet, 3> classes;
  std::vector<std::uint8_t> class_of;  // per vote, 0..2
};

// Per-(profile, spec) tables: pairwise conflicts for explicit patterns and
// every potentially dangerous (triple, flagged position). Any vote subset
// can then be tested for a forbidden minor with bitset operations only.
class MinorIndex {
 public:
  MinorIndex(const Profile& p, DomainSpec spec);

  const Profile& profile() const { return profile_; }
  const DomainSpec& spec() const { return spec_; }
  std::size_t vote_count() const { return profile_.vote_count(); }

  bool conflicts(std::size_t u, std::size_t v) const {
    return conflict_rows_[u][v];
  }
  const VoteSet& conflict_row(std::size_t u) const {
    return conflict_rows_[u];
  }
  // Witness for a conflicting pair (u != v), in either argument order.
  const MinorWitness& conflict_witness(std::size_t u, std::size_t v) const;

  // Sorted by (triple, position).
  const std::vector<TripleClasses>& dangerous() const { return dangerous_; }

  // First forbidden minor inside `votes` (j-minors first, then explicit
  // pairs in lexicographic order), or nullopt if the subset is a member.
  std::optional<MinorWitness> find_in(const VoteSet& votes) const;

  // Would adding vote v to `group` (v not in group) create a minor that
  // uses v?
  bool completes_minor(const VoteSet& group, std::size_t v) const;

  // Do the three distinct votes form some flagged j-minor?
  bool votes_form_j_minor(std::size_t a, std::size_t b, std::size_t c) const;

 private:
  Profile profile_;
  DomainSpec spec_;
  std::vector<VoteSet> conflict_rows_;
  std::map<std::pair<std::size_t, std::size_t>, MinorWitness> conflict_wit_;
  std::vector<TripleClasses> dangerous_;
};

// All (triple, j) entries for j in `positions` whose three classes are
// non-empty, sorted by (triple, j).
std::vector<TripleClasses> dangerous_triples(const Profile& p,
                                             std::span<const int> positions);

}  // namespace prefsplit

#endif  // PREFSPLIT_MINORS_H_
