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

// Ground truth for validation: exhaustive minor search, pruned exhaustive
// k-partition search, and seeded profile generators.

#ifndef PREFSPLIT_ORACLE_H_
#define PREFSPLIT_ORACLE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "prefsplit/domains.h"
#include "prefsplit/gstree.h"
#include "prefsplit/minors.h"
#include "prefsplit/profile.h"

namespace prefsplit {

// Reproducible across platforms: std::mt19937_64 for raw bits, integers in
// [0, n) by rejecting raw values below 2^64 mod n, shuffles by Fisher-Yates
// from the back. No std:: distributions (their output is
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct KPartition {
  int k = 1;
  std::vector<int> assignment;  // group per vote index

  std::vector<std::vector<std::size_t>> groups() const;
};

enum class SearchStatus { kFound, kNone, kBudgetExceeded };

struct KPartitionResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<KPartition> partition;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Backtracking over group assignments of the distinct votes (copies of a
// vote share a group), pruning as soon as a group contains a forbidden
// minor. Groups are opened in order, so each partition is visited once up
// to relabeling. Throws Error(kBadK) for k < 1.
KPartitionResult bruteforce_kpartition(const Profile& p, DomainId d, int k,
                                       std::uint64_t budget = kDefaultBudget);

// Definition-level search over every vote tuple and candidate injection.
std::optional<MinorWitness> bruteforce_contains_minor(const Profile& p,
                                                      DomainId d);

// Exhaustive two-group search returning the first valid split found, for
// checking the polynomial algorithm on small profiles.
bool bruteforce_has_bipartition(const Profile& p, DomainId d);

enum class GenModel { kImpartial, kSpUnion, kGsUnion, kCatGsUnion };

std::string_view model_name(GenModel model);
std::optional<GenModel> parse_model(std::string_view name);

struct GenParams {
  std::size_t n = 0;  // votes per group
  std::size_t m = 1;
  std::size_t k = 1;  // groups
  std::uint64_t seed = 0;
  GenModel model = GenModel::kImpartial;
};

// k groups of n votes each, group after group. Throws Error(kBadParams)
// for m < 1 or k < 1.
Profile generate(const GenParams& params);

// Samplers behind `generate`, exposed for tests.
Ranking sample_sp_vote(const std::vector<Candidate>& axis, Rng& rng);
OrderedBinaryTree random_tree(std::vector<Candidate> cands, Rng& rng);
Ranking sample_gs_vote(const OrderedBinaryTree& tree, Rng& rng);
Ranking sample_catgs_vote(const std::vector<Candidate>& order, Rng& rng);

}  // namespace prefsplit

#endif  // PREFSPLIT_ORACLE_H_
