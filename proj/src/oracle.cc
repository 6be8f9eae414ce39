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

#include "prefsplit/oracle.h"

#include <algorithm>
#include <numeric>

namespace prefsplit {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kBadParams, "Rng::below(0)");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

std::vector<std::vector<std::size_t>> KPartition::groups() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    out[static_cast<std::size_t>(assignment[v])].push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pruned k-partition search

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const MinorIndex& index, int k, std::uint64_t budget)
      : index_(index),
        k_(static_cast<std::size_t>(k)),
        budget_(budget),
        groups_(k_, VoteSet(index.vote_count())),
        assignment_(index.vote_count(), -1) {}

  SearchStatus Run() {
    if (Place(0)) return SearchStatus::kFound;
    return exceeded_ ? SearchStatus::kBudgetExceeded : SearchStatus::kNone;
  }

  const std::vector<int>& assignment() const { return assignment_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool Place(std::size_t v) {
    if (v == index_.vote_count()) return true;
    const std::size_t limit = std::min(open_ + 1, k_);
    for (std::size_t g = 0; g < limit; ++g) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      if (index_.completes_minor(groups_[g], v)) continue;
      const bool opens = g == open_;
      groups_[g].set(v);
      assignment_[v] = static_cast<int>(g);
      if (opens) ++open_;
      if (Place(v + 1)) return true;
      if (opens) --open_;
      groups_[g].reset(v);
      assignment_[v] = -1;
      if (exceeded_) return false;
    }
    return false;
  }

  const MinorIndex& index_;
  std::size_t k_;
  std::uint64_t budget_;
  std::vector<VoteSet> groups_;
  std::vector<int> assignment_;
  std::size_t open_ = 0;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

KPartitionResult bruteforce_kpartition(const Profile& p, DomainId d, int k,
                                       std::uint64_t budget) {
  if (k < 1) throw Error(ErrorCode::kBadK, "k must be at least 1");
  const DedupMap dm = dedupe(p);
  const MinorIndex index(dm.representatives, domain_spec(d));
  PartitionSearch search(index, k, budget);

  KPartitionResult result;
  result.status = search.Run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::kFound) {
    KPartition part;
    part.k = k;
    part.assignment.assign(p.vote_count(), 0);
    for (std::size_t r = 0; r < dm.groups.size(); ++r) {
      for (std::size_t orig : dm.groups[r]) {
        part.assignment[orig] = search.assignment()[r];
      }
    }
    result.partition = std::move(part);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Definition-level minor search

namespace {

bool DefinitionJMinor(const Profile& p, const std::array<std::size_t, 3>& votes,
                      const std::array<Candidate, 3>& cands, int j) {
  std::array<bool, 3> seen{};
  for (std::size_t v : votes) {
    std::array<Candidate, 3> order = cands;
    std::sort(order.begin(), order.end(), [&](Candidate x, Candidate y) {
      return p.position(v, x) < p.position(v, y);
    });
    const Candidate at = order[static_cast<std::size_t>(j - 1)];
    const auto k = static_cast<std::size_t>(
        std::find(cands.begin(), cands.end(), at) - cands.begin());
    if (seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

// Tries every injection of slots into candidates for the ordered vote
// pair (rows[0] -> u, rows[1] -> v).
bool InjectionMatches(const Profile& p, std::size_t u, std::size_t v,
                      const MinorPattern& pat, std::vector<Candidate>& bind,
                      std::vector<bool>& used) {
  const std::size_t q = pat.col_count();
  if (bind.size() == q) {
    for (auto [vote, row] : {std::pair{u, &pat.rows[0]},
                             std::pair{v, &pat.rows[1]}}) {
      for (std::size_t k = 0; k + 1 < q; ++k) {
        const Candidate hi = bind[static_cast<std::size_t>((*row)[k])];
        const Candidate lo = bind[static_cast<std::size_t>((*row)[k + 1])];
        if (p.position(vote, hi) > p.position(vote, lo)) return false;
      }
    }
    return true;
  }
  for (std::size_t c = 0; c < p.candidate_count(); ++c) {
    if (used[c]) continue;
    used[c] = true;
    bind.push_back(static_cast<Candidate>(c));
    if (InjectionMatches(p, u, v, pat, bind, used)) return true;
    bind.pop_back();
    used[c] = false;
  }
  return false;
}

}  // namespace

std::optional<MinorWitness> bruteforce_contains_minor(const Profile& p,
                                                      DomainId d) {
  const DomainSpec& spec = domain_spec(d);
  const std::size_t n = p.vote_count();
  const std::size_t m = p.candidate_count();
  for (int j : spec.j_flags) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = x + 1; y < m; ++y) {
              for (std::size_t z = y + 1; z < m; ++z) {
                const std::array<Candidate, 3> cands{
                    static_cast<Candidate>(x), static_cast<Candidate>(y),
                    static_cast<Candidate>(z)};
                if (DefinitionJMinor(p, {a, b, c}, cands, j)) {
                  return MinorWitness{{a, b, c},
                                      {cands.begin(), cands.end()},
                                      {j, -1}};
                }
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < spec.explicit_patterns.size(); ++k) {
    const MinorPattern& pat = spec.explicit_patterns[k];
    if (pat.col_count() > m) continue;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        std::vector<Candidate> bind;
        std::vector<bool> used(m, false);
        if (InjectionMatches(p, u, v, pat, bind, used)) {
          return MinorWitness{{u, v}, bind, {0, static_cast<int>(k)}};
        }
      }
    }
  }
  return std::nullopt;
}

bool bruteforce_has_bipartition(const Profile& p, DomainId d) {
  const std::size_t n = p.vote_count();
  if (n <= 1) return true;
  // Vote 0 always goes to the first part.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> first{0};
    std::vector<std::size_t> second;
    for (std::size_t v = 1; v < n; ++v) {
      ((mask >> (v - 1)) & 1 ? second : first).push_back(v);
    }
    if (!bruteforce_contains_minor(select_votes(p, first), d) &&
        (second.empty() ||
         !bruteforce_contains_minor(select_votes(p, second), d))) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Generators

std::string_view model_name(GenModel model) {
  switch (model) {
    case GenModel::kImpartial: return "impartial";
    case GenModel::kSpUnion: return "sp-union";
    case GenModel::kGsUnion: return "gs-union";
    case GenModel::kCatGsUnion: return "catgs-union";
  }
  return "unknown";
}

std::optional<GenModel> parse_model(std::string_view name) {
  for (GenModel m : {GenModel::kImpartial, GenModel::kSpUnion,
                     GenModel::kGsUnion, GenModel::kCatGsUnion}) {
    if (model_name(m) == name) return m;
  }
  return std::nullopt;
}

Ranking sample_sp_vote(const std::vector<Candidate>& axis, Rng& rng) {
  const std::size_t m = axis.size();
  const auto peak = static_cast<std::ptrdiff_t>(rng.below(m));
  Ranking vote{axis[static_cast<std::size_t>(peak)]};
  std::ptrdiff_t left = peak - 1;
  auto right = static_cast<std::size_t>(peak) + 1;
  while (left >= 0 || right < m) {
    bool take_left;
    if (left < 0) {
      take_left = false;
    } else if (right >= m) {
      take_left = true;
    } else {
      take_left = rng.coin();
    }
    if (take_left) {
      vote.push_back(axis[static_cast<std::size_t>(left--)]);
    } else {
      vote.push_back(axis[right++]);
    }
  }
  return vote;
}

OrderedBinaryTree random_tree(std::vector<Candidate> cands, Rng& rng) {
  if (cands.size() == 1) return OrderedBinaryTree::Leaf(cands[0]);
  const std::size_t split = 1 + static_cast<std::size_t>(rng.below(cands.size() - 1));
  std::vector<Candidate> right(cands.begin() + static_cast<long>(split),
                               cands.end());
  cands.resize(split);
  OrderedBinaryTree l = random_tree(std::move(cands), rng);
  OrderedBinaryTree r = random_tree(std::move(right), rng);
  return OrderedBinaryTree::Join(l, r);
}

Ranking sample_gs_vote(const OrderedBinaryTree& tree, Rng& rng) {
  Ranking vote;
  auto walk = [&](auto&& self, int id) -> void {
    const auto& node = tree.nodes()[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      vote.push_back(node.leaf);
      return;
    }
    if (rng.coin()) {
      self(self, node.left);
      self(self, node.right);
    } else {
      self(self, node.right);
      self(self, node.left);
    }
  };
  walk(walk, tree.root());
  return vote;
}

Ranking sample_catgs_vote(const std::vector<Candidate>& order, Rng& rng) {
  Ranking head;
  Ranking tail;
  for (Candidate c : order) (rng.coin() ? head : tail).push_back(c);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

Profile generate(const GenParams& params) {
  if (params.m < 1) throw Error(ErrorCode::kBadParams, "m must be >= 1");
  if (params.k < 1) throw Error(ErrorCode::kBadParams, "k must be >= 1");
  Rng rng(params.seed);
  std::vector<Candidate> base(params.m);
  std::iota(base.begin(), base.end(), 0);

  std::vector<Ranking> votes;
  votes.reserve(params.n * params.k);
  for (std::size_t g = 0; g < params.k; ++g) {
    switch (params.model) {
      case GenModel::kImpartial:
        for (std::size_t i = 0; i < params.n; ++i) {
          Ranking r = base;
          rng.shuffle(r);
          votes.push_back(std::move(r));
        }
        break;
      case GenModel::kSpUnion: {
        std::vector<Candidate> axis = base;
        rng.shuffle(axis);
        for (std::size_t i = 0; i < params.n; ++i) {
          votes.push_back(sample_sp_vote(axis, rng));
        }
        break;
      }
      case GenModel::kGsUnion: {
        std::vector<Candidate> leaves = base;
        rng.shuffle(leaves);
        const OrderedBinaryTree tree = random_tree(std::move(leaves), rng);
        for (std::size_t i = 0; i < params.n; ++i) {
          votes.push_back(sample_gs_vote(tree, rng));
        }
        break;
      }
      case GenModel::kCatGsUnion: {
        std::vector<Candidate> order = base;
        rng.shuffle(order);
        for (std::size_t i = 0; i < params.n; ++i) {
          votes.push_back(sample_catgs_vote(order, rng));
        }
        break;
      }
    }
  }
  return Profile::WithDefaultNames(params.m, std::move(votes));
}

}  // namespace prefsplit
