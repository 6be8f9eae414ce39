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

#include <algorithm>
#include <stdexcept>

namespace prefsplit {

const char* partition_case_name(PartitionCase c) {
  switch (c) {
    case PartitionCase::kMember: return "member";
    case PartitionCase::kRejected: return "rejected";
    case PartitionCase::kGraph: return "graph";
    case PartitionCase::kTwoSat: return "2sat";
  }
  return "unknown";
}

std::vector<DangerousTriple> classify_dangerous(const MinorIndex& index) {
  std::vector<DangerousTriple> out;
  out.reserve(index.dangerous().size());
  for (const TripleClasses& e : index.dangerous()) {
    DangerousTriple dt;
    dt.split.triple = e.triple;
    dt.split.position = e.position;
    for (std::size_t k = 0; k < 3; ++k) {
      dt.split.classes[k] = members_of(e.classes[k]);
      dt.member_flags[k] = !index.find_in(e.classes[k]).has_value();
    }
    out.push_back(std::move(dt));
  }
  return out;
}

TwoSatInstance build_case2_instance(const MinorIndex& index,
                                    const TripleSplit& split,
                                    std::size_t u_class, std::size_t v_class) {
  const std::size_t n = index.vote_count();
  if (u_class > 2 || v_class > 2 || u_class == v_class) {
    throw Error(ErrorCode::kPreconditionViolated, "class indices");
  }
  if (!index.spec().has_j(split.position)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "position " + std::to_string(split.position) +
                    " is not flagged by " + index.spec().name);
  }
  std::array<VoteSet, 3> cls;
  for (std::size_t k = 0; k < 3; ++k) {
    cls[k] = make_vote_set(n, split.classes[k]);
    if (index.find_in(cls[k])) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "class " + std::to_string(k) + " is not a member");
    }
  }
  const std::size_t w_class = 3 - u_class - v_class;
  const VoteSet& fixed_u = cls[u_class];
  const VoteSet& fixed_v = cls[v_class];
  const std::vector<std::size_t>& free_votes = split.classes[w_class];
  const std::size_t k = free_votes.size();

  std::vector<int> var_of(n, -1);
  for (std::size_t x = 0; x < k; ++x) var_of[free_votes[x]] = static_cast<int>(x);

  std::vector<char> neg_unit(k, 0);
  std::vector<char> pos_unit(k, 0);
  std::vector<char> neg_pair(k * k, 0);
  std::vector<char> pos_pair(k * k, 0);

  for (std::size_t x = 0; x < k; ++x) {
    const VoteSet& row = index.conflict_row(free_votes[x]);
    if (row.intersects(fixed_u)) neg_unit[x] = 1;
    if (row.intersects(fixed_v)) pos_unit[x] = 1;
  }

  std::array<std::vector<std::size_t>, 3> free_by_class;
  for (const TripleClasses& e : index.dangerous()) {
    std::array<bool, 3> hits_u{};
    std::array<bool, 3> hits_v{};
    for (std::size_t c = 0; c < 3; ++c) {
      hits_u[c] = e.classes[c].intersects(fixed_u);
      hits_v[c] = e.classes[c].intersects(fixed_v);
      free_by_class[c].clear();
    }
    for (std::size_t x = 0; x < k; ++x) {
      free_by_class[e.class_of[free_votes[x]]].push_back(x);
    }
    // One free vote completing a minor with two fixed votes on one side.
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t o1 = (c + 1) % 3;
      const std::size_t o2 = (c + 2) % 3;
      const bool kill_u = hits_u[o1] && hits_u[o2];
      const bool kill_v = hits_v[o1] && hits_v[o2];
      if (!kill_u && !kill_v) continue;
      for (std::size_t x : free_by_class[c]) {
        if (kill_u) neg_unit[x] = 1;
        if (kill_v) pos_unit[x] = 1;
      }
    }
    // Two free votes completing a minor with one fixed vote.
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r = (c + 1) % 3;
      const std::size_t s = (c + 2) % 3;
      if (!hits_u[c] && !hits_v[c]) continue;
      for (std::size_t x : free_by_class[r]) {
        for (std::size_t y : free_by_class[s]) {
          const std::size_t lo = std::min(x, y);
          const std::size_t hi = std::max(x, y);
          if (hits_u[c]) neg_pair[lo * k + hi] = 1;
          if (hits_v[c]) pos_pair[lo * k + hi] = 1;
        }
      }
    }
  }

  TwoSatInstance inst;
  inst.var_count = static_cast<int>(k);
  for (std::size_t x = 0; x < k; ++x) {
    if (neg_unit[x]) inst.add_unit(Neg(static_cast<int>(x)));
    if (pos_unit[x]) inst.add_unit(Pos(static_cast<int>(x)));
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x + 1; y < k; ++y) {
      if (neg_pair[x * k + y]) {
        inst.add(Neg(static_cast<int>(x)), Neg(static_cast<int>(y)));
      }
      if (pos_pair[x * k + y]) {
        inst.add(Pos(static_cast<int>(x)), Pos(static_cast<int>(y)));
      }
    }
  }
  return inst;
}

TwoSatInstance build_case2_instance(const Profile& p, DomainId d,
                                    std::array<Candidate, 3> triple,
                                    int position, Candidate a_in_u,
                                    Candidate b_in_v) {
  TripleSplit split = triple_split(p, triple, position);
  auto slot = [&](Candidate c) -> std::size_t {
    for (std::size_t k = 0; k < 3; ++k) {
      if (triple[k] == c) return k;
    }
    throw Error(ErrorCode::kPreconditionViolated,
                "candidate " + std::to_string(c) + " is not in the triple");
  };
  MinorIndex index(p, domain_spec(d));
  return build_case2_instance(index, split, slot(a_in_u), slot(b_in_v));
}

namespace {

Bipartition Expand(const DedupMap& dm, const std::vector<std::size_t>& first,
                   const std::vector<std::size_t>& second) {
  return Bipartition{expand_indices(dm, first), expand_indices(dm, second)};
}

void CheckSound(const MinorIndex& index, const std::vector<std::size_t>& a,
                const std::vector<std::size_t>& b) {
  const std::size_t n = index.vote_count();
  if (index.find_in(make_vote_set(n, a)) || index.find_in(make_vote_set(n, b))) {
    throw std::logic_error("partition2 produced a part outside the domain");
  }
}

}  // namespace

Partition2Report partition2_report(const Profile& p, DomainId d) {
  const DedupMap dm = dedupe(p);
  const Profile& rep = dm.representatives;
  const std::size_t n = rep.vote_count();
  const MinorIndex index(rep, domain_spec(d));

  Partition2Report report;
  report.distinct_votes = n;
  report.dangerous_triples = index.dangerous().size();

  std::vector<std::size_t> everyone(n);
  for (std::size_t v = 0; v < n; ++v) everyone[v] = v;
  if (!index.find_in(full_vote_set(n))) {
    report.which = PartitionCase::kMember;
    report.result = Expand(dm, everyone, {});
    return report;
  }

  const std::vector<DangerousTriple> triples = classify_dangerous(index);
  for (const DangerousTriple& dt : triples) {
    if (dt.non_member_count() >= 2) {
      report.which = PartitionCase::kRejected;
      return report;
    }
  }

  auto all_member = std::find_if(triples.begin(), triples.end(),
                                 [](const DangerousTriple& dt) {
                                   return dt.non_member_count() == 0;
                                 });
  if (all_member != triples.end()) {
    report.which = PartitionCase::kTwoSat;
    const TripleSplit& split = all_member->split;
    constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs = {
        std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}};
    for (const auto& [uc, vc] : kPairs) {
      const TwoSatInstance inst = build_case2_instance(index, split, uc, vc);
      const auto assignment = solve_2sat(inst);
      if (!assignment) continue;
      std::vector<std::size_t> first = split.classes[uc];
      std::vector<std::size_t> second = split.classes[vc];
      const auto& free_votes = split.classes[3 - uc - vc];
      for (std::size_t x = 0; x < free_votes.size(); ++x) {
        ((*assignment)[x] ? first : second).push_back(free_votes[x]);
      }
      std::sort(first.begin(), first.end());
      std::sort(second.begin(), second.end());
      CheckSound(index, first, second);
      report.result = Expand(dm, first, second);
      return report;
    }
    return report;
  }

  report.which = PartitionCase::kGraph;
  VoteGraph g;
  g.vertex_count = n;
  for (std::size_t u = 0; u < n; ++u) {
    const VoteSet& row = index.conflict_row(u);
    for (auto v = row.find_next(u); v != VoteSet::npos; v = row.find_next(v)) {
      g.edges.push_back({u, v, EdgeKind::kConflict});
    }
  }
  for (const DangerousTriple& dt : triples) {
    std::size_t bad = 0;
    while (dt.member_flags[bad]) ++bad;
    const auto& left = dt.split.classes[(bad + 1) % 3];
    const auto& right = dt.split.classes[(bad + 2) % 3];
    for (std::size_t u : left) {
      for (std::size_t v : right) g.edges.push_back({u, v, EdgeKind::kTriple});
    }
  }
  if (auto coloring = two_color(g)) {
    CheckSound(index, coloring->first, coloring->second);
    report.result = Expand(dm, coloring->first, coloring->second);
  }
  return report;
}

std::optional<Bipartition> partition2(const Profile& p, DomainId d) {
  return partition2_report(p, d).result;
}

bool verify_bipartition(const Profile& p, DomainId d, const Bipartition& b) {
  const std::size_t n = p.vote_count();
  VoteSet first = make_vote_set(n, b.part1);
  VoteSet second = make_vote_set(n, b.part2);
  if (first.count() != b.part1.size() || second.count() != b.part2.size() ||
      first.intersects(second) || first.count() + second.count() != n) {
    throw Error(ErrorCode::kBadIndex,
                "parts must be disjoint and cover every vote");
  }
  MinorIndex index(p, domain_spec(d));
  return !index.find_in(first) && !index.find_in(second);
}

}  // namespace prefsplit
