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

// Reduction from partitioning a graph into k cliques to partitioning a
// profile's voters into k groups of a restricted domain, plus the graph
// utilities used to validate it on small graphs.

#ifndef PREFSPLIT_HARDNESS_H_
#define PREFSPLIT_HARDNESS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefsplit/oracle.h"
#include "prefsplit/profile.h"

namespace prefsplit {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  // Throws Error(kBadIndex) for self-loops or out-of-range endpoints.
  // Adding an existing edge is a no-op.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const {
    return adj_[u * n_ + v] != 0;
  }
  // Sorted pairs (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;
};

// "vertices: n" followed by "edge: i j" lines, '#' comments allowed.
// Throws Error(kMalformedLine) or Error(kBadIndex).
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

struct CliquePartition {
  int k = 1;
  std::vector<int> assignment;  // class per vertex, classes may be empty
};

// Every class induces a clique and the assignment covers the graph.
bool verify_clique_partition(const Graph& g, const CliquePartition& cp);

// Backtracking over vertices in id order; a vertex may join an open class
// only if it is adjacent to all its members. Throws Error(kBadK) for k < 1.
std::optional<CliquePartition> clique_kpartition(const Graph& g, int k);

// Appends k disjoint cliques of size k+2, each new vertex also adjacent to
// every original vertex. Throws Error(kBadK) for k < 1.
Graph augment_graph(const Graph& g, int k);

struct NonEdgeTriple {
  std::size_t u = 0;  // u < v, non-adjacent in the augmented graph
  std::size_t v = 0;
  std::array<Candidate, 3> abc{};
};

struct ReductionOutput {
  Graph augmented;
  Profile profile;
  // One entry per non-edge of the augmented graph, lexicographic order.
  std::vector<NonEdgeTriple> triples;
};

// One vote per vertex of the augmented graph and one candidate triple
// (a, b, c) per non-edge {i, j}. Vote l ranks the triples in order; inside
// a triple it uses a>b>c if l = i, b>c>a if l = j, and c>a>b otherwise.
// Candidates are named a_i_j, b_i_j, c_i_j. Throws Error(kBadK) for k < 1,
// and Error(kEmptyCandidateSet) if the augmented graph is complete.
ReductionOutput reduce_to_profile(const Graph& g, int k);

// Vote l goes to the class of vertex l. Throws Error(kSizeMismatch) if the
// partition does not cover the augmented graph.
KPartition map_clique_partition_to_votes(const ReductionOutput& r,
                                         const CliquePartition& cp);

}  // namespace prefsplit

#endif  // PREFSPLIT_HARDNESS_H_
