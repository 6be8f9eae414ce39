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

#ifndef PREFSPLIT_SATGRAPH_H_
#define PREFSPLIT_SATGRAPH_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace prefsplit {

struct Literal {
  int var = 0;
  bool positive = true;

  Literal operator!() const { return Literal{var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal Pos(int var) { return Literal{var, true}; }
inline Literal Neg(int var) { return Literal{var, false}; }

// Clauses are disjunctions of two literals; a unit clause repeats its
// literal.
struct TwoSatInstance {
  int var_count = 0;
  std::vector<std::pair<Literal, Literal>> clauses;

  void add(Literal a, Literal b) { clauses.emplace_back(a, b); }
  void add_unit(Literal a) { clauses.emplace_back(a, a); }
};

using Assignment = std::vector<bool>;

bool satisfies(const TwoSatInstance& inst, const Assignment& values);

// Implication graph + strongly connected components. The returned
// assignment is checked against every clause before it is handed out.
std::optional<Assignment> solve_2sat(const TwoSatInstance& inst);

enum class EdgeKind { kConflict, kTriple };

struct VoteGraph {
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    EdgeKind kind = EdgeKind::kConflict;
  };

  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

struct TwoColoring {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

// Proper 2-coloring by BFS, each component rooted at its smallest vertex
// in the first set; nullopt iff the graph has an odd cycle.
std::optional<TwoColoring> two_color(const VoteGraph& g);

}  // namespace prefsplit

#endif  // PREFSPLIT_SATGRAPH_H_
