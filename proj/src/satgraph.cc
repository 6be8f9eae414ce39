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

#include "prefsplit/satgraph.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace prefsplit {

namespace {

// Node 2x is literal x, node 2x+1 is literal !x.
std::size_t Node(Literal l) {
  return 2 * static_cast<std::size_t>(l.var) + (l.positive ? 0 : 1);
}

// Iterative Tarjan. Components are numbered in reverse topological order
// of the condensation.
std::vector<int> StronglyConnected(
    const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int next_index = 0;
  int next_comp = 0;

  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    std::vector<Frame> calls{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!calls.empty()) {
      Frame& f = calls.back();
      if (f.edge < adj[f.node].size()) {
        const std::size_t w = adj[f.node][f.edge++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      calls.pop_back();
      if (!calls.empty()) {
        low[calls.back().node] = std::min(low[calls.back().node], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

bool satisfies(const TwoSatInstance& inst, const Assignment& values) {
  if (values.size() != static_cast<std::size_t>(inst.var_count)) return false;
  auto holds = [&](Literal l) {
    return values[static_cast<std::size_t>(l.var)] == l.positive;
  };
  return std::all_of(inst.clauses.begin(), inst.clauses.end(),
                     [&](const auto& c) {
                       return holds(c.first) || holds(c.second);
                     });
}

std::optional<Assignment> solve_2sat(const TwoSatInstance& inst) {
  const auto vars = static_cast<std::size_t>(inst.var_count);
  std::vector<std::vector<std::size_t>> adj(2 * vars);
  for (const auto& [a, b] : inst.clauses) {
    if (a.var < 0 || b.var < 0 || static_cast<std::size_t>(a.var) >= vars ||
        static_cast<std::size_t>(b.var) >= vars) {
      throw std::out_of_range("2-SAT literal out of range");
    }
    // a | b  ==  !a -> b  and  !b -> a
    adj[Node(!a)].push_back(Node(b));
    adj[Node(!b)].push_back(Node(a));
  }
  const std::vector<int> comp = StronglyConnected(adj);
  Assignment values(vars, false);
  for (std::size_t x = 0; x < vars; ++x) {
    if (comp[2 * x] == comp[2 * x + 1]) return std::nullopt;
    // Tarjan numbers sinks first; take the literal nearer the sink side.
    values[x] = comp[2 * x] < comp[2 * x + 1];
  }
  if (!satisfies(inst, values)) {
    throw std::logic_error("2-SAT assignment failed verification");
  }
  return values;
}

std::optional<TwoColoring> two_color(const VoteGraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) {
      throw std::out_of_range("bad graph edge");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  TwoColoring out;
  for (std::size_t x = 0; x < n; ++x) {
    (color[x] == 0 ? out.first : out.second).push_back(x);
  }
  for (const auto& e : g.edges) {
    if (color[e.u] == color[e.v]) {
      throw std::logic_error("2-coloring failed verification");
    }
  }
  return out;
}

}  // namespace prefsplit
