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

#include "prefsplit/hardness.h"

#include <charconv>
#include <sstream>

#include "prefsplit/error.h"

namespace prefsplit {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), adj_(vertex_count * vertex_count, 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) {
    throw Error(ErrorCode::kBadIndex, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorCode::kBadIndex, "self-loop");
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++edge_count_;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::size_t> ParseNumbers(std::string_view rest,
                                      std::size_t line_no) {
  std::vector<std::size_t> out;
  while (true) {
    rest = Trim(rest);
    if (rest.empty()) break;
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() ||
        (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t')) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected integers");
    }
    out.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": missing ':'");
    }
    const std::string_view key = Trim(line.substr(0, colon));
    const auto values = ParseNumbers(line.substr(colon + 1), line_no);
    if (key == "vertices" && values.size() == 1 && !g) {
      g.emplace(values[0]);
    } else if (key == "edge" && values.size() == 2 && g) {
      g->add_edge(values[0], values[1]);
    } else {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": unexpected '" +
                      std::string(line) + "'");
    }
  }
  if (!g) throw Error(ErrorCode::kMalformedLine, "missing 'vertices:' line");
  return *g;
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "edge: " << u << " " << v << "\n";
  return out.str();
}

bool verify_clique_partition(const Graph& g, const CliquePartition& cp) {
  const std::size_t n = g.vertex_count();
  if (cp.k < 1 || cp.assignment.size() != n) return false;
  for (std::size_t u = 0; u < n; ++u) {
    if (cp.assignment[u] < 0 || cp.assignment[u] >= cp.k) return false;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (cp.assignment[u] == cp.assignment[v] && !g.has_edge(u, v)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int k)
      : g_(g),
        k_(static_cast<std::size_t>(k)),
        classes_(k_),
        assignment_(g.vertex_count(), -1) {}

  bool Place(std::size_t v) {
    if (v == g_.vertex_count()) return true;
    // Each empty class is interchangeable, so only the first one is tried.
    bool tried_empty = false;
    for (std::size_t c = 0; c < k_; ++c) {
      std::vector<std::size_t>& members = classes_[c];
      if (members.empty()) {
        if (tried_empty) continue;
        tried_empty = true;
      }
      bool fits = true;
      for (std::size_t w : members) {
        if (!g_.has_edge(v, w)) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      members.push_back(v);
      assignment_[v] = static_cast<int>(c);
      if (Place(v + 1)) return true;
      members.pop_back();
      assignment_[v] = -1;
    }
    return false;
  }

  const std::vector<int>& assignment() const { return assignment_; }

 private:
  const Graph& g_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<int> assignment_;
};

}  // namespace

std::optional<CliquePartition> clique_kpartition(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kBadK, "k must be at least 1");
  CliqueSearch search(g, k);
  if (!search.Place(0)) return std::nullopt;
  return CliquePartition{k, search.assignment()};
}

Graph augment_graph(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kBadK, "k must be at least 1");
  const std::size_t n = g.vertex_count();
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t size = kk + 2;
  Graph out(n + kk * size);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (std::size_t c = 0; c < kk; ++c) {
    const std::size_t base = n + c * size;
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = x + 1; y < size; ++y) {
        out.add_edge(base + x, base + y);
      }
      for (std::size_t u = 0; u < n; ++u) out.add_edge(base + x, u);
    }
  }
  return out;
}

ReductionOutput reduce_to_profile(const Graph& g, int k) {
  Graph augmented = augment_graph(g, k);
  const std::size_t n = augmented.vertex_count();

  std::vector<NonEdgeTriple> triples;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (augmented.has_edge(i, j)) continue;
      const auto base = static_cast<Candidate>(3 * triples.size());
      triples.push_back({i, j, {base, base + 1, base + 2}});
      const std::string suffix =
          "_" + std::to_string(i) + "_" + std::to_string(j);
      for (const char* prefix : {"a", "b", "c"}) names.push_back(prefix + suffix);
    }
  }
  if (triples.empty()) {
    throw Error(ErrorCode::kEmptyCandidateSet,
                "augmented graph is complete; no candidates");
  }

  std::vector<Ranking> votes(n);
  for (std::size_t l = 0; l < n; ++l) {
    Ranking& r = votes[l];
    r.reserve(names.size());
    for (const NonEdgeTriple& t : triples) {
      const auto [a, b, c] = t.abc;
      if (l == t.u) {
        r.insert(r.end(), {a, b, c});
      } else if (l == t.v) {
        r.insert(r.end(), {b, c, a});
      } else {
        r.insert(r.end(), {c, a, b});
      }
    }
  }
  return ReductionOutput{std::move(augmented),
                         Profile(std::move(names), std::move(votes)),
                         std::move(triples)};
}

KPartition map_clique_partition_to_votes(const ReductionOutput& r,
                                         const CliquePartition& cp) {
  if (cp.assignment.size() != r.augmented.vertex_count() ||
      cp.assignment.size() != r.profile.vote_count()) {
    throw Error(ErrorCode::kSizeMismatch,
                "clique partition covers " +
                    std::to_string(cp.assignment.size()) + " vertices, profile has " +
                    std::to_string(r.profile.vote_count()) + " votes");
  }
  return KPartition{cp.k, cp.assignment};
}

}  // namespace prefsplit
