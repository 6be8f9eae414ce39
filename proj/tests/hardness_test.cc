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

#include <gtest/gtest.h>

#include "prefsplit/domains.h"
#include "test_util.h"

namespace prefsplit {
namespace {

Graph Make(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph FromMask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

TEST(GraphTest, ParseAndEmit) {
  const Graph g = parse_graph("# a path\nvertices: 3\nedge: 1 0\nedge: 1 2\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(emit_graph(g), "vertices: 3\nedge: 0 1\nedge: 1 2\n");
  EXPECT_EQ(parse_graph(emit_graph(g)), g);
  EXPECT_EQ(emit_graph(parse_graph("vertices: 0")), "vertices: 0\n");
}

TEST(GraphTest, Errors) {
  auto code = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << text;
    return ErrorCode::kBadParams;
  };
  EXPECT_EQ(code("edge: 0 1"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code("vertices: 2\nedge: 0"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code("vertices: 2\nedge: 0 x"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code("vertices: 2\nvertex: 0 1"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code("vertices: 2\nedge: 0 2"), ErrorCode::kBadIndex);
  EXPECT_EQ(code("vertices: 2\nedge: 1 1"), ErrorCode::kBadIndex);
  EXPECT_EQ(code(""), ErrorCode::kMalformedLine);
}

TEST(AugmentGraphTest, Examples) {
  const Graph g = augment_graph(Graph(2), 3);
  EXPECT_EQ(g.vertex_count(), 17u);
  EXPECT_EQ(g.edge_count(), 60u);
  EXPECT_EQ(augment_graph(Graph(1), 1), Complete(4));
  EXPECT_THROW(augment_graph(Graph(1), 0), Error);
}

TEST(AugmentGraphTest, PreservesCliquePartitionability) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = FromMask(n, mask);
      for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(clique_kpartition(g, k).has_value(),
                  clique_kpartition(augment_graph(g, k), k).has_value());
      }
    }
  }
}

TEST(CliqueKPartitionTest, Examples) {
  const auto k3 = clique_kpartition(Complete(3), 1);
  ASSERT_TRUE(k3.has_value());
  EXPECT_EQ(k3->assignment, (std::vector<int>{0, 0, 0}));
  EXPECT_FALSE(clique_kpartition(Graph(4), 3));
  const Graph c5 = Make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto cp = clique_kpartition(c5, 3);
  ASSERT_TRUE(cp.has_value());
  EXPECT_TRUE(verify_clique_partition(c5, *cp));
  EXPECT_FALSE(clique_kpartition(c5, 2));
  EXPECT_THROW(clique_kpartition(c5, 0), Error);
}

TEST(CliqueKPartitionTest, AgreesWithComplementColoring) {
  // A clique k-partition of g is a proper k-coloring of its complement.
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = FromMask(n, mask);
      for (int k = 1; k <= 3; ++k) {
        bool colorable = false;
        std::vector<int> color(n, 0);
        while (!colorable) {
          bool ok = true;
          for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = u + 1; v < n && ok; ++v) {
              ok = g.has_edge(u, v) || color[u] != color[v];
            }
          }
          colorable = ok;
          std::size_t i = 0;
          while (i < n && ++color[i] == k) color[i++] = 0;
          if (i == n) break;
        }
        const auto cp = clique_kpartition(g, k);
        EXPECT_EQ(cp.has_value(), colorable);
        if (cp) EXPECT_TRUE(verify_clique_partition(g, *cp));
      }
    }
  }
}

TEST(ReduceToProfileTest, Sizes) {
  const ReductionOutput two = reduce_to_profile(Graph(2), 3);
  EXPECT_EQ(two.profile.vote_count(), 17u);
  EXPECT_EQ(two.profile.candidate_count(), 228u);
  EXPECT_EQ(two.triples.size(), 76u);
  EXPECT_EQ(two.profile.name(0), "a_0_1");
  EXPECT_EQ(two.profile.name(2), "c_0_1");

  const ReductionOutput k2 = reduce_to_profile(Complete(2), 3);
  EXPECT_EQ(k2.profile.candidate_count(), 225u);

  for (std::size_t n = 0; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const Graph g = FromMask(n, (n * 7 + 3) % (1u << (n * (n - 1) / 2 + 0)));
      if (k == 1 && g.edge_count() == n * (n - 1) / 2) continue;
      const ReductionOutput r = reduce_to_profile(g, k);
      const std::size_t verts = n + static_cast<std::size_t>(k * (k + 2));
      EXPECT_EQ(r.profile.vote_count(), verts);
      EXPECT_EQ(r.profile.candidate_count(),
                3 * (verts * (verts - 1) / 2 - r.augmented.edge_count()));
    }
  }
  EXPECT_THROW(reduce_to_profile(Graph(1), 1), Error);  // complete G'
  EXPECT_THROW(reduce_to_profile(Graph(1), 0), Error);
}

TEST(ReduceToProfileTest, TripleOrders) {
  const ReductionOutput r = reduce_to_profile(Graph(2), 3);
  for (const NonEdgeTriple& t : r.triples) {
    const auto [a, b, c] = t.abc;
    for (std::size_t l = 0; l < r.profile.vote_count(); ++l) {
      auto above = [&](Candidate x, Candidate y) {
        return r.profile.position(l, x) < r.profile.position(l, y);
      };
      if (l == t.u) {
        EXPECT_TRUE(above(a, b) && above(b, c));
      } else if (l == t.v) {
        EXPECT_TRUE(above(b, c) && above(c, a));
      } else {
        EXPECT_TRUE(above(c, a) && above(a, b));
      }
    }
  }
}

TEST(MapCliquePartitionTest, ForwardDirectionOnSmallGraphs) {
  const std::vector<DomainId> domains = {DomainId::kVR, DomainId::kBR,
                                         DomainId::kMR, DomainId::kWR,
                                         DomainId::kGS};
  int checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = FromMask(n, mask);
      const int k = 3;
      const ReductionOutput r = reduce_to_profile(g, k);
      const auto cp = clique_kpartition(r.augmented, k);
      if (!cp) continue;
      const KPartition part = map_clique_partition_to_votes(r, *cp);
      for (const auto& group : part.groups()) {
        for (DomainId d : domains) {
          EXPECT_FALSE(is_member_subset(r.profile, d, group))
              << emit_graph(g) << domain_name(d);
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(MapCliquePartitionTest, SingletonsAndSizeMismatch) {
  const ReductionOutput r = reduce_to_profile(Graph(1), 2);
  CliquePartition bad{2, {0, 1}};
  try {
    map_clique_partition_to_votes(r, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
  }
  for (std::size_t v = 0; v < r.profile.vote_count(); ++v) {
    const std::vector<std::size_t> one{v};
    EXPECT_FALSE(is_member_subset(r.profile, DomainId::kVR, one));
  }
}

// Two vertices matched in the induced subgraph share a clique, yet their
// votes contain a forbidden pattern for caterpillar group-separability.
TEST(MapCliquePartitionTest, CliqueClassesNeedNotBeCaterpillar) {
  const Graph g = Make(4, {{0, 1}, {2, 3}});
  const ReductionOutput r = reduce_to_profile(g, 3);
  const auto cp = clique_kpartition(r.augmented, 3);
  ASSERT_TRUE(cp.has_value());
  ASSERT_EQ(cp->assignment[0], cp->assignment[1]);
  const std::vector<std::size_t> pair{0, 1};
  const auto w = is_member_subset(r.profile, DomainId::kCatGS, pair);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->source.j, 0);
  EXPECT_FALSE(is_member_subset(r.profile, DomainId::kGS, pair));
}

}  // namespace
}  // namespace prefsplit
