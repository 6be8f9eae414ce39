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

#include "prefsplit/gstree.h"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "prefsplit/domains.h"

namespace prefsplit {

// ---------------------------------------------------------------------------
// OrderedBinaryTree

OrderedBinaryTree OrderedBinaryTree::Leaf(Candidate c) {
  OrderedBinaryTree t;
  t.nodes_.push_back(Node{c, -1, -1});
  t.root_ = 0;
  return t;
}

int OrderedBinaryTree::Append(const OrderedBinaryTree& sub) {
  const int offset = static_cast<int>(nodes_.size());
  for (Node node : sub.nodes_) {
    if (!node.is_leaf()) {
      node.left += offset;
      node.right += offset;
    }
    nodes_.push_back(node);
  }
  return sub.root_ + offset;
}

OrderedBinaryTree OrderedBinaryTree::Join(const OrderedBinaryTree& left,
                                          const OrderedBinaryTree& right) {
  OrderedBinaryTree t;
  t.nodes_.push_back(Node{});
  t.root_ = 0;
  const int l = t.Append(left);
  const int r = t.Append(right);
  t.nodes_[0].left = l;
  t.nodes_[0].right = r;
  return t;
}

std::vector<Candidate> OrderedBinaryTree::leaves() const {
  std::vector<Candidate> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (id < 0) continue;
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      out.push_back(node.leaf);
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }
  return out;
}

std::string OrderedBinaryTree::to_string(const Profile& p) const {
  std::string out;
  auto emit = [&](auto&& self, int id) -> void {
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    if (node.is_leaf()) {
      out += p.name(node.leaf);
      return;
    }
    out += '(';
    self(self, node.left);
    out += ',';
    self(self, node.right);
    out += ')';
  };
  if (root_ >= 0) emit(emit, root_);
  return out;
}

OrderedBinaryTree parse_tree(std::string_view text, const Profile& p) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::kMalformedLine,
                 "tree at offset " + std::to_string(pos) + ": " + what);
  };
  auto parse = [&](auto&& self) -> OrderedBinaryTree {
    if (pos >= text.size()) throw fail("unexpected end");
    if (text[pos] == '(') {
      ++pos;
      OrderedBinaryTree left = self(self);
      if (pos >= text.size() || text[pos] != ',') throw fail("expected ','");
      ++pos;
      OrderedBinaryTree right = self(self);
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
      return OrderedBinaryTree::Join(left, right);
    }
    std::size_t end = text.find_first_of(",()", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view name = text.substr(pos, end - pos);
    auto c = p.find_candidate(name);
    if (!c) {
      throw Error(ErrorCode::kUnknownCandidate, "'" + std::string(name) + "'");
    }
    pos = end;
    return OrderedBinaryTree::Leaf(*c);
  };
  OrderedBinaryTree t = parse(parse);
  if (pos != text.size()) throw fail("trailing input");
  return t;
}

// ---------------------------------------------------------------------------
// Tree construction

NotGroupSeparable::NotGroupSeparable(std::vector<Candidate> failing)
    : Error(ErrorCode::kNotGroupSeparable,
            "no block split for a set of " + std::to_string(failing.size()) +
                " candidates"),
      failing_(std::move(failing)) {}

namespace {

OrderedBinaryTree BuildNode(const Profile& p, std::vector<Candidate> cands) {
  if (cands.size() == 1) return OrderedBinaryTree::Leaf(cands[0]);
  const std::size_t n = p.vote_count();
  const std::size_t size = cands.size();

  // ranks[v][k]: rank, within `cands`, of the k-th candidate of the
  // reference order (vote 0 restricted to cands; id order with no votes).
  auto by_position = [&](std::size_t v) {
    std::vector<Candidate> sorted = cands;
    std::sort(sorted.begin(), sorted.end(), [&](Candidate x, Candidate y) {
      return p.position(v, x) < p.position(v, y);
    });
    return sorted;
  };
  std::vector<Candidate> reference = n > 0 ? by_position(0) : cands;
  if (n == 0) std::sort(reference.begin(), reference.end());

  std::vector<std::vector<std::size_t>> ranks(n, std::vector<std::size_t>(size));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Candidate> sorted = by_position(v);
    std::vector<std::size_t> rank_of(p.candidate_count());
    for (std::size_t r = 0; r < size; ++r) {
      rank_of[static_cast<std::size_t>(sorted[r])] = r;
    }
    for (std::size_t k = 0; k < size; ++k) {
      ranks[v][k] = rank_of[static_cast<std::size_t>(reference[k])];
    }
  }

  std::vector<std::size_t> lo(n, size);
  std::vector<std::size_t> hi(n, 0);
  for (std::size_t k = 1; k < size; ++k) {
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v) {
      lo[v] = std::min(lo[v], ranks[v][k - 1]);
      hi[v] = std::max(hi[v], ranks[v][k - 1]);
      const bool top = hi[v] < k;
      const bool bottom = lo[v] >= size - k;
      ok = ok && (top || bottom);
    }
    if (!ok) continue;
    std::vector<Candidate> block(reference.begin(),
                                 reference.begin() + static_cast<long>(k));
    std::vector<Candidate> rest(reference.begin() + static_cast<long>(k),
                                reference.end());
    return OrderedBinaryTree::Join(BuildNode(p, std::move(block)),
                                   BuildNode(p, std::move(rest)));
  }
  std::sort(cands.begin(), cands.end());
  throw NotGroupSeparable(std::move(cands));
}

void RequireLabels(const Profile& p, std::vector<Candidate> labels) {
  std::sort(labels.begin(), labels.end());
  bool ok = labels.size() == p.candidate_count();
  for (std::size_t k = 0; ok && k < labels.size(); ++k) {
    ok = labels[k] == static_cast<Candidate>(k);
  }
  if (!ok) {
    throw Error(ErrorCode::kLabelMismatch,
                "labels are not the profile's candidate set");
  }
}

}  // namespace

OrderedBinaryTree build_gs_tree(const Profile& p) {
  std::vector<Candidate> all(p.candidate_count());
  std::iota(all.begin(), all.end(), 0);
  return BuildNode(p, std::move(all));
}

bool check_t_consistent(const Profile& p, const OrderedBinaryTree& t) {
  RequireLabels(p, t.leaves());
  const auto& nodes = t.nodes();
  std::vector<std::size_t> lo(nodes.size());
  std::vector<std::size_t> hi(nodes.size());
  for (std::size_t v = 0; v < p.vote_count(); ++v) {
    bool ok = true;
    auto walk = [&](auto&& self, int id) -> void {
      const auto& node = nodes[static_cast<std::size_t>(id)];
      const auto i = static_cast<std::size_t>(id);
      if (node.is_leaf()) {
        lo[i] = hi[i] = p.position(v, node.leaf);
        return;
      }
      self(self, node.left);
      self(self, node.right);
      const auto l = static_cast<std::size_t>(node.left);
      const auto r = static_cast<std::size_t>(node.right);
      if (!(hi[l] < lo[r] || hi[r] < lo[l])) ok = false;
      lo[i] = std::min(lo[l], lo[r]);
      hi[i] = std::max(hi[l], hi[r]);
    };
    walk(walk, t.root());
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Caterpillars

std::string format_caterpillar(const Profile& p, const CaterpillarOrder& c) {
  std::string out;
  for (std::size_t k = 0; k < c.order.size(); ++k) {
    if (k > 0) out += ',';
    out += p.name(c.order[k]);
  }
  return out;
}

namespace {

// Binds two votes and four candidates to one of the catalog's caterpillar
// 2x4 patterns.
MinorWitness BindCaterpillarPattern(const Profile& p, std::size_t u,
                                    std::size_t v,
                                    std::array<Candidate, 4> cands) {
  const DomainSpec& spec = domain_spec(DomainId::kCatGS);
  std::sort(cands.begin(), cands.end());
  for (std::size_t k = 0; k < spec.explicit_patterns.size(); ++k) {
    for (auto rows : {std::pair{u, v}, std::pair{v, u}}) {
      std::array<Candidate, 4> perm = cands;
      do {
        MinorWitness w{{rows.first, rows.second},
                       {perm.begin(), perm.end()},
                       {0, static_cast<int>(k)}};
        if (realizes_pattern(p, w, spec.explicit_patterns[k])) return w;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  throw Error(ErrorCode::kPreconditionViolated,
              "extracted pair does not realize a caterpillar pattern");
}

}  // namespace

std::variant<CaterpillarOrder, MinorWitness> recognize_caterpillar(
    const Profile& p) {
  const std::size_t m = p.candidate_count();
  const std::size_t n = p.vote_count();
  if (m < 2) {
    throw Error(ErrorCode::kPreconditionViolated,
                "caterpillar recognition needs two candidates");
  }
  std::vector<bool> alive(m, true);
  // top[v] / bottom[v]: index into vote v of its highest / lowest alive
  // candidate.
  std::vector<std::size_t> top(n, 0);
  std::vector<std::size_t> bottom(n, m - 1);
  auto top_of = [&](std::size_t v) { return p.vote(v)[top[v]]; };
  auto bottom_of = [&](std::size_t v) { return p.vote(v)[bottom[v]]; };
  auto polarizing = [&](std::size_t v, Candidate c) {
    return top_of(v) == c || bottom_of(v) == c;
  };

  CaterpillarOrder result;
  for (std::size_t step = 0; step + 2 < m; ++step) {
    std::optional<Candidate> pick;
    for (std::size_t c = 0; c < m && !pick; ++c) {
      if (!alive[c]) continue;
      bool all = true;
      for (std::size_t v = 0; v < n && all; ++v) {
        all = polarizing(v, static_cast<Candidate>(c));
      }
      if (all) pick = static_cast<Candidate>(c);
    }

    if (!pick) {
      // No candidate is polarizing everywhere, so n >= 2. Follow the
      // case analysis on polarizing pairs.
      auto pi = [&](std::size_t v) {
        return std::array<Candidate, 2>{top_of(v), bottom_of(v)};
      };
      auto in_pi = [&](std::size_t v, Candidate c) { return polarizing(v, c); };
      const std::size_t u = 0;
      const Candidate a = top_of(u);
      const Candidate b = bottom_of(u);
      std::size_t v = 0;
      while (in_pi(v, a)) ++v;
      if (!in_pi(v, b)) {
        auto pv = pi(v);
        return BindCaterpillarPattern(p, u, v, {a, b, pv[0], pv[1]});
      }
      const Candidate c = top_of(v) == b ? bottom_of(v) : top_of(v);
      std::size_t w = 0;
      while (in_pi(w, b)) ++w;
      if (in_pi(w, a) && in_pi(w, c)) {
        std::vector<std::size_t> votes{u, v, w};
        std::sort(votes.begin(), votes.end());
        std::vector<Candidate> triple{a, b, c};
        std::sort(triple.begin(), triple.end());
        return MinorWitness{std::move(votes), std::move(triple), {2, -1}};
      }
      auto pw = pi(w);
      if (!in_pi(w, a)) {
        return BindCaterpillarPattern(p, std::min(u, w), std::max(u, w),
                                      {a, b, pw[0], pw[1]});
      }
      return BindCaterpillarPattern(p, std::min(v, w), std::max(v, w),
                                    {b, c, pw[0], pw[1]});
    }

    result.order.push_back(*pick);
    alive[static_cast<std::size_t>(*pick)] = false;
    for (std::size_t v = 0; v < n; ++v) {
      while (!alive[static_cast<std::size_t>(p.vote(v)[top[v]])]) ++top[v];
      while (!alive[static_cast<std::size_t>(p.vote(v)[bottom[v]])]) {
        --bottom[v];
      }
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (alive[c]) result.order.push_back(static_cast<Candidate>(c));
  }
  return result;
}

bool verify_caterpillar(const Profile& p, const CaterpillarOrder& order) {
  RequireLabels(p, order.order);
  const std::size_t m = order.order.size();
  for (std::size_t v = 0; v < p.vote_count(); ++v) {
    std::size_t lo = p.position(v, order.order[m - 1]);
    std::size_t hi = lo;
    for (std::size_t i = m - 1; i-- > 0;) {
      const std::size_t pos = p.position(v, order.order[i]);
      if (pos > lo && pos < hi) return false;
      lo = std::min(lo, pos);
      hi = std::max(hi, pos);
    }
  }
  return true;
}

}  // namespace prefsplit
