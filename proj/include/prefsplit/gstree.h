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

// Explanatory structures for group-separable profiles: ordered binary
// decision trees, and caterpillar orders for the caterpillar subdomain.

#ifndef PREFSPLIT_GSTREE_H_
#define PREFSPLIT_GSTREE_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prefsplit/error.h"
#include "prefsplit/minors.h"
#include "prefsplit/profile.h"

namespace prefsplit {

class OrderedBinaryTree {
 public:
  struct Node {
    Candidate leaf = -1;  // >= 0 for leaves
    int left = -1;
    int right = -1;

    bool is_leaf() const { return leaf >= 0; }
  };

  static OrderedBinaryTree Leaf(Candidate c);
  static OrderedBinaryTree Join(const OrderedBinaryTree& left,
                                const OrderedBinaryTree& right);

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  // Leaf labels, left to right.
  std::vector<Candidate> leaves() const;

  // Nested parentheses, left child first: "((a,b),(c,d))".
  std::string to_string(const Profile& p) const;

 private:
  int Append(const OrderedBinaryTree& sub);

  std::vector<Node> nodes_;
  int root_ = -1;
};

// Inverse of OrderedBinaryTree::to_string. Throws kMalformedLine or
// kUnknownCandidate.
OrderedBinaryTree parse_tree(std::string_view text, const Profile& p);

class NotGroupSeparable : public Error {
 public:
  explicit NotGroupSeparable(std::vector<Candidate> failing);
  // Candidate set of the recursion node where no split exists.
  const std::vector<Candidate>& failing_candidates() const { return failing_; }

 private:
  std::vector<Candidate> failing_;
};

// Splits off the shortest prefix of the first vote that every vote ranks as
// a block at its top or bottom, then recurses on both sides. Throws
// NotGroupSeparable when some node has no such prefix.
OrderedBinaryTree build_gs_tree(const Profile& p);

// Throws Error(kLabelMismatch) unless the leaves are exactly the candidates.
bool check_t_consistent(const Profile& p, const OrderedBinaryTree& t);

struct CaterpillarOrder {
  std::vector<Candidate> order;

  friend bool operator==(const CaterpillarOrder&,
                         const CaterpillarOrder&) = default;
};

std::string format_caterpillar(const Profile& p, const CaterpillarOrder& c);

// Repeatedly removes the smallest-id candidate that is first or last in
// every remaining vote. On failure returns a 2-minor or one of the four
// caterpillar 2x4 patterns (witness source refers to the catgs catalog
// entry). Requires m >= 2 (kPreconditionViolated otherwise).
std::variant<CaterpillarOrder, MinorWitness> recognize_caterpillar(
    const Profile& p);

// Every c_i is above all of c_{i+1..m} or below all of them, in every vote.
// Throws Error(kLabelMismatch) unless the order is a permutation of the
// candidates.
bool verify_caterpillar(const Profile& p, const CaterpillarOrder& order);

}  // namespace prefsplit

#endif  // PREFSPLIT_GSTREE_H_
