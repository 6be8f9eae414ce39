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

#include "prefsplit/domains.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace prefsplit {

namespace {

struct Catalog {
  std::array<DomainSpec, 7> specs;

  Catalog() {
    // Single-peaked: worst-restricted, no {a,d}>b>c / {c,d}>b>a.
    specs[0] = {"sp", {3}, expand_braced_pattern({"{a,d}>b>c", "{c,d}>b>a"})};
    // Group-separable: medium-restricted, no a>b>c>d / b>d>a>c.
    specs[1] = {"gs", {2}, expand_braced_pattern({"a>b>c>d", "b>d>a>c"})};
    // Caterpillar group-separable: the GS pattern with the middle pair of
    // either row in any order.
    specs[2] = {"catgs", {2},
                expand_braced_pattern({"a>{b,c}>d", "b>{a,d}>c"})};
    specs[3] = {"br", {1}, {}};
    specs[4] = {"mr", {2}, {}};
    specs[5] = {"wr", {3}, {}};
    specs[6] = {"vr", {1, 2, 3}, {}};
  }
};

const Catalog& GetCatalog() {
  static const Catalog catalog;
  return catalog;
}

}  // namespace

std::string_view domain_name(DomainId d) {
  return domain_spec(d).name;
}

std::optional<DomainId> parse_domain(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  for (DomainId d : kAllDomains) {
    if (domain_spec(d).name == lower) return d;
  }
  return std::nullopt;
}

const DomainSpec& domain_spec(DomainId d) {
  return GetCatalog().specs[static_cast<std::size_t>(d)];
}

std::optional<MinorWitness> is_member(const Profile& p, DomainId d) {
  MinorIndex index(p, domain_spec(d));
  return index.find_in(full_vote_set(p.vote_count()));
}

std::optional<MinorWitness> is_member_subset(
    const Profile& p, DomainId d, std::span<const std::size_t> votes) {
  VoteSet subset = make_vote_set(p.vote_count(), votes);
  MinorIndex index(p, domain_spec(d));
  return index.find_in(subset);
}

}  // namespace prefsplit
