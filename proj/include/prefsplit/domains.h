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

#ifndef PREFSPLIT_DOMAINS_H_
#define PREFSPLIT_DOMAINS_H_

#include <array>
#include <optional>
#include <string_view>

#include "prefsplit/minors.h"
#include "prefsplit/profile.h"

namespace prefsplit {

enum class DomainId { kSP, kGS, kCatGS, kBR, kMR, kWR, kVR };

inline constexpr std::array<DomainId, 7> kAllDomains = {
    DomainId::kSP, DomainId::kGS, DomainId::kCatGS, DomainId::kBR,
    DomainId::kMR, DomainId::kWR, DomainId::kVR};

// Lower-case CLI name: sp, gs, catgs, br, mr, wr, vr.
std::string_view domain_name(DomainId d);
// Case-insensitive inverse of domain_name.
std::optional<DomainId> parse_domain(std::string_view name);

// Forbidden-minor catalog entry. Returned by reference to a static table.
const DomainSpec& domain_spec(DomainId d);

// nullopt iff p is in the domain; otherwise the first forbidden minor.
std::optional<MinorWitness> is_member(const Profile& p, DomainId d);

// Membership of the subprofile made of `votes` (over all candidates).
// Throws Error(kBadIndex) for out-of-range indices.
std::optional<MinorWitness> is_member_subset(const Profile& p, DomainId d,
                                             std::span<const std::size_t> votes);

}  // namespace prefsplit

#endif  // PREFSPLIT_DOMAINS_H_
