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

#include "prefsplit/profile.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace prefsplit {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(Trim(s.substr(start)));
      return out;
    }
    out.push_back(Trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

std::string LineTag(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

}  // namespace

bool IsValidCandidateName(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return ch == '>' || ch == ',' ||
           std::isspace(static_cast<unsigned char>(ch));
  });
}

std::vector<std::string> DefaultCandidateNames(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (count <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("c" + std::to_string(i + 1));
    }
  }
  return names;
}

Profile::Profile(std::vector<std::string> names, std::vector<Ranking> votes)
    : names_(std::move(names)), votes_(std::move(votes)) {
  const std::size_t m = names_.size();
  if (m == 0) {
    throw Error(ErrorCode::kEmptyCandidateSet, "profile needs a candidate");
  }
  std::unordered_map<std::string_view, Candidate> seen;
  for (std::size_t c = 0; c < m; ++c) {
    if (!IsValidCandidateName(names_[c])) {
      throw Error(ErrorCode::kMalformedLine,
                  "invalid candidate name '" + names_[c] + "'");
    }
    if (!seen.emplace(names_[c], static_cast<Candidate>(c)).second) {
      throw Error(ErrorCode::kDuplicateCandidate, names_[c]);
    }
  }
  positions_.assign(votes_.size() * m, m);
  for (std::size_t v = 0; v < votes_.size(); ++v) {
    const Ranking& r = votes_[v];
    if (r.size() != m) {
      throw Error(ErrorCode::kNotAPermutation,
                  "vote " + std::to_string(v + 1) + " ranks " +
                      std::to_string(r.size()) + " of " + std::to_string(m) +
                      " candidates");
    }
    for (std::size_t pos = 0; pos < m; ++pos) {
      Candidate c = r[pos];
      if (c < 0 || static_cast<std::size_t>(c) >= m) {
        throw Error(ErrorCode::kUnknownCandidate,
                    "candidate id " + std::to_string(c));
      }
      std::size_t& slot = positions_[v * m + static_cast<std::size_t>(c)];
      if (slot != m) {
        throw Error(ErrorCode::kNotAPermutation,
                    "vote " + std::to_string(v + 1) + " repeats " +
                        names_[static_cast<std::size_t>(c)]);
      }
      slot = pos;
    }
  }
}

Profile Profile::WithDefaultNames(std::size_t candidate_count,
                                  std::vector<Ranking> votes) {
  return Profile(DefaultCandidateNames(candidate_count), std::move(votes));
}

std::optional<Candidate> Profile::find_candidate(std::string_view name) const {
  for (std::size_t c = 0; c < names_.size(); ++c) {
    if (names_[c] == name) return static_cast<Candidate>(c);
  }
  return std::nullopt;
}

Profile parse_profile(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::map<std::string, Candidate, std::less<>> ids;
  std::vector<Ranking> votes;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("candidates:")) {
      if (names) {
        throw Error(ErrorCode::kMalformedLine,
                    LineTag(line_no) + "second candidates line");
      }
      names.emplace();
      for (std::string_view tok : Split(line.substr(11), ',')) {
        if (!IsValidCandidateName(tok)) {
          throw Error(ErrorCode::kMalformedLine,
                      LineTag(line_no) + "bad candidate name '" +
                          std::string(tok) + "'");
        }
        auto [it, inserted] = ids.emplace(
            std::string(tok), static_cast<Candidate>(names->size()));
        if (!inserted) {
          throw Error(ErrorCode::kDuplicateCandidate,
                      LineTag(line_no) + std::string(tok));
        }
        names->emplace_back(tok);
      }
    } else if (line.starts_with("vote:")) {
      if (!names) {
        throw Error(ErrorCode::kMalformedLine,
                    LineTag(line_no) + "vote before candidates line");
      }
      Ranking r;
      std::vector<bool> used(names->size(), false);
      for (std::string_view tok : Split(line.substr(5), '>')) {
        auto it = ids.find(tok);
        if (it == ids.end()) {
          throw Error(ErrorCode::kUnknownCandidate,
                      LineTag(line_no) + "'" + std::string(tok) + "'");
        }
        if (used[static_cast<std::size_t>(it->second)]) {
          throw Error(ErrorCode::kNotAPermutation,
                      LineTag(line_no) + "repeated '" + std::string(tok) + "'");
        }
        used[static_cast<std::size_t>(it->second)] = true;
        r.push_back(it->second);
      }
      if (r.size() != names->size()) {
        throw Error(ErrorCode::kNotAPermutation,
                    LineTag(line_no) + "incomplete ranking");
      }
      votes.push_back(std::move(r));
    } else {
      throw Error(ErrorCode::kMalformedLine,
                  LineTag(line_no) + "unknown directive '" +
                      std::string(line) + "'");
    }
  }
  if (!names) {
    throw Error(ErrorCode::kMalformedLine, "missing candidates line");
  }
  return Profile(std::move(*names), std::move(votes));
}

std::string emit_profile(const Profile& p) {
  std::string out = "candidates: ";
  for (std::size_t c = 0; c < p.candidate_count(); ++c) {
    if (c > 0) out += ',';
    out += p.names()[c];
  }
  out += '\n';
  for (const Ranking& r : p.votes()) {
    out += "vote: ";
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) out += '>';
      out += p.name(r[i]);
    }
    out += '\n';
  }
  return out;
}

Profile restrict(const Profile& p, std::span<const Candidate> keep) {
  const std::size_t m = p.candidate_count();
  if (keep.empty()) {
    throw Error(ErrorCode::kEmptyCandidateSet, "restriction to nothing");
  }
  std::vector<int> new_id(m, -1);
  for (Candidate c : keep) {
    if (c < 0 || static_cast<std::size_t>(c) >= m) {
      throw Error(ErrorCode::kUnknownCandidate,
                  "candidate id " + std::to_string(c));
    }
    new_id[static_cast<std::size_t>(c)] = 0;
  }
  std::vector<std::string> names;
  for (std::size_t c = 0; c < m; ++c) {
    if (new_id[c] == 0) {
      new_id[c] = static_cast<int>(names.size());
      names.push_back(p.names()[c]);
    }
  }
  std::vector<Ranking> votes;
  votes.reserve(p.vote_count());
  for (const Ranking& r : p.votes()) {
    Ranking out;
    out.reserve(names.size());
    for (Candidate c : r) {
      if (new_id[static_cast<std::size_t>(c)] >= 0) {
        out.push_back(new_id[static_cast<std::size_t>(c)]);
      }
    }
    votes.push_back(std::move(out));
  }
  return Profile(std::move(names), std::move(votes));
}

Profile select_votes(const Profile& p, std::span<const std::size_t> indices) {
  std::vector<Ranking> votes;
  votes.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= p.vote_count()) {
      throw Error(ErrorCode::kBadIndex, "vote index " + std::to_string(i));
    }
    votes.push_back(p.vote(i));
  }
  return Profile(p.names(), std::move(votes));
}

DedupMap dedupe(const Profile& p) {
  std::map<Ranking, std::size_t> first;
  std::vector<Ranking> reps;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < p.vote_count(); ++i) {
    auto [it, inserted] = first.emplace(p.vote(i), reps.size());
    if (inserted) {
      reps.push_back(p.vote(i));
      groups.emplace_back();
    }
    groups[it->second].push_back(i);
  }
  return DedupMap{Profile(p.names(), std::move(reps)), std::move(groups)};
}

std::vector<std::size_t> expand_indices(const DedupMap& map,
                                        std::span<const std::size_t> reps) {
  std::vector<std::size_t> out;
  for (std::size_t r : reps) {
    const auto& g = map.groups.at(r);
    out.insert(out.end(), g.begin(), g.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prefsplit
