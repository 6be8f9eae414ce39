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

#include "prefsplit/minors.h"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace prefsplit {

VoteSet make_vote_set(std::size_t n, std::span<const std::size_t> members) {
  VoteSet s(n);
  for (std::size_t i : members) {
    if (i >= n) {
      throw Error(ErrorCode::kBadIndex, "vote index " + std::to_string(i));
    }
    s.set(i);
  }
  return s;
}

VoteSet full_vote_set(std::size_t n) {
  VoteSet s(n);
  s.set();
  return s;
}

std::vector<std::size_t> members_of(const VoteSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VoteSet::npos; i = s.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Patterns

std::string MinorPattern::label() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += " / ";
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (k > 0) out += '>';
      out += static_cast<char>('a' + rows[r][k]);
    }
  }
  return out;
}

MinorPattern pattern_from_rows(const std::vector<std::string>& rows) {
  MinorPattern pat;
  for (const std::string& row : rows) {
    std::vector<int> slots;
    for (char ch : row) {
      if (ch == '>' || ch == ' ') continue;
      if (ch < 'a' || ch > 'z') {
        throw Error(ErrorCode::kMalformedLine, "pattern row '" + row + "'");
      }
      slots.push_back(ch - 'a');
    }
    std::vector<int> sorted = slots;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] != static_cast<int>(k)) {
        throw Error(ErrorCode::kMalformedLine,
                    "pattern row '" + row + "' is not a permutation");
      }
    }
    if (!pat.rows.empty() && slots.size() != pat.rows[0].size()) {
      throw Error(ErrorCode::kMalformedLine, "pattern rows differ in width");
    }
    pat.rows.push_back(std::move(slots));
  }
  if (pat.rows.empty()) {
    throw Error(ErrorCode::kMalformedLine, "empty pattern");
  }
  return pat;
}

std::vector<std::string> expand_braced_row(std::string_view row) {
  // Each group is a list of letters that may appear in any order.
  std::vector<std::vector<char>> groups;
  for (std::size_t i = 0; i < row.size(); ++i) {
    char ch = row[i];
    if (ch == '>' || ch == ' ') continue;
    if (ch == '{') {
      std::size_t close = row.find('}', i);
      if (close == std::string_view::npos) {
        throw Error(ErrorCode::kMalformedLine, "unclosed brace");
      }
      std::vector<char> group;
      for (char g : row.substr(i + 1, close - i - 1)) {
        if (g != ',' && g != ' ') group.push_back(g);
      }
      groups.push_back(std::move(group));
      i = close;
    } else {
      groups.push_back({ch});
    }
  }

  std::vector<std::string> out{""};
  for (const auto& group : groups) {
    std::vector<std::size_t> perm(group.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::string> orders;
    do {
      std::string piece;
      for (std::size_t k : perm) piece += group[k];
      orders.push_back(std::move(piece));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::string> next;
    for (const std::string& prefix : out) {
      for (const std::string& piece : orders) next.push_back(prefix + piece);
    }
    out = std::move(next);
  }
  for (std::string& s : out) {
    std::string spaced;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) spaced += '>';
      spaced += s[k];
    }
    s = std::move(spaced);
  }
  return out;
}

std::vector<MinorPattern> expand_braced_pattern(
    const std::vector<std::string>& braced_rows) {
  std::vector<std::vector<std::string>> combos{{}};
  for (const std::string& row : braced_rows) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : combos) {
      for (const std::string& concrete : expand_braced_row(row)) {
        auto extended = prefix;
        extended.push_back(concrete);
        next.push_back(std::move(extended));
      }
    }
    combos = std::move(next);
  }
  std::vector<MinorPattern> out;
  out.reserve(combos.size());
  for (const auto& rows : combos) out.push_back(pattern_from_rows(rows));
  return out;
}

bool DomainSpec::has_j(int j) const {
  return std::find(j_flags.begin(), j_flags.end(), j) != j_flags.end();
}

std::string describe_source(const DomainSpec& spec, const MinorSource& src) {
  if (src.j > 0) return std::to_string(src.j) + "-minor";
  if (src.pattern_index < 0 ||
      static_cast<std::size_t>(src.pattern_index) >=
          spec.explicit_patterns.size()) {
    return "unknown pattern";
  }
  const MinorPattern& pat =
      spec.explicit_patterns[static_cast<std::size_t>(src.pattern_index)];
  return std::to_string(pat.row_count()) + "x" +
         std::to_string(pat.col_count()) + " " + pat.label();
}

// ---------------------------------------------------------------------------
// Replay

namespace {

// Index into `triple` of the member at 1-based `position` of vote v's
// restriction to the triple.
int MemberAt(const Profile& p, std::size_t v,
             const std::array<Candidate, 3>& triple, int position) {
  std::array<std::size_t, 3> pos{p.position(v, triple[0]),
                                 p.position(v, triple[1]),
                                 p.position(v, triple[2])};
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return pos[x] < pos[y]; });
  return order[static_cast<std::size_t>(position - 1)];
}

bool DistinctCandidates(const Profile& p, std::span<const Candidate> cs) {
  std::vector<Candidate> sorted(cs.begin(), cs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  return std::all_of(sorted.begin(), sorted.end(), [&](Candidate c) {
    return c >= 0 && static_cast<std::size_t>(c) < p.candidate_count();
  });
}

bool DistinctVotes(const Profile& p, std::span<const std::size_t> vs) {
  std::vector<std::size_t> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  return std::all_of(sorted.begin(), sorted.end(),
                     [&](std::size_t v) { return v < p.vote_count(); });
}

}  // namespace

bool is_j_minor(const Profile& p, std::span<const std::size_t> votes,
                std::span<const Candidate> triple, int j) {
  if (votes.size() != 3 || triple.size() != 3 || j < 1 || j > 3) return false;
  if (!DistinctVotes(p, votes) || !DistinctCandidates(p, triple)) return false;
  std::array<Candidate, 3> t{triple[0], triple[1], triple[2]};
  std::array<bool, 3> seen{false, false, false};
  for (std::size_t v : votes) {
    int member = MemberAt(p, v, t, j);
    if (seen[static_cast<std::size_t>(member)]) return false;
    seen[static_cast<std::size_t>(member)] = true;
  }
  return true;
}

bool realizes_pattern(const Profile& p, const MinorWitness& w,
                      const MinorPattern& pat) {
  if (w.vote_indices.size() != pat.row_count() ||
      w.candidates.size() != pat.col_count()) {
    return false;
  }
  if (!DistinctVotes(p, w.vote_indices) ||
      !DistinctCandidates(p, w.candidates)) {
    return false;
  }
  for (std::size_t r = 0; r < pat.row_count(); ++r) {
    std::vector<int> slots(pat.col_count());
    std::iota(slots.begin(), slots.end(), 0);
    std::size_t v = w.vote_indices[r];
    std::sort(slots.begin(), slots.end(), [&](int x, int y) {
      return p.position(v, w.candidates[static_cast<std::size_t>(x)]) <
             p.position(v, w.candidates[static_cast<std::size_t>(y)]);
    });
    if (slots != pat.rows[r]) return false;
  }
  return true;
}

bool replay_witness(const Profile& p, const DomainSpec& spec,
                    const MinorWitness& w) {
  if (w.source.j > 0) {
    return spec.has_j(w.source.j) &&
           is_j_minor(p, w.vote_indices, w.candidates, w.source.j);
  }
  if (w.source.pattern_index < 0 ||
      static_cast<std::size_t>(w.source.pattern_index) >=
          spec.explicit_patterns.size()) {
    return false;
  }
  return realizes_pattern(
      p, w,
      spec.explicit_patterns[static_cast<std::size_t>(w.source.pattern_index)]);
}

// ---------------------------------------------------------------------------
// Triples

TripleSplit triple_split(const Profile& p, std::array<Candidate, 3> triple,
                         int position) {
  if (!DistinctCandidates(p, triple)) {
    throw Error(ErrorCode::kBadTriple, "triple must be 3 distinct candidates");
  }
  if (position < 1 || position > 3) {
    throw Error(ErrorCode::kPreconditionViolated,
                "position " + std::to_string(position));
  }
  TripleSplit split{triple, position, {}};
  for (std::size_t v = 0; v < p.vote_count(); ++v) {
    int member = MemberAt(p, v, triple, position);
    split.classes[static_cast<std::size_t>(member)].push_back(v);
  }
  return split;
}

std::vector<TripleClasses> dangerous_triples(const Profile& p,
                                             std::span<const int> positions) {
  const std::size_t n = p.vote_count();
  const std::size_t m = p.candidate_count();
  std::vector<TripleClasses> out;
  if (n < 3 || m < 3 || positions.empty()) return out;

  std::vector<int> sorted_positions(positions.begin(), positions.end());
  std::sort(sorted_positions.begin(), sorted_positions.end());
  const bool wants_middle = std::binary_search(
      sorted_positions.begin(), sorted_positions.end(), 2);

  // A pair is contested if two votes order it differently. A 1- or 3-minor
  // needs all three pairs of its triple contested; a 2-minor at least two.
  std::vector<char> contested(m * m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      const bool first = p.position(0, static_cast<Candidate>(x)) <
                         p.position(0, static_cast<Candidate>(y));
      for (std::size_t v = 1; v < n; ++v) {
        if ((p.position(v, static_cast<Candidate>(x)) <
             p.position(v, static_cast<Candidate>(y))) != first) {
          contested[x * m + y] = contested[y * m + x] = 1;
          break;
        }
      }
    }
  }

  // Every candidate triple with at least two contested pairs has a member
  // contested with both others, so it is reached from that member's
  // contested neighbours. Collected, sorted and deduplicated.
  std::vector<std::vector<Candidate>> neighbours(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (contested[x * m + y]) neighbours[x].push_back(static_cast<Candidate>(y));
    }
  }
  std::vector<std::array<Candidate, 3>> candidates;
  for (std::size_t x = 0; x < m; ++x) {
    const auto& nb = neighbours[x];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t k = i + 1; k < nb.size(); ++k) {
        std::array<Candidate, 3> t{static_cast<Candidate>(x), nb[i], nb[k]};
        std::sort(t.begin(), t.end());
        candidates.push_back(t);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<std::uint8_t> class_of(n);
  for (const std::array<Candidate, 3>& t : candidates) {
    const auto a = static_cast<std::size_t>(t[0]);
    const auto b = static_cast<std::size_t>(t[1]);
    const auto c = static_cast<std::size_t>(t[2]);
    const int pairs = contested[a * m + b] + contested[a * m + c] +
                      contested[b * m + c];
    if (pairs == 2 && !wants_middle) continue;
    for (int j : sorted_positions) {
      if (j != 2 && pairs < 3) continue;
      std::array<std::size_t, 3> counts{0, 0, 0};
      for (std::size_t v = 0; v < n; ++v) {
        class_of[v] = static_cast<std::uint8_t>(MemberAt(p, v, t, j));
        ++counts[class_of[v]];
      }
      if (counts[0] == 0 || counts[1] == 0 || counts[2] == 0) continue;
      TripleClasses entry{t, j, {VoteSet(n), VoteSet(n), VoteSet(n)},
                          class_of};
      for (std::size_t v = 0; v < n; ++v) entry.classes[class_of[v]].set(v);
      out.push_back(std::move(entry));
    }
  }
  return out;
}

std::optional<MinorWitness> find_j_minor(const Profile& p, int j) {
  if (j < 1 || j > 3) {
    throw Error(ErrorCode::kPreconditionViolated, "j must be 1, 2 or 3");
  }
  const int positions[] = {j};
  auto entries = dangerous_triples(p, positions);
  if (entries.empty()) return std::nullopt;
  const TripleClasses& e = entries.front();
  MinorWitness w;
  for (const VoteSet& cls : e.classes) w.vote_indices.push_back(cls.find_first());
  std::sort(w.vote_indices.begin(), w.vote_indices.end());
  w.candidates.assign(e.triple.begin(), e.triple.end());
  w.source = MinorSource{j, -1};
  return w;
}

// ---------------------------------------------------------------------------
// Two-row pattern matching
//
// With u's candidates laid out by u-position, the pair (u, v) is described by
// s[p] = position in v of u's p-th candidate. The pair realizes a 2-row
// pattern with u on the first row iff s contains, as a subsequence, a run of
// values whose relative order equals tau, where tau[k] is the second-row
// position of the first row's k-th slot.

namespace {

std::vector<int> RelativeSequence(const Profile& p, std::size_t u,
                                  std::size_t v) {
  const Ranking& ru = p.vote(u);
  std::vector<int> s(ru.size());
  for (std::size_t k = 0; k < ru.size(); ++k) {
    s[k] = static_cast<int>(p.position(v, ru[k]));
  }
  return s;
}

std::vector<int> PatternTau(const std::vector<int>& first_row,
                            const std::vector<int>& second_row) {
  std::vector<int> where(second_row.size());
  for (std::size_t k = 0; k < second_row.size(); ++k) {
    where[static_cast<std::size_t>(second_row[k])] = static_cast<int>(k);
  }
  std::vector<int> tau(first_row.size());
  for (std::size_t k = 0; k < first_row.size(); ++k) {
    tau[k] = where[static_cast<std::size_t>(first_row[k])];
  }
  return tau;
}

// Prefix/suffix range tables over a permutation s of 0..m-1: for a cut
// point and a value bound, the extreme value on that side strictly beyond
// the bound.
class RangeTables {
 public:
  explicit RangeTables(const std::vector<int>& s)
      : m_(static_cast<int>(s.size())),
        w_(static_cast<std::size_t>(m_) + 1),
        pre_min_above_(w_ * w_, m_),
        pre_max_below_(w_ * w_, -1),
        suf_min_above_(w_ * w_, m_),
        suf_max_below_(w_ * w_, -1) {
    for (int p = 0; p < m_; ++p) {
      int* min_row = &pre_min_above_[Row(p + 1)];
      int* max_row = &pre_max_below_[Row(p + 1)];
      std::copy_n(&pre_min_above_[Row(p)], w_, min_row);
      std::copy_n(&pre_max_below_[Row(p)], w_, max_row);
      const int x = s[static_cast<std::size_t>(p)];
      for (int idx = 0; idx <= x; ++idx) {
        min_row[idx] = std::min(min_row[idx], x);
      }
      for (int idx = x + 1; idx <= m_; ++idx) {
        max_row[idx] = std::max(max_row[idx], x);
      }
    }
    for (int p = m_ - 1; p >= 1; --p) {
      int* min_row = &suf_min_above_[Row(p - 1)];
      int* max_row = &suf_max_below_[Row(p - 1)];
      std::copy_n(&suf_min_above_[Row(p)], w_, min_row);
      std::copy_n(&suf_max_below_[Row(p)], w_, max_row);
      const int x = s[static_cast<std::size_t>(p)];
      for (int idx = 0; idx <= x; ++idx) {
        min_row[idx] = std::min(min_row[idx], x);
      }
      for (int idx = x + 1; idx <= m_; ++idx) {
        max_row[idx] = std::max(max_row[idx], x);
      }
    }
  }

  // Smallest s[q] > lo with q < p (m if none).
  int PrefixMinAbove(int p, int lo) const {
    return pre_min_above_[Row(p) + static_cast<std::size_t>(lo + 1)];
  }
  // Largest s[q] < hi with q < p (-1 if none).
  int PrefixMaxBelow(int p, int hi) const {
    return pre_max_below_[Row(p) + static_cast<std::size_t>(hi)];
  }
  // Same, over q > p.
  int SuffixMinAbove(int p, int lo) const {
    return suf_min_above_[Row(p) + static_cast<std::size_t>(lo + 1)];
  }
  int SuffixMaxBelow(int p, int hi) const {
    return suf_max_below_[Row(p) + static_cast<std::size_t>(hi)];
  }

 private:
  std::size_t Row(int p) const { return static_cast<std::size_t>(p) * w_; }

  int m_;
  std::size_t w_;
  std::vector<int> pre_min_above_;
  std::vector<int> pre_max_below_;
  std::vector<int> suf_min_above_;
  std::vector<int> suf_max_below_;
};

// Length-4 pattern search in O(m^2): enumerate the two middle positions and
// answer the outer ones with range tables.
std::optional<std::vector<int>> FindPattern4(const std::vector<int>& s,
                                             const std::vector<int>& inverse,
                                             const RangeTables& t,
                                             const std::vector<int>& tau) {
  const int m = static_cast<int>(s.size());
  if (m < 4) return std::nullopt;
  const int band_first = (tau[0] > tau[1]) + (tau[0] > tau[2]);
  const int band_last = (tau[3] > tau[1]) + (tau[3] > tau[2]);
  const bool middle_up = tau[1] < tau[2];
  const bool outer_up = tau[0] < tau[3];

  for (int p2 = 1; p2 <= m - 3; ++p2) {
    for (int p3 = p2 + 1; p3 <= m - 2; ++p3) {
      const int x2 = s[static_cast<std::size_t>(p2)];
      const int x3 = s[static_cast<std::size_t>(p3)];
      if ((x2 < x3) != middle_up) continue;
      const int lo = std::min(x2, x3);
      const int hi = std::max(x2, x3);
      auto band = [&](int b) {
        if (b == 0) return std::pair{-1, lo};
        if (b == 1) return std::pair{lo, hi};
        return std::pair{hi, m};
      };
      const auto [l0, h0] = band(band_first);
      const auto [l3, h3] = band(band_last);

      int a = 0;
      int b = 0;
      if (band_first != band_last) {
        a = t.PrefixMinAbove(p2, l0);
        if (a >= h0) continue;
        b = t.SuffixMinAbove(p3, l3);
        if (b >= h3) continue;
      } else if (outer_up) {
        a = t.PrefixMinAbove(p2, l0);
        if (a >= h0) continue;
        b = t.SuffixMaxBelow(p3, h3);
        if (b <= l3 || b <= a) continue;
      } else {
        a = t.PrefixMaxBelow(p2, h0);
        if (a <= l0) continue;
        b = t.SuffixMinAbove(p3, l3);
        if (b >= h3 || b >= a) continue;
      }
      return std::vector<int>{inverse[static_cast<std::size_t>(a)], p2, p3,
                              inverse[static_cast<std::size_t>(b)]};
    }
  }
  return std::nullopt;
}

bool ExtendGeneric(const std::vector<int>& s, const std::vector<int>& tau,
                   std::vector<int>& chosen) {
  const std::size_t k = chosen.size();
  if (k == tau.size()) return true;
  const int m = static_cast<int>(s.size());
  const int start = chosen.empty() ? 0 : chosen.back() + 1;
  const int remaining = static_cast<int>(tau.size() - k);
  for (int p = start; p <= m - remaining; ++p) {
    bool ok = true;
    for (std::size_t l = 0; l < k && ok; ++l) {
      ok = (s[static_cast<std::size_t>(p)] >
            s[static_cast<std::size_t>(chosen[l])]) == (tau[k] > tau[l]);
    }
    if (!ok) continue;
    chosen.push_back(p);
    if (ExtendGeneric(s, tau, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<std::vector<int>> FindPatternGeneric(const std::vector<int>& s,
                                                   const std::vector<int>& tau) {
  std::vector<int> chosen;
  if (tau.size() > s.size()) return std::nullopt;
  if (ExtendGeneric(s, tau, chosen)) return chosen;
  return std::nullopt;
}

// Number of pattern slots that take part in no inversion between the two
// rows.
int UninvertedSlots(const std::vector<int>& tau) {
  int count = 0;
  for (std::size_t k = 0; k < tau.size(); ++k) {
    bool inverted = false;
    for (std::size_t l = 0; l < tau.size() && !inverted; ++l) {
      inverted = (l < k && tau[l] > tau[k]) || (l > k && tau[l] < tau[k]);
    }
    count += !inverted;
  }
  return count;
}

// A sequence to search plus, lazily, its range tables for the O(m^2)
// length-4 search. `origin` maps sequence positions back to u-positions.
struct SearchSequence {
  std::vector<int> s;
  std::vector<int> origin;
  std::vector<int> inverse;
  std::optional<RangeTables> tables;

  std::optional<std::vector<int>> Find(const std::vector<int>& tau) {
    std::optional<std::vector<int>> found;
    if (tau.size() != 4) {
      found = FindPatternGeneric(s, tau);
    } else {
      if (!tables) {
        inverse.assign(s.size(), 0);
        for (std::size_t k = 0; k < s.size(); ++k) {
          inverse[static_cast<std::size_t>(s[k])] = static_cast<int>(k);
        }
        tables.emplace(s);
      }
      found = FindPattern4(s, inverse, *tables, tau);
    }
    if (found) {
      for (int& pos : *found) pos = origin[static_cast<std::size_t>(pos)];
    }
    return found;
  }
};

// Per ordered vote pair: the relative sequence s, searched in compressed
// form. A position of s in no inversion is a fixed point (everything
// before it is smaller, everything after larger), and all fixed points in
// a run relate identically to the rest of s. An inverted pattern slot can
// only land on an inverted position, so a pattern with f uninverted slots
// occurs in s iff it occurs in the subsequence of inverted positions plus
// the first f fixed points of every run.
class PairMatcher {
 public:
  PairMatcher(const Profile& p, std::size_t u, std::size_t v)
      : u_vote_(&p.vote(u)), s_(RelativeSequence(p, u, v)) {
    const std::size_t m = s_.size();
    std::vector<int> suffix_min(m + 1, static_cast<int>(m));
    for (std::size_t k = m; k-- > 0;) {
      suffix_min[k] = std::min(suffix_min[k + 1], s_[k]);
    }
    fixed_.resize(m);
    int prefix_max = -1;
    for (std::size_t k = 0; k < m; ++k) {
      fixed_[k] = prefix_max < s_[k] && suffix_min[k + 1] > s_[k];
      prefix_max = std::max(prefix_max, s_[k]);
    }
  }

  // Positions in u of the matched first-row slots, in first-row order.
  std::optional<std::vector<int>> Find(const std::vector<int>& tau) {
    const int f = UninvertedSlots(tau);
    auto it = by_fixed_.find(f);
    if (it == by_fixed_.end()) it = by_fixed_.emplace(f, Compress(f)).first;
    return it->second.Find(tau);
  }

  // Binding slot -> candidate when u plays `first_row`.
  std::vector<Candidate> Bind(const std::vector<int>& first_row,
                              const std::vector<int>& positions) const {
    std::vector<Candidate> binding(first_row.size());
    for (std::size_t k = 0; k < first_row.size(); ++k) {
      binding[static_cast<std::size_t>(first_row[k])] =
          (*u_vote_)[static_cast<std::size_t>(positions[k])];
    }
    return binding;
  }

 private:
  SearchSequence Compress(int keep_per_run) const {
    SearchSequence out;
    std::vector<int> values;
    int run = 0;
    for (std::size_t k = 0; k < s_.size(); ++k) {
      if (fixed_[k]) {
        if (run++ >= keep_per_run) continue;
      } else {
        run = 0;
      }
      out.origin.push_back(static_cast<int>(k));
      values.push_back(s_[k]);
    }
    // Relabel the kept values to ranks 0..m'-1.
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    out.s.reserve(values.size());
    for (int x : values) {
      out.s.push_back(static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()));
    }
    return out;
  }

  const Ranking* u_vote_;
  std::vector<int> s_;
  std::vector<bool> fixed_;
  std::map<int, SearchSequence> by_fixed_;
};

void RequireTwoRows(const MinorPattern& pat) {
  if (pat.row_count() != 2) {
    throw Error(ErrorCode::kPreconditionViolated,
                "explicit patterns must have 2 rows");
  }
}

// First match of `pat` on the unordered pair {u, v} (u < v): u on row 0
// first, then u on row 1.
std::optional<MinorWitness> MatchUnorderedPair(PairMatcher& matcher,
                                               std::size_t u, std::size_t v,
                                               const MinorPattern& pat,
                                               int pattern_index) {
  const auto& r0 = pat.rows[0];
  const auto& r1 = pat.rows[1];
  if (auto pos = matcher.Find(PatternTau(r0, r1))) {
    return MinorWitness{{u, v}, matcher.Bind(r0, *pos), {0, pattern_index}};
  }
  if (auto pos = matcher.Find(PatternTau(r1, r0))) {
    return MinorWitness{{v, u}, matcher.Bind(r1, *pos), {0, pattern_index}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Candidate>> match_vote_pair(const Profile& p,
                                                      std::size_t u,
                                                      std::size_t v,
                                                      const MinorPattern& pat) {
  RequireTwoRows(pat);
  if (u >= p.vote_count() || v >= p.vote_count() || u == v) {
    throw Error(ErrorCode::kBadIndex, "vote pair");
  }
  if (pat.col_count() > p.candidate_count()) return std::nullopt;
  PairMatcher matcher(p, u, v);
  if (auto pos = matcher.Find(PatternTau(pat.rows[0], pat.rows[1]))) {
    return matcher.Bind(pat.rows[0], *pos);
  }
  return std::nullopt;
}

std::optional<MinorWitness> find_explicit_minor(const Profile& p,
                                                const MinorPattern& pat) {
  RequireTwoRows(pat);
  if (pat.col_count() > p.candidate_count()) return std::nullopt;
  for (std::size_t u = 0; u < p.vote_count(); ++u) {
    for (std::size_t v = u + 1; v < p.vote_count(); ++v) {
      PairMatcher matcher(p, u, v);
      if (auto w = MatchUnorderedPair(matcher, u, v, pat, 0)) return w;
    }
  }
  return std::nullopt;
}

ConflictMatrix conflict_pairs(const Profile& p, const DomainSpec& spec) {
  MinorIndex index(p, spec);
  const std::size_t n = p.vote_count();
  ConflictMatrix out(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) out[u][v] = index.conflicts(u, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MinorIndex

MinorIndex::MinorIndex(const Profile& p, DomainSpec spec)
    : profile_(p), spec_(std::move(spec)) {
  const std::size_t n = profile_.vote_count();
  conflict_rows_.assign(n, VoteSet(n));
  for (const MinorPattern& pat : spec_.explicit_patterns) RequireTwoRows(pat);

  if (!spec_.explicit_patterns.empty()) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        PairMatcher matcher(profile_, u, v);
        for (std::size_t k = 0; k < spec_.explicit_patterns.size(); ++k) {
          const MinorPattern& pat = spec_.explicit_patterns[k];
          if (pat.col_count() > profile_.candidate_count()) continue;
          auto w = MatchUnorderedPair(matcher, u, v, pat, static_cast<int>(k));
          if (!w) continue;
          conflict_rows_[u].set(v);
          conflict_rows_[v].set(u);
          conflict_wit_.emplace(std::pair{u, v}, std::move(*w));
          break;
        }
      }
    }
  }
  dangerous_ = dangerous_triples(profile_, spec_.j_flags);
}

const MinorWitness& MinorIndex::conflict_witness(std::size_t u,
                                                 std::size_t v) const {
  auto it = conflict_wit_.find(std::minmax(u, v));
  if (it == conflict_wit_.end()) {
    throw Error(ErrorCode::kBadIndex, "pair does not conflict");
  }
  return it->second;
}

std::optional<MinorWitness> MinorIndex::find_in(const VoteSet& votes) const {
  if (votes.size() != vote_count()) {
    throw Error(ErrorCode::kBadIndex, "vote set size mismatch");
  }
  for (const TripleClasses& e : dangerous_) {
    if (!votes.intersects(e.classes[0]) || !votes.intersects(e.classes[1]) ||
        !votes.intersects(e.classes[2])) {
      continue;
    }
    MinorWitness w;
    for (const VoteSet& cls : e.classes) {
      w.vote_indices.push_back((cls & votes).find_first());
    }
    std::sort(w.vote_indices.begin(), w.vote_indices.end());
    w.candidates.assign(e.triple.begin(), e.triple.end());
    w.source = MinorSource{e.position, -1};
    return w;
  }
  for (auto u = votes.find_first(); u != VoteSet::npos;
       u = votes.find_next(u)) {
    VoteSet hits = conflict_rows_[u] & votes;
    auto v = hits.find_next(u);
    if (v != VoteSet::npos) return conflict_wit_.at(std::pair{u, v});
  }
  return std::nullopt;
}

bool MinorIndex::completes_minor(const VoteSet& group, std::size_t v) const {
  if (conflict_rows_[v].intersects(group)) return true;
  for (const TripleClasses& e : dangerous_) {
    const std::uint8_t r = e.class_of[v];
    const std::size_t o1 = (r + 1) % 3;
    const std::size_t o2 = (r + 2) % 3;
    if (group.intersects(e.classes[o1]) && group.intersects(e.classes[o2])) {
      return true;
    }
  }
  return false;
}

bool MinorIndex::votes_form_j_minor(std::size_t a, std::size_t b,
                                    std::size_t c) const {
  for (const TripleClasses& e : dangerous_) {
    const auto ca = e.class_of[a];
    const auto cb = e.class_of[b];
    const auto cc = e.class_of[c];
    if (ca != cb && ca != cc && cb != cc) return true;
  }
  return false;
}

}  // namespace prefsplit
