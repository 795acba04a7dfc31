// Copyright 2026 The Semfields Authors.
//
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
#pragma once

// Target-word location.
//
// The A-group is the Section with the most member units; the B-groups are the
// remaining Sections at the next-highest count. Homographic puns score each
// merged B-group word by dual membership (2 if also in the A-group, else 1)
// times its frequency across the B-groups, and take the maximum. Heterographic
// puns keep the B-groups whose union with the A-group is largest and pick the
// candidate closest to the end of the sentence.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "semfields/analysis.hpp"
#include "semfields/error.hpp"
#include "semfields/random.hpp"

namespace semfields {

struct FieldGroups {
  SectionId a_section = -1;
  std::vector<std::string> a_members;
  int a_size = 0;
  std::vector<SectionId> b_sections;
  std::vector<std::vector<std::string>> b_groups;
  int b_size = 0;
  // More than one Section reached the maximum; the lowest id became A.
  bool a_tied = false;
};

struct CandidateScore {
  std::string word;
  std::optional<int> v_alpha;
  std::optional<int> v_beta;
  double v_gamma = 0.0;
  double z = 0.0;
};

enum class LocateMethod { kSenseBased, kLastWord, kRandom, kMostPolysemous, kPosition };

inline std::string_view method_name(LocateMethod m) {
  switch (m) {
    case LocateMethod::kSenseBased: return "sense_based";
    case LocateMethod::kLastWord: return "last_word";
    case LocateMethod::kRandom: return "random";
    case LocateMethod::kMostPolysemous: return "most_polysemous";
    case LocateMethod::kPosition: return "position";
  }
  return "?";
}

inline LocateMethod parse_method(std::string_view name) {
  for (auto m : {LocateMethod::kSenseBased, LocateMethod::kLastWord, LocateMethod::kRandom,
                 LocateMethod::kMostPolysemous, LocateMethod::kPosition}) {
    if (method_name(m) == name) return m;
  }
  if (name == "sense-based") return LocateMethod::kSenseBased;
  if (name == "last-word") return LocateMethod::kLastWord;
  if (name == "most-polysemous") return LocateMethod::kMostPolysemous;
  throw Error(ErrorCode::kInvalidArgument, "unknown location method '" + std::string(name) + "'");
}

struct LocationResult {
  std::string target;
  LocateMethod method = LocateMethod::kSenseBased;
  std::vector<CandidateScore> scores;
  std::optional<FieldGroups> groups;
};

inline bool is_single_word(std::string_view lemma) { return lemma.find(' ') == std::string_view::npos; }

inline FieldGroups compute_groups(std::span<const SemanticUnit> units, std::size_t section_count = kDefaultSectionCount) {
  std::vector<int> counts(section_count, 0);
  for (const auto& u : units) {
    for (SectionId k : u.sections) ++counts.at(static_cast<std::size_t>(k));
  }
  auto members_of = [&](SectionId k) {
    std::vector<std::string> m;
    for (const auto& u : units) {
      if (std::binary_search(u.sections.begin(), u.sections.end(), k)) m.push_back(u.lemma);
    }
    return m;
  };

  FieldGroups g;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > g.a_size) {
      g.a_size = counts[k];
      g.a_section = static_cast<SectionId>(k);
    }
  }
  if (g.a_size == 0) throw Error(ErrorCode::kNoSemanticContent, "no word in the sentence has a thesaurus Section");
  g.a_members = members_of(g.a_section);

  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (static_cast<SectionId>(k) != g.a_section) g.b_size = std::max(g.b_size, counts[k]);
  }
  g.a_tied = g.b_size == g.a_size;
  if (g.b_size > 0) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      auto id = static_cast<SectionId>(k);
      if (id == g.a_section || counts[k] != g.b_size) continue;
      g.b_sections.push_back(id);
      g.b_groups.push_back(members_of(id));
    }
  }
  return g;
}

// Union of the B-groups, single words only, first occurrence order.
inline std::vector<std::string> merge_wb(const FieldGroups& groups) {
  std::vector<std::string> out;
  for (const auto& group : groups.b_groups) {
    for (const auto& w : group) {
      if (is_single_word(w) && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return out;
}

inline std::vector<CandidateScore> score_homographic(const FieldGroups& groups, std::span<const std::string> merged) {
  std::vector<CandidateScore> out;
  for (const auto& c : merged) {
    CandidateScore s;
    s.word = c;
    bool in_a = std::find(groups.a_members.begin(), groups.a_members.end(), c) != groups.a_members.end();
    s.v_alpha = in_a ? 2 : 1;
    int freq = 0;
    for (const auto& group : groups.b_groups) freq += static_cast<int>(std::count(group.begin(), group.end(), c));
    s.v_beta = freq;
    s.z = static_cast<double>(*s.v_alpha * *s.v_beta);
    out.push_back(std::move(s));
  }
  return out;
}

// Mean 1-based position of the word's occurrences, matched on lemma.
inline double position_value(std::string_view lemma, std::span<const Token> tokens) {
  double sum = 0.0;
  int n = 0;
  for (const auto& t : tokens) {
    if (t.is_punctuation()) continue;
    if (t.lemma == lemma) {
      sum += t.position;
      ++n;
    }
  }
  if (n == 0) throw Error(ErrorCode::kWordAbsent, "'" + std::string(lemma) + "' does not occur in the sentence");
  return sum / n;
}

namespace detail {

inline int first_position(std::string_view lemma, std::span<const Token> tokens) {
  for (const auto& t : tokens) {
    if (!t.is_punctuation() && t.lemma == lemma) return t.position;
  }
  return 0;
}

inline std::vector<const Token*> content_tokens(const AnalyzedSentence& s) {
  std::vector<const Token*> out;
  for (const auto& t : s.tokens) {
    if (!t.is_punctuation() && !t.is_stopword) out.push_back(&t);
  }
  if (out.empty()) {
    for (const auto& t : s.tokens) {
      if (!t.is_punctuation()) out.push_back(&t);
    }
  }
  return out;
}

inline std::vector<CandidateScore> position_scores(const AnalyzedSentence& s) {
  std::vector<CandidateScore> out;
  for (const Token* t : content_tokens(s)) {
    if (std::any_of(out.begin(), out.end(), [&](const CandidateScore& c) { return c.word == t->lemma; })) continue;
    CandidateScore c;
    c.word = t->lemma;
    c.v_gamma = position_value(t->lemma, s.tokens);
    c.z = c.v_gamma;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline LocationResult locate_sense_based(const AnalyzedSentence& s, std::uint64_t seed) {
  LocationResult r;
  r.method = LocateMethod::kSenseBased;
  FieldGroups groups = compute_groups(s.units, s.vector.size());
  std::vector<std::string> merged = merge_wb(groups);
  if (!merged.empty()) {
    r.scores = score_homographic(groups, merged);
  } else {
    // Only one Section is populated: every A-group word is a candidate.
    for (const auto& w : groups.a_members) {
      if (!is_single_word(w)) continue;
      if (std::any_of(r.scores.begin(), r.scores.end(), [&](const CandidateScore& c) { return c.word == w; })) continue;
      r.scores.push_back(CandidateScore{w, 2, 1, 0.0, 2.0});
    }
  }
  if (r.scores.empty()) throw Error(ErrorCode::kNoSemanticContent, "no single-word candidates");
  for (auto& c : r.scores) c.v_gamma = position_value(c.word, s.tokens);

  double best = r.scores.front().z;
  for (const auto& c : r.scores) best = std::max(best, c.z);
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    if (r.scores[i].z == best) tied.push_back(i);
  }
  std::size_t pick = tied.front();
  if (tied.size() > 1) {
    Rng rng(seed);
    pick = tied[rng.below(tied.size())];
  }
  r.target = r.scores[pick].word;
  r.groups = std::move(groups);
  return r;
}

// Homographic location by any of the four methods. The index is consulted
// only by most_polysemous (thesaurus entry count stands in for sense count).
inline LocationResult locate_homographic(const AnalyzedSentence& s, LocateMethod method, std::uint64_t seed,
                                         const ThesaurusIndex* index = nullptr) {
  switch (method) {
    case LocateMethod::kSenseBased: return locate_sense_based(s, seed);
    case LocateMethod::kLastWord: {
      LocationResult r;
      r.method = method;
      const Token* last = nullptr;
      for (const auto& t : s.tokens) {
        if (!t.is_punctuation()) last = &t;
      }
      if (last == nullptr) throw Error(ErrorCode::kEmptyInput, "sentence has no words");
      r.scores = detail::position_scores(s);
      r.target = last->lemma;
      return r;
    }
    case LocateMethod::kRandom: {
      LocationResult r;
      r.method = method;
      auto pool = detail::content_tokens(s);
      if (pool.empty()) throw Error(ErrorCode::kEmptyInput, "sentence has no words");
      Rng rng(seed);
      r.target = pool[rng.below(pool.size())]->lemma;
      return r;
    }
    case LocateMethod::kMostPolysemous: {
      if (index == nullptr) throw Error(ErrorCode::kInvalidArgument, "most_polysemous needs a thesaurus index");
      LocationResult r;
      r.method = method;
      auto pool = detail::content_tokens(s);
      if (pool.empty()) throw Error(ErrorCode::kEmptyInput, "sentence has no words");
      int best = -1;
      for (const Token* t : pool) {
        int senses = index->polysemy_count(t->lemma);
        // Later positions win ties.
        if (senses >= best) {
          best = senses;
          r.target = t->lemma;
        }
        CandidateScore c;
        c.word = t->lemma;
        c.v_gamma = t->position;
        c.z = senses;
        r.scores.push_back(std::move(c));
      }
      return r;
    }
    case LocateMethod::kPosition: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "method not applicable to homographic location");
}

// Candidate set for heterographic location: the A-group plus every B-group
// whose union with the A-group is largest (ties pooled).
struct HeterographicCandidates {
  std::vector<std::string> w_a;
  std::vector<std::string> w_b;
  std::vector<SectionId> chosen_b_sections;
};

inline HeterographicCandidates heterographic_candidates(const FieldGroups& groups) {
  HeterographicCandidates out;
  auto push_unique = [](std::vector<std::string>& v, const std::string& w) {
    if (is_single_word(w) && std::find(v.begin(), v.end(), w) == v.end()) v.push_back(w);
  };
  for (const auto& w : groups.a_members) push_unique(out.w_a, w);
  const std::set<std::string> a_set(out.w_a.begin(), out.w_a.end());

  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < groups.b_groups.size(); ++j) {
    std::set<std::string> u = a_set;
    for (const auto& w : groups.b_groups[j]) {
      if (is_single_word(w)) u.insert(w);
    }
    if (u.size() > best) {
      best = u.size();
      chosen.assign(1, j);
    } else if (u.size() == best) {
      chosen.push_back(j);
    }
  }
  for (std::size_t j : chosen) {
    out.chosen_b_sections.push_back(groups.b_sections[j]);
    for (const auto& w : groups.b_groups[j]) {
      if (!a_set.count(w)) push_unique(out.w_b, w);
    }
  }
  return out;
}

inline LocationResult locate_heterographic(const AnalyzedSentence& s) {
  LocationResult r;
  r.method = LocateMethod::kPosition;
  FieldGroups groups = compute_groups(s.units, s.vector.size());
  HeterographicCandidates cand = heterographic_candidates(groups);
  std::vector<std::string> all = cand.w_a;
  all.insert(all.end(), cand.w_b.begin(), cand.w_b.end());
  if (all.empty()) throw Error(ErrorCode::kNoSemanticContent, "no single-word candidates");

  int best_first = -1;
  double best = -1.0;
  for (const auto& w : all) {
    CandidateScore c;
    c.word = w;
    c.v_gamma = position_value(w, s.tokens);
    c.z = c.v_gamma;
    int first = detail::first_position(w, s.tokens);
    if (c.z > best || (c.z == best && first > best_first)) {
      best = c.z;
      best_first = first;
      r.target = w;
    }
    r.scores.push_back(std::move(c));
  }
  r.groups = std::move(groups);
  return r;
}

inline nlohmann::ordered_json groups_json(const FieldGroups& g) {
  return {{"a_section", g.a_section}, {"a_members", g.a_members}, {"a_size", g.a_size},
          {"a_tied", g.a_tied},       {"b_sections", g.b_sections}, {"b_groups", g.b_groups},
          {"b_size", g.b_size}};
}

inline nlohmann::ordered_json location_json(const LocationResult& r) {
  nlohmann::ordered_json scores = nlohmann::ordered_json::array();
  for (const auto& c : r.scores) {
    nlohmann::ordered_json j{{"word", c.word}};
    if (c.v_alpha) j["v_alpha"] = *c.v_alpha;
    if (c.v_beta) j["v_beta"] = *c.v_beta;
    j["v_gamma"] = c.v_gamma;
    j["z"] = c.z;
    scores.push_back(std::move(j));
  }
  nlohmann::ordered_json out{{"target", r.target}, {"method", method_name(r.method)}, {"scores", scores}};
  out["groups"] = r.groups ? groups_json(*r.groups) : nlohmann::ordered_json(nullptr);
  return out;
}

}  // namespace semfields
