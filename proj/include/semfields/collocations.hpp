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

// Collocation candidates from part-of-speech patterns:
//   verb + particle
//   verb + [determiner/pronoun] + noun + [conjunction/preposition + noun]
//   verb + adverb
//   adverb + participle
//   adjective + noun
//   noun + conjunction/preposition + noun
// Bracketed slots are optional. Matches are contiguous and never span
// punctuation. A candidate is kept only if its canonical phrase is a
// thesaurus entry.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semfields/thesaurus.hpp"
#include "semfields/tagger.hpp"
#include "semfields/tokenizer.hpp"

namespace semfields {

enum class CollocationPattern {
  kVerbParticle,
  kVerbObject,
  kVerbAdverb,
  kAdverbParticiple,
  kAdjectiveNoun,
  kNounLinkNoun,
};

inline constexpr std::array<CollocationPattern, 6> kAllPatterns = {
    CollocationPattern::kVerbParticle,     CollocationPattern::kVerbObject,    CollocationPattern::kVerbAdverb,
    CollocationPattern::kAdverbParticiple, CollocationPattern::kAdjectiveNoun, CollocationPattern::kNounLinkNoun};

inline std::string_view pattern_name(CollocationPattern p) {
  switch (p) {
    case CollocationPattern::kVerbParticle: return "verb+particle";
    case CollocationPattern::kVerbObject: return "verb+det/pron+noun+conj/prep+noun";
    case CollocationPattern::kVerbAdverb: return "verb+adverb";
    case CollocationPattern::kAdverbParticiple: return "adverb+participle";
    case CollocationPattern::kAdjectiveNoun: return "adjective+noun";
    case CollocationPattern::kNounLinkNoun: return "noun+conj/prep+noun";
  }
  return "?";
}

struct Collocation {
  std::size_t begin = 0;  // token index, inclusive
  std::size_t end = 0;    // token index, exclusive
  CollocationPattern pattern = CollocationPattern::kVerbParticle;
  std::string surface_lemma;
  int position = 0;  // position of the last token

  std::size_t length() const { return end - begin; }
};

namespace detail {

enum class Slot { kVerb, kParticle, kDetPron, kNoun, kLink, kAdverb, kParticiple, kAdjective };

inline bool slot_accepts(Slot slot, Pos pos) {
  switch (slot) {
    case Slot::kVerb: return pos == Pos::kVerb || pos == Pos::kParticiple;
    case Slot::kParticle: return pos == Pos::kParticle;
    case Slot::kDetPron: return pos == Pos::kDeterminer || pos == Pos::kPronoun;
    case Slot::kNoun: return pos == Pos::kNoun;
    case Slot::kLink: return pos == Pos::kConjunction || pos == Pos::kPreposition;
    case Slot::kAdverb: return pos == Pos::kAdverb;
    case Slot::kParticiple: return pos == Pos::kParticiple;
    case Slot::kAdjective: return pos == Pos::kAdjective;
  }
  return false;
}

// Every concrete slot sequence a pattern expands to, longest first.
inline std::vector<std::vector<Slot>> pattern_variants(CollocationPattern p) {
  using S = Slot;
  switch (p) {
    case CollocationPattern::kVerbParticle: return {{S::kVerb, S::kParticle}};
    case CollocationPattern::kVerbObject:
      return {{S::kVerb, S::kDetPron, S::kNoun, S::kLink, S::kNoun},
              {S::kVerb, S::kNoun, S::kLink, S::kNoun},
              {S::kVerb, S::kDetPron, S::kNoun},
              {S::kVerb, S::kNoun}};
    case CollocationPattern::kVerbAdverb: return {{S::kVerb, S::kAdverb}};
    case CollocationPattern::kAdverbParticiple: return {{S::kAdverb, S::kParticiple}};
    case CollocationPattern::kAdjectiveNoun: return {{S::kAdjective, S::kNoun}};
    case CollocationPattern::kNounLinkNoun: return {{S::kNoun, S::kLink, S::kNoun}};
  }
  return {};
}

inline std::string canonical_word(const Token& t) {
  std::string lower = str::to_lower(t.surface);
  if (t.pos == Pos::kVerb || t.pos == Pos::kParticiple || t.pos == Pos::kNoun) {
    return t.lemma.empty() ? lower : t.lemma;
  }
  if (is_possessive_pronoun(lower)) return "one's";
  return lower;
}

}  // namespace detail

inline std::string canonical_phrase(std::span<const Token> tokens, std::size_t begin, std::size_t end) {
  std::vector<std::string> words;
  for (std::size_t i = begin; i < end; ++i) words.push_back(detail::canonical_word(tokens[i]));
  return normalize_surface(str::join(words, " "));
}

// All pattern matches starting at each token, longest variant first; no
// index filtering. Exposed for diagnostics and tests.
inline std::vector<Collocation> collocation_candidates(std::span<const Token> tokens) {
  std::vector<Collocation> out;
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    for (CollocationPattern p : kAllPatterns) {
      for (const auto& slots : detail::pattern_variants(p)) {
        if (start + slots.size() > tokens.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < slots.size() && ok; ++k) {
          ok = detail::slot_accepts(slots[k], tokens[start + k].pos);
        }
        if (!ok) continue;
        Collocation c;
        c.begin = start;
        c.end = start + slots.size();
        c.pattern = p;
        c.surface_lemma = canonical_phrase(tokens, c.begin, c.end);
        c.position = tokens[c.end - 1].position;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

// For each start token and pattern, keeps the longest matching variant whose
// canonical phrase is in the index.
inline std::vector<Collocation> extract_collocations(std::span<const Token> tokens, const ThesaurusIndex& index) {
  std::vector<Collocation> out;
  auto candidates = collocation_candidates(tokens);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Collocation& c = candidates[i];
    bool shadowed = false;
    for (const auto& kept : out) {
      if (kept.begin == c.begin && kept.pattern == c.pattern) shadowed = true;
    }
    if (shadowed || !index.contains(c.surface_lemma)) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace semfields
