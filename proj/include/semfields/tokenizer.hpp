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

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semfields/error.hpp"
#include "semfields/strings.hpp"

namespace semfields {

// Coarse part-of-speech classes used by the collocation patterns.
enum class Pos {
  kNoun,
  kVerb,
  kAdjective,
  kAdverb,
  kParticiple,
  kDeterminer,
  kPronoun,
  kConjunction,
  kPreposition,
  kParticle,
  kPunctuation,
  kOther,
};

inline std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "noun";
    case Pos::kVerb: return "verb";
    case Pos::kAdjective: return "adjective";
    case Pos::kAdverb: return "adverb";
    case Pos::kParticiple: return "participle";
    case Pos::kDeterminer: return "determiner";
    case Pos::kPronoun: return "pronoun";
    case Pos::kConjunction: return "conjunction";
    case Pos::kPreposition: return "preposition";
    case Pos::kParticle: return "particle";
    case Pos::kPunctuation: return "punctuation";
    case Pos::kOther: return "other";
  }
  return "other";
}

inline std::optional<Pos> parse_pos(std::string_view name) {
  static constexpr Pos kAll[] = {Pos::kNoun,        Pos::kVerb,        Pos::kAdjective,  Pos::kAdverb,
                                 Pos::kParticiple,  Pos::kDeterminer,  Pos::kPronoun,    Pos::kConjunction,
                                 Pos::kPreposition, Pos::kParticle,    Pos::kPunctuation, Pos::kOther};
  std::string lower = str::to_lower(str::trim(name));
  for (Pos p : kAll) {
    if (pos_name(p) == lower) return p;
  }
  return std::nullopt;
}

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;
  int position = 0;  // 1-based over non-punctuation tokens; 0 for punctuation
  bool is_stopword = false;
  std::size_t offset = 0;  // byte offset of surface in the source text

  bool is_punctuation() const { return pos == Pos::kPunctuation; }
};

namespace detail {

inline bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

inline bool has_word_char(std::string_view s) {
  return std::any_of(s.begin(), s.end(), is_word_char);
}

inline bool is_apostrophe_at(std::string_view s, std::size_t i) { return s[i] == '\''; }

// Abbreviations whose trailing period belongs to the word.
inline bool is_abbreviation(std::string_view lower) {
  static constexpr std::string_view kAbbrev[] = {"mr.", "mrs.", "ms.", "dr.", "st.", "jr.", "sr.",
                                                 "vs.", "etc.", "prof.", "mt.", "no.", "e.g.", "i.e."};
  return std::find(std::begin(kAbbrev), std::end(kAbbrev), lower) != std::end(kAbbrev);
}

// Clitics split off the end of a word, longest first.
inline std::size_t clitic_length(std::string_view lower) {
  static constexpr std::string_view kClitics[] = {"n't", "'ll", "'re", "'ve", "'s", "'m", "'d"};
  for (auto c : kClitics) {
    if (lower.size() > c.size() && str::ends_with(lower, c)) return c.size();
  }
  return 0;
}

}  // namespace detail

// Splits a sentence into word and punctuation tokens. Contractions are split
// conservatively ("wasn't" -> "was" + "n't"); every surface is a substring of
// the input, so no non-whitespace character is lost. Positions are assigned
// to non-punctuation tokens only.
inline std::vector<Token> tokenize(std::string_view raw) {
  if (str::trim(raw).empty()) throw Error(ErrorCode::kEmptyInput, "sentence is empty");

  // Normalize curly apostrophes up front; offsets refer to this normalized text.
  const std::string text = str::straighten_quotes(raw);
  std::vector<Token> out;
  auto emit = [&](std::size_t begin, std::size_t len, bool punct) {
    if (len == 0) return;
    Token t;
    t.surface = text.substr(begin, len);
    t.offset = begin;
    t.pos = punct ? Pos::kPunctuation : Pos::kOther;
    out.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (str::is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !str::is_space(text[j])) ++j;
    std::string_view chunk(text.data() + i, j - i);

    // Leading punctuation, one character (or run of identical dashes/dots) at a time.
    std::size_t b = 0;
    while (b < chunk.size() && !detail::is_word_char(chunk[b])) {
      std::size_t e = b + 1;
      while (e < chunk.size() && chunk[e] == chunk[b] && (chunk[b] == '-' || chunk[b] == '.')) ++e;
      emit(i + b, e - b, true);
      b = e;
    }
    // Trailing punctuation, collected right to left and emitted afterwards.
    std::size_t e = chunk.size();
    std::vector<std::pair<std::size_t, std::size_t>> trailing;
    while (e > b) {
      char c = chunk[e - 1];
      if (detail::is_word_char(c)) break;
      if (c == '.') {
        std::string lower = str::to_lower(chunk.substr(b, e - b));
        if (detail::is_abbreviation(lower)) break;
      }
      std::size_t s = e - 1;
      while (s > b && chunk[s - 1] == c && (c == '-' || c == '.')) --s;
      trailing.emplace_back(s, e - s);
      e = s;
    }
    if (e > b) {
      std::string_view word = chunk.substr(b, e - b);
      std::string lower = str::to_lower(word);
      // Internal dashes ("sacred--profane") separate words.
      std::size_t dd = word.find("--");
      if (dd != std::string_view::npos && dd > 0) {
        std::size_t w = i + b;
        emit(w, dd, false);
        std::size_t k = dd;
        while (k < word.size() && word[k] == '-') ++k;
        emit(w + dd, k - dd, true);
        if (k < word.size()) emit(w + k, word.size() - k, !detail::has_word_char(word.substr(k)));
      } else if (std::size_t cl = detail::clitic_length(lower)) {
        emit(i + b, word.size() - cl, false);
        emit(i + b + word.size() - cl, cl, false);
      } else {
        emit(i + b, word.size(), false);
      }
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) emit(i + it->first, it->second, true);
    i = j;
  }

  int position = 0;
  for (auto& t : out) {
    if (t.pos != Pos::kPunctuation) t.position = ++position;
  }
  return out;
}

// Rebuilds a sentence by joining surfaces with single spaces.
inline std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

// Number of non-punctuation tokens.
inline int word_count(const std::vector<Token>& tokens) {
  int n = 0;
  for (const auto& t : tokens) n += t.is_punctuation() ? 0 : 1;
  return n;
}

}  // namespace semfields
