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

// Stopword list, tagging lexicon and the deterministic part-of-speech tagger.

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semfields/error.hpp"
#include "semfields/morphology.hpp"
#include "semfields/strings.hpp"
#include "semfields/tokenizer.hpp"

namespace semfields {

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::vector<std::string> words) {
    for (auto& w : words) words_.insert(str::to_lower(str::straighten_quotes(w)));
  }

  // Personal and possessive pronouns, articles, "to", coordinating
  // conjunctions, auxiliary do/did and the commonest prepositions and
  // wh-words. "be" and "use" stay content words.
  static StopwordList defaults() {
    return StopwordList({
        "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself", "yourselves", "he", "him",
        "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself", "we", "us", "our",
        "ours", "ourselves", "they", "them", "their", "theirs", "themselves", "one's",
        "a", "an", "the", "this", "that", "these", "those",
        "to", "and", "but", "or", "nor", "so", "yet", "for",
        "do", "does", "did", "n't", "not", "'s", "'m", "'re", "'ve", "'ll", "'d",
        "of", "in", "on", "at", "by", "with", "from", "into", "onto", "about", "as", "than", "if",
        "when", "what", "who", "whom", "which", "why", "how", "where", "while", "because", "then",
        "there", "here", "can", "could", "will", "would", "shall", "should", "may", "might", "must",
    });
  }

  // One word per line; blank lines and '#' comments ignored.
  static StopwordList load(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
      std::string_view v = str::trim(line);
      if (v.empty() || v.front() == '#') continue;
      words.emplace_back(v);
    }
    return StopwordList(std::move(words));
  }

  bool contains(std::string_view word) const {
    return words_.count(str::to_lower(str::straighten_quotes(word))) > 0;
  }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;
};

// word -> candidate tags, in priority order. Loaded from word<TAB>tag lines.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      ++row;
      std::string_view v = str::trim(line);
      if (v.empty() || v.front() == '#') continue;
      auto fields = str::split(v, '\t');
      if (fields.size() != 2) throw RowError(ErrorCode::kParseError, row, "expected word<TAB>tag");
      auto pos = parse_pos(fields[1]);
      if (!pos) throw RowError(ErrorCode::kParseError, row, "unknown tag '" + fields[1] + "'");
      lex.add(fields[0], *pos);
    }
    return lex;
  }

  void add(std::string_view word, Pos pos) {
    auto& tags = tags_[str::to_lower(str::trim(word))];
    if (std::find(tags.begin(), tags.end(), pos) == tags.end()) tags.push_back(pos);
  }

  void merge(const Lexicon& other) {
    for (const auto& [w, tags] : other.tags_) {
      for (Pos p : tags) add(w, p);
    }
  }

  std::span<const Pos> tags(std::string_view word) const {
    auto it = tags_.find(str::to_lower(word));
    if (it == tags_.end()) return {};
    return it->second;
  }

  bool contains(std::string_view word) const { return tags_.count(str::to_lower(word)) > 0; }
  std::size_t size() const { return tags_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Pos>> tags_;
};

namespace detail {

struct ClosedWord {
  std::string_view word;
  Pos pos;
};

// Closed-class words take priority over the open-class lexicon.
inline constexpr ClosedWord kClosedClass[] = {
    {"i", Pos::kPronoun}, {"me", Pos::kPronoun}, {"you", Pos::kPronoun}, {"he", Pos::kPronoun},
    {"him", Pos::kPronoun}, {"she", Pos::kPronoun}, {"her", Pos::kPronoun}, {"it", Pos::kPronoun},
    {"we", Pos::kPronoun}, {"us", Pos::kPronoun}, {"they", Pos::kPronoun}, {"them", Pos::kPronoun},
    {"my", Pos::kPronoun}, {"your", Pos::kPronoun}, {"his", Pos::kPronoun}, {"its", Pos::kPronoun},
    {"our", Pos::kPronoun}, {"their", Pos::kPronoun}, {"mine", Pos::kPronoun}, {"yours", Pos::kPronoun},
    {"myself", Pos::kPronoun}, {"yourself", Pos::kPronoun}, {"himself", Pos::kPronoun},
    {"herself", Pos::kPronoun}, {"itself", Pos::kPronoun}, {"themselves", Pos::kPronoun},
    {"ourselves", Pos::kPronoun}, {"someone", Pos::kPronoun}, {"something", Pos::kPronoun},
    {"anyone", Pos::kPronoun}, {"anything", Pos::kPronoun}, {"everyone", Pos::kPronoun},
    {"everything", Pos::kPronoun}, {"nothing", Pos::kPronoun}, {"nobody", Pos::kPronoun},
    {"somebody", Pos::kPronoun}, {"everybody", Pos::kPronoun}, {"who", Pos::kPronoun},
    {"whom", Pos::kPronoun}, {"what", Pos::kPronoun}, {"which", Pos::kPronoun}, {"one's", Pos::kPronoun},
    {"a", Pos::kDeterminer}, {"an", Pos::kDeterminer}, {"the", Pos::kDeterminer},
    {"this", Pos::kDeterminer}, {"these", Pos::kDeterminer}, {"those", Pos::kDeterminer},
    {"that", Pos::kDeterminer}, {"every", Pos::kDeterminer}, {"each", Pos::kDeterminer},
    {"some", Pos::kDeterminer}, {"any", Pos::kDeterminer}, {"no", Pos::kDeterminer},
    {"all", Pos::kDeterminer}, {"both", Pos::kDeterminer}, {"another", Pos::kDeterminer},
    {"many", Pos::kDeterminer}, {"much", Pos::kDeterminer}, {"few", Pos::kDeterminer},
    {"several", Pos::kDeterminer},
    {"and", Pos::kConjunction}, {"but", Pos::kConjunction}, {"or", Pos::kConjunction},
    {"nor", Pos::kConjunction}, {"yet", Pos::kConjunction}, {"so", Pos::kConjunction},
    {"because", Pos::kConjunction}, {"if", Pos::kConjunction}, {"when", Pos::kConjunction},
    {"while", Pos::kConjunction}, {"although", Pos::kConjunction}, {"though", Pos::kConjunction},
    {"unless", Pos::kConjunction}, {"whether", Pos::kConjunction}, {"than", Pos::kConjunction},
    {"where", Pos::kConjunction}, {"why", Pos::kConjunction}, {"how", Pos::kConjunction},
    {"of", Pos::kPreposition}, {"in", Pos::kPreposition}, {"on", Pos::kPreposition},
    {"at", Pos::kPreposition}, {"by", Pos::kPreposition}, {"for", Pos::kPreposition},
    {"with", Pos::kPreposition}, {"from", Pos::kPreposition}, {"into", Pos::kPreposition},
    {"onto", Pos::kPreposition}, {"about", Pos::kPreposition}, {"as", Pos::kPreposition},
    {"to", Pos::kPreposition}, {"over", Pos::kPreposition}, {"under", Pos::kPreposition},
    {"after", Pos::kPreposition}, {"before", Pos::kPreposition}, {"through", Pos::kPreposition},
    {"between", Pos::kPreposition}, {"against", Pos::kPreposition}, {"without", Pos::kPreposition},
    {"within", Pos::kPreposition}, {"during", Pos::kPreposition}, {"like", Pos::kPreposition},
    {"across", Pos::kPreposition}, {"behind", Pos::kPreposition}, {"around", Pos::kPreposition},
    {"up", Pos::kPreposition}, {"down", Pos::kPreposition}, {"off", Pos::kPreposition},
    {"out", Pos::kAdverb}, {"away", Pos::kAdverb}, {"back", Pos::kAdverb}, {"along", Pos::kPreposition},
    {"n't", Pos::kAdverb}, {"not", Pos::kAdverb}, {"never", Pos::kAdverb}, {"very", Pos::kAdverb},
    {"too", Pos::kAdverb}, {"also", Pos::kAdverb}, {"then", Pos::kAdverb}, {"there", Pos::kAdverb},
    {"here", Pos::kAdverb}, {"now", Pos::kAdverb}, {"just", Pos::kAdverb}, {"still", Pos::kAdverb},
    {"always", Pos::kAdverb}, {"often", Pos::kAdverb}, {"again", Pos::kAdverb},
    {"can", Pos::kVerb}, {"could", Pos::kVerb}, {"will", Pos::kVerb}, {"would", Pos::kVerb},
    {"shall", Pos::kVerb}, {"should", Pos::kVerb}, {"may", Pos::kVerb}, {"might", Pos::kVerb},
    {"must", Pos::kVerb}, {"ca", Pos::kVerb}, {"wo", Pos::kVerb}, {"'ll", Pos::kVerb},
    {"'d", Pos::kVerb}, {"'ve", Pos::kVerb}, {"'re", Pos::kVerb}, {"'m", Pos::kVerb},
    {"'s", Pos::kVerb},
};

inline const std::unordered_map<std::string_view, Pos>& closed_class() {
  static const std::unordered_map<std::string_view, Pos> table = [] {
    std::unordered_map<std::string_view, Pos> t;
    for (const auto& w : kClosedClass) t.emplace(w.word, w.pos);
    return t;
  }();
  return table;
}

// Prepositions and adverbs that become particles right after a verb.
inline bool is_particle_word(std::string_view w) {
  static constexpr std::string_view kParticles[] = {"up",   "down", "out",     "off",    "away",  "back",
                                                    "over", "on",   "in",      "through", "along", "around",
                                                    "about", "by",  "together", "apart"};
  return std::find(std::begin(kParticles), std::end(kParticles), w) != std::end(kParticles);
}

inline bool is_subject_pronoun(std::string_view w) {
  static constexpr std::string_view kSubjects[] = {"i", "you", "he", "she", "it", "we", "they", "who"};
  return std::find(std::begin(kSubjects), std::end(kSubjects), w) != std::end(kSubjects);
}

inline bool is_possessive_determiner(std::string_view w) {
  static constexpr std::string_view kPoss[] = {"my", "your", "his", "her", "its", "our", "their", "one's"};
  return std::find(std::begin(kPoss), std::end(kPoss), w) != std::end(kPoss);
}

inline bool is_modal(std::string_view w) {
  static constexpr std::string_view kModals[] = {"can", "could", "will", "would", "shall", "should",
                                                 "may",  "might", "must", "ca",    "wo",    "'ll",
                                                 "'d",   "do",    "does", "did",   "n't",   "not"};
  return std::find(std::begin(kModals), std::end(kModals), w) != std::end(kModals);
}

inline bool is_be_or_have(std::string_view w) {
  static constexpr std::string_view kAux[] = {"be",  "am",  "is",  "are", "was",  "were", "been",
                                              "being", "'m", "'re", "'s", "have", "has",  "had",
                                              "'ve", "get", "got", "gets", "getting"};
  return std::find(std::begin(kAux), std::end(kAux), w) != std::end(kAux);
}

inline bool has_adjective_suffix(std::string_view w) {
  static constexpr std::string_view kSuffixes[] = {"ous", "ful", "ive", "able", "ible", "al",  "ic",
                                                   "less", "ish", "ary", "ent", "ant", "y"};
  if (w.size() < 5) return false;
  for (auto s : kSuffixes) {
    if (str::ends_with(w, s)) {
      // "-y" and "-al" are noisy; require a longer word.
      if ((s == "y" || s == "al" || s == "ent" || s == "ant") && w.size() < 6) return false;
      return true;
    }
  }
  return false;
}

inline bool has_noun_suffix(std::string_view w) {
  static constexpr std::string_view kSuffixes[] = {"tion", "sion", "ness", "ment", "ity", "ship",
                                                   "hood", "ism", "ist", "er",  "or",  "ance", "ence"};
  for (auto s : kSuffixes) {
    if (w.size() > s.size() + 2 && str::ends_with(w, s)) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic lexicon + suffix tagger. Closed-class words come first,
// then the open-class lexicon (ambiguous entries resolved from the left
// context), then suffix heuristics; anything left is a noun.
class PosTagger {
 public:
  PosTagger() = default;
  explicit PosTagger(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

  const Lexicon& lexicon() const { return lexicon_; }

  void tag(std::vector<Token>& tokens) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].is_punctuation()) continue;
      tokens[i].pos = tag_one(tokens, i);
    }
  }

 private:
  static std::string lower_at(const std::vector<Token>& tokens, std::size_t i) {
    return str::to_lower(tokens[i].surface);
  }

  // Previous non-punctuation token inside the same clause, if any.
  static const Token* previous(const std::vector<Token>& tokens, std::size_t i) {
    if (i == 0 || tokens[i - 1].is_punctuation()) return nullptr;
    return &tokens[i - 1];
  }

  bool next_looks_verbal(const std::vector<Token>& tokens, std::size_t i) const {
    if (i + 1 >= tokens.size() || tokens[i + 1].is_punctuation()) return false;
    std::string w = lower_at(tokens, i + 1);
    if (detail::closed_class().count(w)) return false;
    if (detail::is_be_or_have(w)) return true;
    auto tags = lexicon_.tags(w);
    if (!tags.empty()) {
      return std::find(tags.begin(), tags.end(), Pos::kVerb) != tags.end();
    }
    return !detail::has_noun_suffix(w) && !str::ends_with(w, "ly");
  }

  Pos tag_one(const std::vector<Token>& tokens, std::size_t i) const {
    const std::string w = lower_at(tokens, i);
    const Token* prev = previous(tokens, i);
    const std::string pw = prev ? str::to_lower(prev->surface) : std::string();
    const Pos ppos = prev ? prev->pos : Pos::kOther;
    const bool after_verb = prev && (ppos == Pos::kVerb || ppos == Pos::kParticiple);

    if (auto it = detail::closed_class().find(w); it != detail::closed_class().end()) {
      if (w == "to") return next_looks_verbal(tokens, i) ? Pos::kParticle : Pos::kPreposition;
      if (w == "that") {
        bool next_nominal = i + 1 < tokens.size() && !tokens[i + 1].is_punctuation() &&
                            !detail::closed_class().count(lower_at(tokens, i + 1)) &&
                            !next_looks_verbal(tokens, i);
        return next_nominal ? Pos::kDeterminer : Pos::kConjunction;
      }
      if (after_verb && detail::is_particle_word(w)) return Pos::kParticle;
      return it->second;
    }
    if (after_verb && detail::is_particle_word(w)) return Pos::kParticle;

    if (std::isdigit(static_cast<unsigned char>(w.front()))) return Pos::kOther;
    if (!lexicon_.contains(w) && morphology::irregular_verb_base(w)) {
      bool past_participle_slot = prev && (detail::is_be_or_have(pw) || ppos == Pos::kAdverb);
      return past_participle_slot ? Pos::kParticiple : Pos::kVerb;
    }

    const bool after_nominal_slot = ppos == Pos::kDeterminer || ppos == Pos::kAdjective ||
                                    (ppos == Pos::kPronoun && detail::is_possessive_determiner(pw));
    const bool after_verbal_slot = (ppos == Pos::kPronoun && detail::is_subject_pronoun(pw)) ||
                                   ppos == Pos::kParticle || detail::is_modal(pw);
    const bool after_aux = prev && detail::is_be_or_have(pw);

    auto tags = lexicon_.tags(w);
    if (!tags.empty()) {
      auto has = [&](Pos p) { return std::find(tags.begin(), tags.end(), p) != tags.end(); };
      if (tags.size() == 1) {
        Pos only = tags.front();
        if (only == Pos::kVerb && (after_aux || ppos == Pos::kAdverb) && is_participle_form(w)) {
          return Pos::kParticiple;
        }
        return only;
      }
      if (after_nominal_slot) {
        bool next_is_noun = i + 1 < tokens.size() && !tokens[i + 1].is_punctuation() &&
                            has_tag(lower_at(tokens, i + 1), Pos::kNoun);
        if (has(Pos::kAdjective) && next_is_noun) return Pos::kAdjective;
        if (has(Pos::kNoun)) return Pos::kNoun;
        if (has(Pos::kAdjective)) return Pos::kAdjective;
      }
      if (after_aux && has(Pos::kParticiple)) return Pos::kParticiple;
      if (after_aux && has(Pos::kAdjective)) return Pos::kAdjective;
      if (after_aux && has(Pos::kVerb) && is_participle_form(w)) return Pos::kParticiple;
      if (after_verbal_slot && has(Pos::kVerb)) return Pos::kVerb;
      if (ppos == Pos::kNoun && has(Pos::kVerb) && !has_noun_only_context(tokens, i)) return Pos::kVerb;
      return tags.front();
    }

    // Suffix heuristics for words the lexicon does not know.
    const bool capitalized = std::isupper(static_cast<unsigned char>(tokens[i].surface.front())) && tokens[i].position > 1;
    if (capitalized) return Pos::kNoun;
    if (w.size() > 4 && str::ends_with(w, "ly")) return Pos::kAdverb;
    if (w.size() > 4 && (str::ends_with(w, "ing") || str::ends_with(w, "ed"))) {
      if (after_aux || ppos == Pos::kAdverb) return Pos::kParticiple;
      if (after_nominal_slot && str::ends_with(w, "ed")) return Pos::kAdjective;
      if (after_nominal_slot) return Pos::kNoun;
      return Pos::kVerb;
    }
    if (after_verbal_slot && !detail::has_noun_suffix(w)) return Pos::kVerb;
    if (detail::has_adjective_suffix(w)) {
      bool next_is_noun = i + 1 < tokens.size() && !tokens[i + 1].is_punctuation() &&
                          !detail::closed_class().count(lower_at(tokens, i + 1));
      if (after_aux || next_is_noun) return Pos::kAdjective;
    }
    return Pos::kNoun;
  }

  bool has_tag(const std::string& w, Pos p) const {
    auto tags = lexicon_.tags(w);
    if (tags.empty()) return !detail::closed_class().count(w) && !str::ends_with(w, "ly");
    return std::find(tags.begin(), tags.end(), p) != tags.end();
  }

  // A noun/verb word directly followed by a determiner reads as a verb.
  bool has_noun_only_context(const std::vector<Token>& tokens, std::size_t i) const {
    if (i + 1 >= tokens.size() || tokens[i + 1].is_punctuation()) return true;
    auto it = detail::closed_class().find(lower_at(tokens, i + 1));
    if (it == detail::closed_class().end()) return true;
    return !(it->second == Pos::kDeterminer || it->second == Pos::kPronoun ||
             it->second == Pos::kPreposition || it->second == Pos::kAdverb);
  }

  static bool is_participle_form(std::string_view w) {
    return str::ends_with(w, "ed") || str::ends_with(w, "en") || str::ends_with(w, "ing") ||
           str::ends_with(w, "t") || str::ends_with(w, "n");
  }

  Lexicon lexicon_;
};

}  // namespace semfields
