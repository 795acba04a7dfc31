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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "semfields/morphology.hpp"
#include "semfields/strings.hpp"
#include "semfields/tokenizer.hpp"

namespace semfields {

// Rule-based lemmatizer: exception tables first, then suffix stripping.
// When a known-word predicate is supplied (typically "is in the thesaurus
// index or the tagging lexicon"), the first suffix candidate that is a known
// word wins; otherwise fixed fallbacks apply. Unknown forms pass through.
class Lemmatizer {
 public:
  using KnownWord = std::function<bool(std::string_view)>;

  Lemmatizer() = default;
  explicit Lemmatizer(KnownWord known) : known_(std::move(known)) {}

  std::string lemmatize(const Token& token) const { return lemmatize(token.surface, token.pos); }

  std::string lemmatize(std::string_view surface, Pos pos) const {
    std::string w = str::to_lower(str::straighten_quotes(surface));
    if (pos == Pos::kPunctuation || w.empty()) return w;
    if (w == "'s" && pos == Pos::kVerb) return "be";
    switch (pos) {
      case Pos::kVerb:
      case Pos::kParticiple:
        return verb_lemma(w);
      case Pos::kNoun:
        return noun_lemma(w);
      default:
        if (auto base = morphology::irregular_verb_base(w); base && (w == "n't" || w == "ca" || w == "wo")) {
          return std::string(*base);
        }
        return w;
    }
  }

 private:
  bool known(std::string_view w) const { return known_ && known_(w); }

  std::string pick(const std::vector<std::string>& candidates, const std::string& word,
                   const std::string& fallback) const {
    for (const auto& c : candidates) {
      if (c.size() >= 2 && known(c)) return c;
    }
    if (known(word)) return word;
    return fallback;
  }

  static bool doubled_final(std::string_view stem) {
    return stem.size() >= 3 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
           std::string_view("bdfgklmnprstvz").find(stem.back()) != std::string_view::npos;
  }

  std::string verb_lemma(const std::string& w) const {
    if (auto base = morphology::irregular_verb_base(w)) return std::string(*base);
    const std::size_t n = w.size();
    if (n > 4 && str::ends_with(w, "ied")) {
      return pick({w.substr(0, n - 3) + "y"}, w, w.substr(0, n - 3) + "y");
    }
    if (n > 3 && str::ends_with(w, "ed")) {
      std::string stem = w.substr(0, n - 2);
      std::vector<std::string> c{w.substr(0, n - 1), stem};
      if (doubled_final(stem)) c.push_back(stem.substr(0, stem.size() - 1));
      std::string fallback = doubled_final(stem) ? stem.substr(0, stem.size() - 1) : stem;
      return pick(c, w, fallback);
    }
    if (n > 4 && str::ends_with(w, "ing")) {
      std::string stem = w.substr(0, n - 3);
      std::vector<std::string> c{stem, stem + "e"};
      if (doubled_final(stem)) c.push_back(stem.substr(0, stem.size() - 1));
      if (str::ends_with(stem, "y") && stem.size() > 2) c.push_back(stem.substr(0, stem.size() - 1) + "ie");
      std::string fallback = doubled_final(stem) ? stem.substr(0, stem.size() - 1) : stem;
      if (known(w) && !std::any_of(c.begin(), c.end(), [&](const std::string& s) { return known(s); })) return w;
      return pick(c, w, fallback);
    }
    if (n > 4 && str::ends_with(w, "ies")) {
      return pick({w.substr(0, n - 3) + "y"}, w, w.substr(0, n - 3) + "y");
    }
    if (n > 3 && str::ends_with(w, "es")) {
      return pick({w.substr(0, n - 1), w.substr(0, n - 2)}, w, w.substr(0, n - 1));
    }
    if (n > 2 && w.back() == 's' && !str::ends_with(w, "ss") && !str::ends_with(w, "us")) {
      return pick({w.substr(0, n - 1)}, w, w.substr(0, n - 1));
    }
    return w;
  }

  std::string noun_lemma(const std::string& w) const {
    if (auto base = morphology::irregular_noun_base(w)) return std::string(*base);
    const std::size_t n = w.size();
    if (n <= 3 || w.back() != 's' || str::ends_with(w, "ss") || str::ends_with(w, "us") ||
        str::ends_with(w, "is") || str::ends_with(w, "'s")) {
      return w;
    }
    std::vector<std::string> c;
    if (str::ends_with(w, "ies")) c.push_back(w.substr(0, n - 3) + "y");
    c.push_back(w.substr(0, n - 1));
    if (str::ends_with(w, "es")) c.push_back(w.substr(0, n - 2));
    for (const auto& s : c) {
      if (known(s)) return s;
    }
    if (known(w)) return w;
    if (str::ends_with(w, "ies")) return w.substr(0, n - 3) + "y";
    if (str::ends_with(w, "ches") || str::ends_with(w, "shes") || str::ends_with(w, "xes") ||
        str::ends_with(w, "sses")) {
      return w.substr(0, n - 2);
    }
    return w.substr(0, n - 1);
  }

  KnownWord known_;
};

}  // namespace semfields
