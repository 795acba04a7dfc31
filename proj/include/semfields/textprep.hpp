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

#include <string>
#include <string_view>
#include <vector>

#include "semfields/collocations.hpp"
#include "semfields/lemmatizer.hpp"
#include "semfields/tagger.hpp"
#include "semfields/thesaurus.hpp"
#include "semfields/tokenizer.hpp"

namespace semfields {

// tokenize -> tag -> lemmatize -> flag stopwords, against one immutable index.
class TextPipeline {
 public:
  TextPipeline(const ThesaurusIndex& index, StopwordList stopwords, Lexicon lexicon)
      : index_(&index),
        stopwords_(std::move(stopwords)),
        tagger_(std::move(lexicon)),
        lemmatizer_([this](std::string_view w) { return index_->contains(w) || tagger_.lexicon().contains(w); }) {}

  // The lemmatizer captures this; copies would dangle.
  TextPipeline(const TextPipeline&) = delete;
  TextPipeline& operator=(const TextPipeline&) = delete;

  std::vector<Token> prepare(std::string_view sentence) const {
    std::vector<Token> tokens = tokenize(sentence);
    tagger_.tag(tokens);
    for (auto& t : tokens) {
      t.lemma = lemmatizer_.lemmatize(t);
      if (!t.is_punctuation()) {
        t.is_stopword = stopwords_.contains(t.surface) || stopwords_.contains(t.lemma);
      }
    }
    return tokens;
  }

  std::vector<Collocation> collocations(const std::vector<Token>& tokens) const {
    return extract_collocations(tokens, *index_);
  }

  const ThesaurusIndex& index() const { return *index_; }
  const StopwordList& stopwords() const { return stopwords_; }
  const PosTagger& tagger() const { return tagger_; }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

 private:
  const ThesaurusIndex* index_;
  StopwordList stopwords_;
  PosTagger tagger_;
  Lemmatizer lemmatizer_;
};

}  // namespace semfields
