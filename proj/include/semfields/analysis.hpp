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

#include "semfields/textprep.hpp"
#include "semfields/vectorizer.hpp"

namespace semfields {

// One unit of semantic analysis: a non-stop word or a retained collocation.
struct SemanticUnit {
  std::string lemma;
  std::vector<SectionId> sections;
  int position = 0;  // word position; a phrase takes the position of its last token
  bool is_phrase = false;
};

struct AnalyzedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<Collocation> collocations;
  std::vector<SemanticUnit> units;  // sentence order; phrases follow the words
  SemanticVector vector;

  int length() const { return word_count(tokens); }
};

inline std::vector<SemanticUnit> semantic_units(const std::vector<Token>& tokens,
                                                const std::vector<Collocation>& collocations,
                                                const ThesaurusIndex& index) {
  std::vector<SemanticUnit> units;
  for (const auto& t : tokens) {
    if (t.is_punctuation() || t.is_stopword) continue;
    auto s = index.lookup(t.lemma);
    units.push_back(SemanticUnit{t.lemma, {s.begin(), s.end()}, t.position, false});
  }
  for (const auto& c : collocations) {
    auto s = index.lookup(c.surface_lemma);
    units.push_back(SemanticUnit{c.surface_lemma, {s.begin(), s.end()}, c.position, true});
  }
  return units;
}

class Analyzer {
 public:
  Analyzer(const ThesaurusIndex& index, StopwordList stopwords, Lexicon lexicon)
      : pipeline_(index, std::move(stopwords), std::move(lexicon)) {}

  AnalyzedSentence analyze(std::string_view sentence) const {
    AnalyzedSentence out;
    out.text = std::string(sentence);
    out.tokens = pipeline_.prepare(sentence);
    out.collocations = pipeline_.collocations(out.tokens);
    out.units = semantic_units(out.tokens, out.collocations, pipeline_.index());
    out.vector = semantic_vector(out.tokens, out.collocations, pipeline_.index());
    return out;
  }

  const TextPipeline& pipeline() const { return pipeline_; }
  const ThesaurusIndex& index() const { return pipeline_.index(); }

 private:
  TextPipeline pipeline_;
};

}  // namespace semfields
