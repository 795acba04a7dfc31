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

// Section-count vectors: counts[k] is the number of analyzed units (non-stop
// words and retained collocations) whose Section set contains k.

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "semfields/collocations.hpp"
#include "semfields/error.hpp"
#include "semfields/thesaurus.hpp"
#include "semfields/tokenizer.hpp"

namespace semfields {

struct SemanticVector {
  std::vector<int> counts;
  std::vector<std::vector<std::string>> source_words;  // per Section, contributing lemmas/phrases

  explicit SemanticVector(std::size_t dims = kDefaultSectionCount) : counts(dims, 0), source_words(dims) {}

  std::size_t size() const { return counts.size(); }
  int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

  void add(std::string_view unit, std::span<const SectionId> sections) {
    for (SectionId k : sections) {
      auto idx = static_cast<std::size_t>(k);
      if (idx >= counts.size()) throw Error(ErrorCode::kDimensionMismatch, "section id beyond vector length");
      ++counts[idx];
      source_words[idx].emplace_back(unit);
    }
  }
};

inline SemanticVector semantic_vector(std::span<const Token> tokens, std::span<const Collocation> collocations,
                                      const ThesaurusIndex& index) {
  SemanticVector v(index.section_count());
  for (const auto& t : tokens) {
    if (t.is_punctuation() || t.is_stopword) continue;
    v.add(t.lemma, index.lookup(t.lemma));
  }
  for (const auto& c : collocations) v.add(c.surface_lemma, index.lookup(c.surface_lemma));
  return v;
}

inline std::vector<int> sort_full(std::span<const int> counts) {
  std::vector<int> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<std::size_t> default_partition() { return {8, 8, 8, 10}; }

// Sorts each contiguous block descending; block boundaries stay in place.
inline std::vector<int> sort_partitioned(std::span<const int> counts, std::span<const std::size_t> partition) {
  std::size_t total = std::accumulate(partition.begin(), partition.end(), std::size_t{0});
  if (total != counts.size() || partition.empty()) {
    throw Error(ErrorCode::kBadPartition, "partition sizes sum to " + std::to_string(total) +
                                              ", vector length is " + std::to_string(counts.size()));
  }
  std::vector<int> out(counts.begin(), counts.end());
  auto it = out.begin();
  for (std::size_t len : partition) {
    if (len == 0) throw Error(ErrorCode::kBadPartition, "partition contains an empty block");
    std::sort(it, it + static_cast<std::ptrdiff_t>(len), std::greater<>());
    it += static_cast<std::ptrdiff_t>(len);
  }
  return out;
}

enum class VectorTransform { kNone, kSortFull, kSortPartitioned };

inline std::string_view transform_name(VectorTransform t) {
  switch (t) {
    case VectorTransform::kNone: return "none";
    case VectorTransform::kSortFull: return "sort";
    case VectorTransform::kSortPartitioned: return "sort-partitioned";
  }
  return "none";
}

inline VectorTransform parse_transform(std::string_view name) {
  if (name == "none") return VectorTransform::kNone;
  if (name == "sort" || name == "sort_full" || name == "sort-full") return VectorTransform::kSortFull;
  if (name == "sort-partitioned" || name == "sort_partitioned") return VectorTransform::kSortPartitioned;
  throw Error(ErrorCode::kInvalidArgument, "unknown transform '" + std::string(name) + "'");
}

inline std::vector<int> apply_transform(std::span<const int> counts, VectorTransform t,
                                        std::span<const std::size_t> partition) {
  switch (t) {
    case VectorTransform::kNone: return {counts.begin(), counts.end()};
    case VectorTransform::kSortFull: return sort_full(counts);
    case VectorTransform::kSortPartitioned: return sort_partitioned(counts, partition);
  }
  return {counts.begin(), counts.end()};
}

// "c0,c1,...,c33,label"
inline std::string vector_csv_row(std::span<const int> counts, std::string_view label) {
  std::string out;
  for (int c : counts) {
    out += std::to_string(c);
    out.push_back(',');
  }
  out.append(label);
  return out;
}

inline std::string vector_csv_header(std::size_t dims) {
  std::string out;
  for (std::size_t k = 0; k < dims; ++k) out += "s" + std::to_string(k) + ",";
  out += "label";
  return out;
}

inline nlohmann::ordered_json vector_json(const SemanticVector& v, const SectionManifest& manifest) {
  nlohmann::ordered_json sections = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v.counts[k] == 0) continue;
    sections.push_back({{"id", k},
                        {"name", k < manifest.size() ? manifest.at(static_cast<SectionId>(k)).name : ""},
                        {"count", v.counts[k]},
                        {"source_words", v.source_words[k]}});
  }
  return {{"vector", v.counts}, {"sections", sections}};
}

}  // namespace semfields
