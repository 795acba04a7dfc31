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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "semfields/semfields.hpp"
#include "test_support.hpp"

namespace semfields {
namespace {

using testing::bundled_analyzer;

// Section sets of the content words in the banker joke, as listed in the
// bundled thesaurus.
const std::map<std::string, std::vector<int>> kBankerSets = {
    {"use", {24, 30}},
    {"be", {0, 19}},
    {"banker", {30, 31}},
    {"lose", {19, 21, 26, 30}},
    {"interest", {1, 7, 16, 24, 25, 30, 31}},
};

const std::vector<int> kBankerVector = {1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1,
                                        0, 0, 2, 0, 1, 0, 0, 2, 1, 1, 0, 0, 0, 4, 2, 0, 0};

// Descending selection sort per block; independent of the library routine.
std::vector<int> block_sort_oracle(std::vector<int> v, const std::vector<std::size_t>& blocks) {
  std::size_t start = 0;
  for (std::size_t len : blocks) {
    for (std::size_t i = start; i < start + len; ++i) {
      std::size_t best = i;
      for (std::size_t j = i + 1; j < start + len; ++j) {
        if (v[j] > v[best]) best = j;
      }
      std::swap(v[i], v[best]);
    }
    start += len;
  }
  return v;
}

TEST(Vectorizer, BankerVectorMatchesSectionSetSums) {
  std::vector<int> oracle(34, 0);
  for (const auto& [word, sections] : kBankerSets) {
    for (int k : sections) ++oracle[static_cast<std::size_t>(k)];
  }
  ASSERT_EQ(oracle, kBankerVector);
  auto s = bundled_analyzer().analyze(testing::kBanker);
  EXPECT_EQ(s.vector.counts, kBankerVector);
  EXPECT_EQ(s.vector.total(), 17);
}

TEST(Vectorizer, SourceWordsTrackContributors) {
  auto s = bundled_analyzer().analyze(testing::kBanker);
  EXPECT_EQ(s.vector.source_words[30], (std::vector<std::string>{"use", "banker", "lose", "interest"}));
  EXPECT_TRUE(s.vector.source_words[2].empty());
}

TEST(Vectorizer, CountsEqualUnitsPerSection) {
  const auto& an = bundled_analyzer();
  for (const char* text : {"She changed her mind and killed time.", testing::kChurch}) {
    auto s = an.analyze(text);
    std::vector<int> expect(34, 0);
    for (const auto& u : s.units) {
      for (int k : u.sections) ++expect[static_cast<std::size_t>(k)];
    }
    EXPECT_EQ(s.vector.counts, expect) << text;
  }
}

TEST(Vectorizer, PartitionedSortOfBankerVector) {
  const std::vector<std::size_t> blocks = {8, 8, 8, 10};
  const std::vector<int> expect = {1, 1, 1, 0, 0, 0, 0, 0,  //
                                   0, 0, 0, 0, 0, 0, 0, 0,  //
                                   2, 1, 1, 0, 0, 0, 0, 0,  //
                                   4, 2, 2, 1, 1, 0, 0, 0, 0, 0};
  std::vector<int> got = sort_partitioned(kBankerVector, blocks);
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got, block_sort_oracle(kBankerVector, blocks));
}

TEST(Vectorizer, FullSortEqualsSingleBlockPartition) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> v(34);
    for (auto& x : v) x = static_cast<int>(rng.below(6));
    const std::vector<std::size_t> one = {34};
    EXPECT_EQ(sort_full(v), sort_partitioned(v, one));
    EXPECT_EQ(sort_full(v), block_sort_oracle(v, one));
    auto p = sort_partitioned(v, default_partition());
    EXPECT_EQ(p, block_sort_oracle(v, default_partition()));
    EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), std::accumulate(v.begin(), v.end(), 0));
  }
}

TEST(Vectorizer, SortsAreIdempotent) {
  auto once = sort_partitioned(kBankerVector, default_partition());
  EXPECT_EQ(sort_partitioned(once, default_partition()), once);
  EXPECT_EQ(sort_full(sort_full(kBankerVector)), sort_full(kBankerVector));
}

TEST(Vectorizer, BadPartitions) {
  for (const std::vector<std::size_t>& bad : {std::vector<std::size_t>{8, 8, 8, 9}, std::vector<std::size_t>{},
                                              std::vector<std::size_t>{34, 0}}) {
    try {
      sort_partitioned(kBankerVector, bad);
      ADD_FAILURE() << "expected BadPartition";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadPartition);
    }
  }
}

TEST(Vectorizer, TransformNames) {
  EXPECT_EQ(parse_transform("sort_full"), VectorTransform::kSortFull);
  EXPECT_EQ(parse_transform("sort-partitioned"), VectorTransform::kSortPartitioned);
  EXPECT_EQ(transform_name(VectorTransform::kNone), "none");
  EXPECT_THROW(parse_transform("shuffle"), Error);
}

TEST(Vectorizer, CsvRow) {
  std::vector<int> v = {0, 2, 1};
  EXPECT_EQ(vector_csv_row(v, "pun"), "0,2,1,pun");
  EXPECT_EQ(vector_csv_header(2), "s0,s1,label");
}

}  // namespace
}  // namespace semfields
