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
#include <numeric>
#include <set>
#include <vector>

#include "semfields/random.hpp"
#include "semfields/strings.hpp"

namespace semfields {
namespace {

TEST(Strings, Fnv1a64KnownVectors) {
  EXPECT_EQ(str::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(str::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(str::fnv1a64("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(str::checksum_tag("a"), "fnv1a64:af63dc4c8601ec8c");
}

TEST(Strings, TrimSplitJoin) {
  EXPECT_EQ(str::trim("  a b \t"), "a b");
  EXPECT_EQ(str::split("a\t\tb", '\t'), (std::vector<std::string>{"a", "", "b"}));
  EXPECT_EQ(str::join({"x", "y", "z"}, ","), "x,y,z");
  EXPECT_EQ(str::squeeze_spaces("a   b  c"), "a b c");
}

TEST(Strings, StraightensCurlyQuotes) {
  EXPECT_EQ(str::straighten_quotes("don’t"), "don't");
  EXPECT_EQ(str::to_lower("ABC d"), "abc d");
}

TEST(Random, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  Rng c(43);
  EXPECT_NE(Rng(42).next(), c.next());
}

TEST(Random, BelowStaysInRangeAndCoversIt) {
  Rng rng(7);
  std::set<std::size_t> seen;
  for (int i = 0; i < 2000; ++i) {
    std::size_t v = rng.below(5);
    ASSERT_LT(v, 5u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(Random, UniformInUnitInterval) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Random, ShuffleIsAPermutation) {
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  Rng rng(11);
  rng.shuffle(w);
  EXPECT_NE(v, w);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(v, w);
}

TEST(Random, DerivedSeedsDependOnSalt) {
  EXPECT_EQ(derive_seed(1, "p001"), derive_seed(1, "p001"));
  EXPECT_NE(derive_seed(1, "p001"), derive_seed(1, "p002"));
  EXPECT_NE(derive_seed(1, "p001"), derive_seed(2, "p001"));
}

}  // namespace
}  // namespace semfields
