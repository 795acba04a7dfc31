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

#include <cmath>
#include <vector>

#include "semfields/semfields.hpp"
#include "test_support.hpp"

namespace semfields {
namespace {

// Points mirrored across the line x0 = x1, labelled by side.
std::vector<LabeledInstance> mirrored_set() {
  std::vector<LabeledInstance> out;
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    double a = rng.uniform() * 2.0;
    double b = a + 0.2 + rng.uniform();
    out.push_back({{a, b}, Label::kPun, ""});
    out.push_back({{b, a}, Label::kNotPun, ""});
  }
  return out;
}

TEST(LogReg, LearnsTheBisector) {
  auto data = mirrored_set();
  LogRegParams p;
  p.l2 = 0.01;
  LogRegModel m = train_logreg(data, p);
  ASSERT_EQ(m.weights.size(), 2u);
  EXPECT_LT(m.weights[0], 0.0);
  EXPECT_NEAR(m.weights[0], -m.weights[1], 1e-4);
  EXPECT_NEAR(m.bias, 0.0, 1e-4);
  for (const auto& d : data) {
    EXPECT_EQ(m.decision_value(d.vector) > 0 ? Label::kPun : Label::kNotPun, d.label);
  }
  EXPECT_NEAR(m.probability(std::vector<double>{1.0, 1.0}), 0.5, 1e-4);
}

TEST(LogReg, SolutionIsALocalMinimumOfTheObjective) {
  auto data = mirrored_set();
  LogRegModel m = train_logreg(data);
  const double base = logreg_objective(m, data);
  for (std::size_t k = 0; k <= m.weights.size(); ++k) {
    for (double h : {1e-3, -1e-3}) {
      LogRegModel moved = m;
      if (k < m.weights.size()) moved.weights[k] += h;
      else moved.bias += h;
      EXPECT_GE(logreg_objective(moved, data), base - 1e-9);
    }
  }
}

TEST(LogReg, ObjectiveMatchesHandComputation) {
  std::vector<LabeledInstance> data = {{{1.0}, Label::kPun, ""}, {{-1.0}, Label::kNotPun, ""}};
  LogRegModel m;
  m.dims = 1;
  m.weights = {2.0};
  m.bias = 0.5;
  m.l2 = 0.1;
  // Margins 2.5 and 1.5.
  double expect = (std::log1p(std::exp(-2.5)) + std::log1p(std::exp(-1.5))) / 2.0 + 0.5 * 0.1 * 4.0;
  EXPECT_NEAR(logreg_objective(m, data), expect, 1e-12);
}

TEST(LogReg, IterationCapAndBadArguments) {
  auto data = mirrored_set();
  LogRegParams p;
  p.max_iterations = 3;
  try {
    train_logreg(data, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonConvergence);
  }
  p = {};
  p.l2 = -1.0;
  EXPECT_THROW(train_logreg(data, p), Error);
}

}  // namespace
}  // namespace semfields
