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
#include <string>
#include <vector>

#include "semfields/semfields.hpp"
#include "test_support.hpp"

namespace semfields {
namespace {

using testing::kkt_violation;
using testing::separable_set;

struct Xy {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
};

Xy unpack(const std::vector<LabeledInstance>& data) {
  Xy out;
  for (const auto& d : data) {
    out.x.push_back(d.vector);
    out.y.push_back(label_sign(d.label));
  }
  return out;
}

std::vector<LabeledInstance> xor_set() {
  return {{{1, 1}, Label::kPun, "a"},
          {{-1, -1}, Label::kPun, "b"},
          {{1, -1}, Label::kNotPun, "c"},
          {{-1, 1}, Label::kNotPun, "d"}};
}

TEST(Kernel, RbfMatrixSymmetricWithUnitDiagonal) {
  Rng rng(9);
  auto data = separable_set(rng, 30, 4);
  for (double gamma : {0.01, 0.5, 3.0}) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      EXPECT_NEAR(kernel(KernelType::kRbf, gamma, data[i].vector, data[i].vector), 1.0, 1e-12);
      for (std::size_t j = 0; j < i; ++j) {
        double a = kernel(KernelType::kRbf, gamma, data[i].vector, data[j].vector);
        double b = kernel(KernelType::kRbf, gamma, data[j].vector, data[i].vector);
        EXPECT_NEAR(a, b, 1e-12);
        EXPECT_GT(a, 0.0);
        EXPECT_LE(a, 1.0);
      }
    }
  }
}

TEST(Kernel, ValuesAgainstDirectFormula) {
  std::vector<double> a = {1.0, 2.0, 0.0};
  std::vector<double> b = {0.0, 1.0, 3.0};
  EXPECT_DOUBLE_EQ(kernel(KernelType::kLinear, 0.0, a, b), 2.0);
  EXPECT_NEAR(kernel(KernelType::kRbf, 0.1, a, b), std::exp(-0.1 * 11.0), 1e-15);
}

TEST(Kernel, ScaleGammaIsInverseOfDimsTimesVariance) {
  std::vector<LabeledInstance> data = {{{0, 2}, Label::kPun, ""}, {{4, 2}, Label::kNotPun, ""}};
  // Values 0, 2, 4, 2: mean 2, population variance 2.
  EXPECT_DOUBLE_EQ(scale_gamma(data), 1.0 / (2.0 * 2.0));
  std::vector<LabeledInstance> flat = {{{1, 1}, Label::kPun, ""}, {{1, 1}, Label::kNotPun, ""}};
  EXPECT_DOUBLE_EQ(scale_gamma(flat), 1.0);
}

// For XOR on the corners of a square every multiplier is equal by symmetry
// and the dual reduces to 4a - 2a^2 (1 - e^{-4g})^2, so the optimum is
// a = 1 / (1 - e^{-4g})^2 with zero bias.
TEST(Smo, XorMatchesClosedFormDual) {
  const double gamma = 0.5;
  auto [x, y] = unpack(xor_set());
  SmoSolution s = solve_smo(x, y, KernelType::kRbf, gamma, 10.0, 1e-6, 100000);
  ASSERT_TRUE(s.converged);
  const double e = std::exp(-4.0 * gamma);
  const double a = 1.0 / ((1.0 - e) * (1.0 - e));
  for (double v : s.alpha) EXPECT_NEAR(v, a, 1e-4);
  EXPECT_NEAR(s.bias, 0.0, 1e-6);
  EXPECT_NEAR(dual_objective(s.alpha, s.Q), 2.0 * a, 1e-6);
}

TEST(Smo, XorCapsAtC) {
  auto [x, y] = unpack(xor_set());
  SmoSolution s = solve_smo(x, y, KernelType::kRbf, 0.5, 1.0, 1e-6, 100000);
  for (double v : s.alpha) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(Smo, SeparableSetsSatisfyKkt) {
  Rng rng(2026);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 4 + rng.below(37);
    std::size_t dims = 2 + rng.below(4);
    auto data = separable_set(rng, n, dims);
    auto [x, y] = unpack(data);
    for (KernelType k : {KernelType::kLinear, KernelType::kRbf}) {
      const double C = 100.0;
      SmoSolution s = solve_smo(x, y, k, 1.0, C, 1e-3, 100000);
      ASSERT_TRUE(s.converged) << "trial " << trial;
      EXPECT_LT(kkt_violation(s, C), 1e-3) << "trial " << trial << " kernel " << kernel_name(k);
    }
  }
}

// Moving any feasible pair away from the solution must not raise the dual
// objective by more than the tolerance allows.
TEST(Smo, PairPerturbationsDoNotImproveDual) {
  Rng rng(77);
  auto data = separable_set(rng, 24, 3);
  auto [x, y] = unpack(data);
  const double C = 5.0;
  SmoSolution s = solve_smo(x, y, KernelType::kRbf, 0.7, C, 1e-6, 100000);
  ASSERT_TRUE(s.converged);
  const double base = dual_objective(s.alpha, s.Q);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      for (double t : {1e-3, -1e-3, 1e-2, -1e-2}) {
        auto a = s.alpha;
        a[i] += t * y[i];
        a[j] -= t * y[j];
        if (a[i] < 0 || a[i] > C || a[j] < 0 || a[j] > C) continue;
        EXPECT_LE(dual_objective(a, s.Q), base + 1e-7) << i << "," << j << " t=" << t;
      }
    }
  }
}

TEST(Svm, FitsSeparableDataExactly) {
  Rng rng(4);
  auto data = separable_set(rng, 40, 3);
  for (KernelType k : {KernelType::kLinear, KernelType::kRbf}) {
    SvmParams p;
    p.kernel = k;
    p.C = 100.0;
    SvmModel m = train_svm(data, p);
    for (const auto& d : data) {
      EXPECT_EQ(m.decision_value(d.vector) > 0 ? Label::kPun : Label::kNotPun, d.label);
    }
    EXPECT_TRUE(m.meta.converged);
    EXPECT_EQ(m.support_vectors.size(), m.dual_coefs.size());
  }
}

TEST(Svm, StandardizationIsAppliedAtPrediction) {
  std::vector<LabeledInstance> data = {{{100, 0}, Label::kPun, ""}, {{200, 0}, Label::kPun, ""},
                                       {{100, 1}, Label::kNotPun, ""}, {{200, 1}, Label::kNotPun, ""}};
  SvmParams p;
  p.kernel = KernelType::kLinear;
  p.standardize = true;
  SvmModel m = train_svm(data, p);
  EXPECT_GT(m.decision_value(std::vector<double>{150, 0}), 0.0);
  EXPECT_LT(m.decision_value(std::vector<double>{150, 1}), 0.0);
}

TEST(Svm, IterationCapRaisesWithPartialModel) {
  Rng rng(8);
  auto data = separable_set(rng, 30, 3, 0.0);
  SvmParams p;
  p.max_iterations = 1;
  p.C = 100.0;
  try {
    train_svm(data, p);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonConvergence);
    EXPECT_EQ(e.partial_model().dims, 3u);
    EXPECT_FALSE(e.partial_model().meta.converged);
    EXPECT_EQ(e.partial_model().meta.iterations, 1u);
  }
}

TEST(Svm, RejectsSingleClassAndEmptyData) {
  std::vector<LabeledInstance> one = {{{1, 2}, Label::kPun, ""}, {{2, 1}, Label::kPun, ""}};
  try {
    train_svm(one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingleClassData);
  }
  try {
    train_svm(std::vector<LabeledInstance>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyData);
  }
}

TEST(Svm, DimensionMismatchAtPrediction) {
  SvmModel m = train_svm(xor_set());
  try {
    m.decision_value(std::vector<double>{1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Model, RoundTripPreservesPredictions) {
  Rng rng(31);
  auto data = separable_set(rng, 30, 4);
  for (ModelFamily f : {ModelFamily::kSvmLinear, ModelFamily::kSvmRbf, ModelFamily::kLogReg}) {
    TrainConfig cfg;
    cfg.family = f;
    cfg.standardize = true;
    Classifier m = train_classifier(data, cfg);
    std::string bytes = serialize_model(m);
    Classifier back = deserialize_model(bytes);
    EXPECT_EQ(model_family(back), f);
    EXPECT_EQ(serialize_model(back), bytes);
    for (const auto& d : data) {
      EXPECT_EQ(predict(m, d.vector).decision_value, predict(back, d.vector).decision_value);
    }
  }
}

TEST(Model, CorruptBytesAreRejected) {
  Classifier m = train_classifier(xor_set(), TrainConfig{});
  std::string bytes = serialize_model(m);
  for (std::string bad : {std::string("nope"), bytes.substr(0, bytes.size() / 2), "X" + bytes.substr(1)}) {
    try {
      deserialize_model(bad);
      ADD_FAILURE() << "accepted corrupt model";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadModelFile);
    }
  }
}

TEST(Model, GridSearchPicksFromGrid) {
  Rng rng(12);
  auto data = separable_set(rng, 40, 3);
  TrainConfig cfg;
  cfg.family = ModelFamily::kSvmRbf;
  GridPoint g = grid_search(data, cfg);
  EXPECT_TRUE(g.C == 0.1 || g.C == 1.0 || g.C == 10.0);
  EXPECT_GT(g.cv_f_avg, 0.8);
  EXPECT_EQ(grid_search(data, cfg).cv_f_avg, g.cv_f_avg);
}

}  // namespace
}  // namespace semfields
