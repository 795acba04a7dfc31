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

// L2-regularized logistic regression by full-batch gradient descent with a
// fixed 1/L step, where L bounds the Hessian. Minimizes
//   (1/n) sum log(1 + exp(-y_i (w.x_i + b))) + (l2/2) |w|^2
// until the gradient norm drops below tol.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "semfields/dataset.hpp"
#include "semfields/error.hpp"
#include "semfields/svm.hpp"

namespace semfields {

struct LogRegParams {
  double l2 = 0.01;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  long max_iterations = 200000;
  bool standardize = false;
};

struct LogRegModel {
  std::size_t dims = 0;
  Scaler scaler;
  std::vector<double> weights;
  double bias = 0.0;
  double l2 = 0.0;
  TrainingMeta meta;

  double decision_value(std::span<const double> x) const {
    if (x.size() != dims) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector has " + std::to_string(x.size()) + " features, model expects " + std::to_string(dims));
    }
    std::vector<double> z = scaler.apply(x);
    return dot(weights, z) + bias;
  }

  double probability(std::span<const double> x) const { return 1.0 / (1.0 + std::exp(-decision_value(x))); }
};

inline double log1p_exp(double t) { return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

inline LogRegModel train_logreg(std::span<const LabeledInstance> data, const LogRegParams& params = {}) {
  check_training_data(data);
  if (params.l2 < 0.0) throw Error(ErrorCode::kInvalidArgument, "l2 must be non-negative");

  LogRegModel m;
  m.dims = data.front().vector.size();
  m.l2 = params.l2;
  if (params.standardize) m.scaler = Scaler::fit(data);
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  double max_norm = 0.0;
  for (const auto& d : data) {
    x.push_back(m.scaler.apply(d.vector));
    y.push_back(label_sign(d.label));
    max_norm = std::max(max_norm, dot(x.back(), x.back()) + 1.0);
  }
  const double n = static_cast<double>(x.size());
  const double lipschitz = 0.25 * max_norm + params.l2;
  const double step = 1.0 / lipschitz;

  std::vector<double> w(m.dims, 0.0);
  double b = 0.0;
  std::vector<double> gw(m.dims);
  std::uint64_t it = 0;
  bool converged = false;
  for (; static_cast<long>(it) < params.max_iterations; ++it) {
    std::fill(gw.begin(), gw.end(), 0.0);
    double gb = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double margin = y[i] * (dot(w, x[i]) + b);
      double coef = -y[i] / (1.0 + std::exp(margin)) / n;
      for (std::size_t k = 0; k < m.dims; ++k) gw[k] += coef * x[i][k];
      gb += coef;
    }
    double norm = gb * gb;
    for (std::size_t k = 0; k < m.dims; ++k) {
      gw[k] += params.l2 * w[k];
      norm += gw[k] * gw[k];
    }
    if (std::sqrt(norm) < params.tol) {
      converged = true;
      break;
    }
    for (std::size_t k = 0; k < m.dims; ++k) w[k] -= step * gw[k];
    b -= step * gb;
  }
  m.weights = std::move(w);
  m.bias = b;
  m.meta = TrainingMeta{params.seed, it, params.tol, converged};
  if (!converged) {
    throw Error(ErrorCode::kNonConvergence,
                "gradient descent hit the iteration cap of " + std::to_string(params.max_iterations));
  }
  return m;
}

inline double logreg_objective(const LogRegModel& m, std::span<const LabeledInstance> data) {
  double loss = 0.0;
  for (const auto& d : data) loss += log1p_exp(-label_sign(d.label) * m.decision_value(d.vector));
  loss /= static_cast<double>(data.size());
  return loss + 0.5 * m.l2 * dot(m.weights, m.weights);
}

}  // namespace semfields
