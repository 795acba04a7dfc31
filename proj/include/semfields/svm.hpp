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

// Binary soft-margin SVM trained by sequential minimal optimization.
//
// Dual: maximize  sum(a) - 1/2 a'Qa   s.t.  0 <= a_i <= C,  y'a = 0,
// with Q_ij = y_i y_j K(x_i, x_j). Each step picks the maximal violating
// pair (first index wins ties) and solves the two-variable subproblem in
// closed form. Training stops when the violation gap m(a) - M(a) < tol.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semfields/dataset.hpp"
#include "semfields/error.hpp"

namespace semfields {

enum class KernelType : std::uint8_t { kLinear = 1, kRbf = 2 };

inline std::string_view kernel_name(KernelType k) { return k == KernelType::kLinear ? "linear" : "rbf"; }

inline KernelType parse_kernel(std::string_view s) {
  if (s == "linear") return KernelType::kLinear;
  if (s == "rbf") return KernelType::kRbf;
  throw Error(ErrorCode::kInvalidArgument, "unknown kernel '" + std::string(s) + "'");
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return s;
}

inline double kernel(KernelType type, double gamma, std::span<const double> a, std::span<const double> b) {
  if (type == KernelType::kLinear) return dot(a, b);
  return std::exp(-gamma * squared_distance(a, b));
}

// 1 / (n_features * variance of all feature values); 1 when the data is constant.
inline double scale_gamma(std::span<const LabeledInstance> data) {
  double sum = 0.0;
  double sq = 0.0;
  std::size_t n = 0;
  for (const auto& d : data) {
    for (double v : d.vector) {
      sum += v;
      sq += v * v;
      ++n;
    }
  }
  if (n == 0) return 1.0;
  double mean = sum / static_cast<double>(n);
  double var = sq / static_cast<double>(n) - mean * mean;
  const double dims = static_cast<double>(data.front().vector.size());
  return var > 0.0 ? 1.0 / (dims * var) : 1.0;
}

struct SvmParams {
  KernelType kernel = KernelType::kRbf;
  double C = 1.0;
  double gamma = 0.0;  // <= 0 selects scale_gamma()
  double tol = 1e-3;
  std::uint64_t seed = 0;
  long max_iterations = 100000;
  bool standardize = false;
};

struct TrainingMeta {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  double tol = 0.0;
  bool converged = false;
};

struct SvmModel {
  KernelType kernel = KernelType::kRbf;
  double gamma = 0.0;
  double C = 1.0;
  std::size_t dims = 0;
  Scaler scaler;
  std::vector<std::vector<double>> support_vectors;  // scaled space
  std::vector<double> dual_coefs;                    // alpha_i * y_i
  double bias = 0.0;
  TrainingMeta meta;

  double decision_value(std::span<const double> x) const {
    if (x.size() != dims) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector has " + std::to_string(x.size()) + " features, model expects " + std::to_string(dims));
    }
    std::vector<double> z = scaler.apply(x);
    double f = bias;
    for (std::size_t i = 0; i < support_vectors.size(); ++i) {
      f += dual_coefs[i] * semfields::kernel(kernel, gamma, support_vectors[i], z);
    }
    return f;
  }
};

// Full SMO state, kept for auditing (KKT checks, dual objective).
struct SmoSolution {
  std::vector<double> alpha;
  std::vector<double> y;
  std::vector<std::vector<double>> Q;  // y_i y_j K_ij
  double bias = 0.0;
  std::uint64_t iterations = 0;
  bool converged = false;
};

inline double dual_objective(const std::vector<double>& alpha, const std::vector<std::vector<double>>& Q) {
  double lin = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    lin += alpha[i];
    for (std::size_t j = 0; j < alpha.size(); ++j) quad += alpha[i] * alpha[j] * Q[i][j];
  }
  return lin - 0.5 * quad;
}

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, SvmModel partial)
      : Error(ErrorCode::kNonConvergence, message), partial_(std::move(partial)) {}
  const SvmModel& partial_model() const { return partial_; }

 private:
  SvmModel partial_;
};

inline SmoSolution solve_smo(const std::vector<std::vector<double>>& x, const std::vector<double>& y, KernelType type,
                             double gamma, double C, double tol, long max_iterations) {
  const std::size_t n = x.size();
  constexpr double kTau = 1e-12;
  SmoSolution s;
  s.y = y;
  s.alpha.assign(n, 0.0);
  s.Q.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double q = y[i] * y[j] * kernel(type, gamma, x[i], x[j]);
      s.Q[i][j] = q;
      s.Q[j][i] = q;
    }
  }
  std::vector<double> grad(n, -1.0);  // gradient of 1/2 a'Qa - sum(a)
  auto& a = s.alpha;
  auto in_up = [&](std::size_t t) { return (y[t] > 0 && a[t] < C) || (y[t] < 0 && a[t] > 0); };
  auto in_low = [&](std::size_t t) { return (y[t] > 0 && a[t] > 0) || (y[t] < 0 && a[t] < C); };

  while (true) {
    double gmax = -std::numeric_limits<double>::infinity();
    double gmin = std::numeric_limits<double>::infinity();
    std::size_t i = n;
    std::size_t j = n;
    for (std::size_t t = 0; t < n; ++t) {
      double v = -y[t] * grad[t];
      if (in_up(t) && v > gmax) {
        gmax = v;
        i = t;
      }
      if (in_low(t) && v < gmin) {
        gmin = v;
        j = t;
      }
    }
    if (i == n || j == n || gmax - gmin < tol) {
      s.converged = true;
      break;
    }
    if (static_cast<long>(s.iterations) >= max_iterations) break;
    ++s.iterations;

    const double old_ai = a[i];
    const double old_aj = a[j];
    if (y[i] != y[j]) {
      double quad = s.Q[i][i] + s.Q[j][j] + 2.0 * s.Q[i][j];
      if (quad <= 0) quad = kTau;
      double delta = (-grad[i] - grad[j]) / quad;
      double diff = a[i] - a[j];
      a[i] += delta;
      a[j] += delta;
      if (diff > 0) {
        if (a[j] < 0) {
          a[j] = 0;
          a[i] = diff;
        }
      } else if (a[i] < 0) {
        a[i] = 0;
        a[j] = -diff;
      }
      if (diff > 0) {
        if (a[i] > C) {
          a[i] = C;
          a[j] = C - diff;
        }
      } else if (a[j] > C) {
        a[j] = C;
        a[i] = C + diff;
      }
    } else {
      double quad = s.Q[i][i] + s.Q[j][j] - 2.0 * s.Q[i][j];
      if (quad <= 0) quad = kTau;
      double delta = (grad[i] - grad[j]) / quad;
      double sum = a[i] + a[j];
      a[i] -= delta;
      a[j] += delta;
      if (sum > C) {
        if (a[i] > C) {
          a[i] = C;
          a[j] = sum - C;
        }
      } else if (a[j] < 0) {
        a[j] = 0;
        a[i] = sum;
      }
      if (sum > C) {
        if (a[j] > C) {
          a[j] = C;
          a[i] = sum - C;
        }
      } else if (a[i] < 0) {
        a[i] = 0;
        a[j] = sum;
      }
    }
    const double di = a[i] - old_ai;
    const double dj = a[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t) grad[t] += s.Q[t][i] * di + s.Q[t][j] * dj;
  }

  // Bias: mean over free vectors, else midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  int free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    double yg = y[t] * grad[t];
    if (a[t] >= C) {
      if (y[t] < 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (a[t] <= 0) {
      if (y[t] > 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++free;
      sum += yg;
    }
  }
  double rho = free > 0 ? sum / free : (ub + lb) / 2.0;
  s.bias = -rho;
  return s;
}

inline SvmModel train_svm(std::span<const LabeledInstance> data, const SvmParams& params = {}) {
  check_training_data(data);
  if (!(params.C > 0.0)) throw Error(ErrorCode::kInvalidArgument, "C must be positive");
  if (!(params.tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");

  SvmModel m;
  m.kernel = params.kernel;
  m.C = params.C;
  m.dims = data.front().vector.size();
  if (params.standardize) m.scaler = Scaler::fit(data);

  std::vector<LabeledInstance> scaled;
  scaled.reserve(data.size());
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  for (const auto& d : data) {
    x.push_back(m.scaler.apply(d.vector));
    y.push_back(label_sign(d.label));
    scaled.push_back(LabeledInstance{x.back(), d.label, d.source_id});
  }
  if (params.kernel == KernelType::kRbf) {
    m.gamma = params.gamma > 0.0 ? params.gamma : scale_gamma(scaled);
  }

  SmoSolution s = solve_smo(x, y, m.kernel, m.gamma, m.C, params.tol, params.max_iterations);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (s.alpha[i] > 0.0) {
      m.support_vectors.push_back(x[i]);
      m.dual_coefs.push_back(s.alpha[i] * y[i]);
    }
  }
  m.bias = s.bias;
  m.meta = TrainingMeta{params.seed, s.iterations, params.tol, s.converged};
  if (!s.converged) {
    throw NonConvergenceError("SMO hit the iteration cap of " + std::to_string(params.max_iterations), m);
  }
  return m;
}

}  // namespace semfields
