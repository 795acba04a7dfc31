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

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semfields/error.hpp"

namespace semfields {

enum class Label { kNotPun = 0, kPun = 1 };

inline std::string_view label_name(Label l) { return l == Label::kPun ? "pun" : "not-pun"; }

inline Label parse_label(std::string_view s) {
  if (s == "pun" || s == "1") return Label::kPun;
  if (s == "not-pun" || s == "not_pun" || s == "0") return Label::kNotPun;
  throw Error(ErrorCode::kParseError, "unknown label '" + std::string(s) + "'");
}

// +1 for pun, -1 otherwise.
inline double label_sign(Label l) { return l == Label::kPun ? 1.0 : -1.0; }

struct LabeledInstance {
  std::vector<double> vector;
  Label label = Label::kNotPun;
  std::string source_id;
};

inline std::vector<double> to_features(std::span<const int> counts) { return {counts.begin(), counts.end()}; }

inline void check_training_data(std::span<const LabeledInstance> data) {
  if (data.empty()) throw Error(ErrorCode::kEmptyData, "no training instances");
  bool pos = false;
  bool neg = false;
  const std::size_t dims = data.front().vector.size();
  for (const auto& d : data) {
    (d.label == Label::kPun ? pos : neg) = true;
    if (d.vector.size() != dims) throw Error(ErrorCode::kDimensionMismatch, "instances differ in length");
  }
  if (!pos || !neg) throw Error(ErrorCode::kSingleClassData, "training data holds a single class");
}

// Per-feature standardization; identity when disabled.
struct Scaler {
  std::vector<double> mean;
  std::vector<double> scale;

  bool enabled() const { return !mean.empty(); }

  static Scaler fit(std::span<const LabeledInstance> data) {
    Scaler s;
    const std::size_t dims = data.front().vector.size();
    s.mean.assign(dims, 0.0);
    s.scale.assign(dims, 0.0);
    for (const auto& d : data) {
      for (std::size_t k = 0; k < dims; ++k) s.mean[k] += d.vector[k];
    }
    for (auto& m : s.mean) m /= static_cast<double>(data.size());
    for (const auto& d : data) {
      for (std::size_t k = 0; k < dims; ++k) s.scale[k] += (d.vector[k] - s.mean[k]) * (d.vector[k] - s.mean[k]);
    }
    for (auto& v : s.scale) {
      v = std::sqrt(v / static_cast<double>(data.size()));
      if (v == 0.0) v = 1.0;
    }
    return s;
  }

  std::vector<double> apply(std::span<const double> x) const {
    std::vector<double> out(x.begin(), x.end());
    if (!enabled()) return out;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (out[k] - mean[k]) / scale[k];
    return out;
  }
};

}  // namespace semfields
