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

#include <array>
#include <span>

#include "json.hpp"
#include "semfields/dataset.hpp"
#include "semfields/error.hpp"

namespace semfields {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

struct EvalReport {
  ClassMetrics pun;
  ClassMetrics not_pun;
  double f_avg = 0.0;  // (F_pun + F_not_pun) / 2
  // confusion[gold][predicted], index 1 = pun.
  std::array<std::array<long, 2>, 2> confusion{};
};

inline double f_measure(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

inline ClassMetrics class_metrics(long tp, long fp, long fn) {
  ClassMetrics m;
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f_measure = f_measure(m.precision, m.recall);
  return m;
}

inline EvalReport report_from_confusion(const std::array<std::array<long, 2>, 2>& c) {
  EvalReport r;
  r.confusion = c;
  // Pun: TP = c[1][1], FP = c[0][1], FN = c[1][0]; mirrored for not-pun.
  r.pun = class_metrics(c[1][1], c[0][1], c[1][0]);
  r.not_pun = class_metrics(c[0][0], c[1][0], c[0][1]);
  r.f_avg = (r.pun.f_measure + r.not_pun.f_measure) / 2.0;
  return r;
}

inline EvalReport evaluate(std::span<const Label> predictions, std::span<const Label> gold) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(predictions.size()) + " predictions for " +
                                                std::to_string(gold.size()) + " gold labels");
  }
  if (gold.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to evaluate");
  std::array<std::array<long, 2>, 2> c{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++c[static_cast<std::size_t>(gold[i])][static_cast<std::size_t>(predictions[i])];
  }
  return report_from_confusion(c);
}

inline nlohmann::ordered_json report_json(const EvalReport& r) {
  auto cls = [](const ClassMetrics& m) {
    return nlohmann::ordered_json{{"precision", m.precision}, {"recall", m.recall}, {"f_measure", m.f_measure}};
  };
  return {{"pun", cls(r.pun)},
          {"not_pun", cls(r.not_pun)},
          {"f_avg", r.f_avg},
          {"confusion", {{r.confusion[0][0], r.confusion[0][1]}, {r.confusion[1][0], r.confusion[1][1]}}}};
}

}  // namespace semfields
