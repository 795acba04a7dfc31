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

// Trained classifiers behind one interface, their binary file format and
// optional hyperparameter search.
//
// Model file layout (all integers and IEEE-754 doubles little-endian):
//   8 bytes   magic "SEMFMDL\0"
//   u32       format version (1)
//   u8        kind: 1 = svm-linear, 2 = svm-rbf, 3 = logistic regression
//   u32       dims
//   u8        standardized flag; if 1: f64 mean[dims], f64 scale[dims]
//   u64       seed, u64 iterations, f64 tol, u8 converged
//   svm:      f64 C, f64 gamma, u32 n_sv, f64 sv[n_sv][dims], f64 coef[n_sv], f64 bias
//   logreg:   f64 l2, f64 weights[dims], f64 bias

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "semfields/dataset.hpp"
#include "semfields/logreg.hpp"
#include "semfields/metrics.hpp"
#include "semfields/random.hpp"
#include "semfields/svm.hpp"

namespace semfields {

enum class ModelFamily : std::uint8_t { kSvmLinear = 1, kSvmRbf = 2, kLogReg = 3 };

inline std::string_view family_name(ModelFamily f) {
  switch (f) {
    case ModelFamily::kSvmLinear: return "svm-linear";
    case ModelFamily::kSvmRbf: return "svm-rbf";
    case ModelFamily::kLogReg: return "logreg";
  }
  return "?";
}

inline ModelFamily parse_family(std::string_view s) {
  if (s == "svm-linear" || s == "linear") return ModelFamily::kSvmLinear;
  if (s == "svm-rbf" || s == "rbf") return ModelFamily::kSvmRbf;
  if (s == "logreg" || s == "logistic") return ModelFamily::kLogReg;
  throw Error(ErrorCode::kInvalidArgument, "unknown model '" + std::string(s) + "'");
}

using Classifier = std::variant<SvmModel, LogRegModel>;

inline ModelFamily model_family(const Classifier& c) {
  if (const auto* svm = std::get_if<SvmModel>(&c)) {
    return svm->kernel == KernelType::kLinear ? ModelFamily::kSvmLinear : ModelFamily::kSvmRbf;
  }
  return ModelFamily::kLogReg;
}

struct Prediction {
  Label label = Label::kNotPun;
  double decision_value = 0.0;
};

// Pun iff the decision value is strictly positive.
inline Prediction predict(const Classifier& model, std::span<const double> x) {
  double f = std::visit([&](const auto& m) { return m.decision_value(x); }, model);
  return Prediction{f > 0.0 ? Label::kPun : Label::kNotPun, f};
}

struct TrainConfig {
  ModelFamily family = ModelFamily::kSvmRbf;
  double C = 1.0;
  double gamma = 0.0;  // <= 0: scale
  double svm_tol = 1e-3;
  double l2 = 0.01;
  double logreg_tol = 1e-6;
  std::uint64_t seed = 0;
  bool standardize = false;
  bool grid_search = false;
  int folds = 5;
};

inline Classifier train_classifier(std::span<const LabeledInstance> data, const TrainConfig& cfg);

struct GridPoint {
  double C = 1.0;
  double gamma = 0.0;
  double cv_f_avg = 0.0;
};

// k-fold cross-validated search over C in {0.1, 1, 10} and gamma in
// {scale, 0.01, 0.1, 1} (gamma ignored for the linear kernel), keeping the
// first best point in grid order.
inline GridPoint grid_search(std::span<const LabeledInstance> data, const TrainConfig& base) {
  check_training_data(data);
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(derive_seed(base.seed, "grid-folds"));
  rng.shuffle(order);
  const int folds = std::max(2, std::min<int>(base.folds, static_cast<int>(data.size())));

  const std::array<double, 3> cs{0.1, 1.0, 10.0};
  std::vector<double> gammas{0.0};
  if (base.family == ModelFamily::kSvmRbf) gammas = {0.0, 0.01, 0.1, 1.0};

  GridPoint best;
  best.cv_f_avg = -1.0;
  for (double c : cs) {
    for (double g : gammas) {
      TrainConfig cfg = base;
      cfg.grid_search = false;
      cfg.C = c;
      cfg.gamma = g;
      std::vector<Label> pred;
      std::vector<Label> gold;
      for (int f = 0; f < folds; ++f) {
        std::vector<LabeledInstance> train;
        std::vector<const LabeledInstance*> test;
        for (std::size_t k = 0; k < order.size(); ++k) {
          if (static_cast<int>(k % static_cast<std::size_t>(folds)) == f) test.push_back(&data[order[k]]);
          else train.push_back(data[order[k]]);
        }
        try {
          Classifier model = train_classifier(train, cfg);
          for (const auto* t : test) {
            pred.push_back(predict(model, t->vector).label);
            gold.push_back(t->label);
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kSingleClassData) throw;
        }
      }
      if (gold.empty()) continue;
      double score = evaluate(pred, gold).f_avg;
      if (score > best.cv_f_avg) best = GridPoint{c, g, score};
    }
  }
  return best;
}

inline Classifier train_classifier(std::span<const LabeledInstance> data, const TrainConfig& cfg) {
  TrainConfig effective = cfg;
  if (cfg.grid_search && cfg.family != ModelFamily::kLogReg) {
    GridPoint g = grid_search(data, cfg);
    effective.C = g.C;
    effective.gamma = g.gamma;
  }
  if (effective.family == ModelFamily::kLogReg) {
    LogRegParams p;
    p.l2 = effective.l2;
    p.tol = effective.logreg_tol;
    p.seed = effective.seed;
    p.standardize = effective.standardize;
    return train_logreg(data, p);
  }
  SvmParams p;
  p.kernel = effective.family == ModelFamily::kSvmLinear ? KernelType::kLinear : KernelType::kRbf;
  p.C = effective.C;
  p.gamma = effective.gamma;
  p.tol = effective.svm_tol;
  p.seed = effective.seed;
  p.standardize = effective.standardize;
  return train_svm(data, p);
}

namespace detail {

class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream& out) : out_(out) {}
  void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void f64s(std::span<const double> v) {
    for (double d : v) f64(d);
  }

 private:
  std::ostream& out_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::istream& in) : in_(in) {}
  std::uint8_t u8() {
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) throw Error(ErrorCode::kBadModelFile, "truncated model file");
    return static_cast<std::uint8_t>(c);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::vector<double> f64s(std::size_t n) {
    std::vector<double> v(n);
    for (auto& d : v) d = f64();
    return v;
  }

 private:
  std::istream& in_;
};

inline constexpr std::array<char, 8> kModelMagic = {'S', 'E', 'M', 'F', 'M', 'D', 'L', '\0'};
inline constexpr std::uint32_t kModelFormatVersion = 1;
inline constexpr std::uint32_t kMaxDims = 1u << 20;

}  // namespace detail

inline void write_model(std::ostream& out, const Classifier& model) {
  detail::BinaryWriter w(out);
  for (char c : detail::kModelMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u32(detail::kModelFormatVersion);
  w.u8(static_cast<std::uint8_t>(model_family(model)));
  std::visit(
      [&](const auto& m) {
        w.u32(static_cast<std::uint32_t>(m.dims));
        w.u8(m.scaler.enabled() ? 1 : 0);
        if (m.scaler.enabled()) {
          w.f64s(m.scaler.mean);
          w.f64s(m.scaler.scale);
        }
        w.u64(m.meta.seed);
        w.u64(m.meta.iterations);
        w.f64(m.meta.tol);
        w.u8(m.meta.converged ? 1 : 0);
      },
      model);
  if (const auto* svm = std::get_if<SvmModel>(&model)) {
    w.f64(svm->C);
    w.f64(svm->gamma);
    w.u32(static_cast<std::uint32_t>(svm->support_vectors.size()));
    for (const auto& sv : svm->support_vectors) w.f64s(sv);
    w.f64s(svm->dual_coefs);
    w.f64(svm->bias);
  } else {
    const auto& lr = std::get<LogRegModel>(model);
    w.f64(lr.l2);
    w.f64s(lr.weights);
    w.f64(lr.bias);
  }
}

inline Classifier read_model(std::istream& in) {
  detail::BinaryReader r(in);
  for (char c : detail::kModelMagic) {
    if (r.u8() != static_cast<std::uint8_t>(c)) throw Error(ErrorCode::kBadModelFile, "bad magic");
  }
  if (std::uint32_t v = r.u32(); v != detail::kModelFormatVersion) {
    throw Error(ErrorCode::kBadModelFile, "unsupported model format version " + std::to_string(v));
  }
  std::uint8_t kind = r.u8();
  if (kind < 1 || kind > 3) throw Error(ErrorCode::kBadModelFile, "unknown model kind");
  const std::uint32_t dims = r.u32();
  if (dims == 0 || dims > detail::kMaxDims) throw Error(ErrorCode::kBadModelFile, "implausible dimensionality");
  Scaler scaler;
  if (r.u8()) {
    scaler.mean = r.f64s(dims);
    scaler.scale = r.f64s(dims);
  }
  TrainingMeta meta;
  meta.seed = r.u64();
  meta.iterations = r.u64();
  meta.tol = r.f64();
  meta.converged = r.u8() != 0;

  if (static_cast<ModelFamily>(kind) == ModelFamily::kLogReg) {
    LogRegModel m;
    m.dims = dims;
    m.scaler = std::move(scaler);
    m.meta = meta;
    m.l2 = r.f64();
    m.weights = r.f64s(dims);
    m.bias = r.f64();
    return m;
  }
  SvmModel m;
  m.kernel = static_cast<ModelFamily>(kind) == ModelFamily::kSvmLinear ? KernelType::kLinear : KernelType::kRbf;
  m.dims = dims;
  m.scaler = std::move(scaler);
  m.meta = meta;
  m.C = r.f64();
  m.gamma = r.f64();
  const std::uint32_t n_sv = r.u32();
  if (n_sv > detail::kMaxDims) throw Error(ErrorCode::kBadModelFile, "implausible support-vector count");
  for (std::uint32_t i = 0; i < n_sv; ++i) m.support_vectors.push_back(r.f64s(dims));
  m.dual_coefs = r.f64s(n_sv);
  m.bias = r.f64();
  for (double c : m.dual_coefs) {
    if (std::abs(c) > m.C * (1.0 + 1e-12)) throw Error(ErrorCode::kBadModelFile, "dual coefficient exceeds C");
  }
  return m;
}

inline std::string serialize_model(const Classifier& model) {
  std::ostringstream out(std::ios::binary);
  write_model(out, model);
  return out.str();
}

inline Classifier deserialize_model(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_model(in);
}

}  // namespace semfields
