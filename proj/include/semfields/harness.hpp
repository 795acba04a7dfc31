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

// Corpus ingestion and the classification / location experiments.
//
// TSV corpus rows: id<TAB>label<TAB>pun_type<TAB>gold_target<TAB>text, where
// pun_type and gold_target may be "-". Lines starting with '#' are comments.
// JSONL rows carry the same fields as object keys.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "semfields/analysis.hpp"
#include "semfields/dataset.hpp"
#include "semfields/io.hpp"
#include "semfields/locator.hpp"
#include "semfields/metrics.hpp"
#include "semfields/model.hpp"
#include "semfields/random.hpp"
#include "semfields/vectorizer.hpp"

namespace semfields {

enum class PunType { kHomographic, kHeterographic, kUnknown };

inline std::string_view pun_type_name(PunType t) {
  switch (t) {
    case PunType::kHomographic: return "homographic";
    case PunType::kHeterographic: return "heterographic";
    case PunType::kUnknown: return "unknown";
  }
  return "unknown";
}

inline std::optional<PunType> parse_pun_type(std::string_view s) {
  if (s == "homographic" || s == "hom") return PunType::kHomographic;
  if (s == "heterographic" || s == "het") return PunType::kHeterographic;
  if (s == "unknown" || s == "-" || s.empty()) return PunType::kUnknown;
  return std::nullopt;
}

struct CorpusRecord {
  std::string id;
  Label label = Label::kNotPun;
  PunType pun_type = PunType::kUnknown;
  std::optional<std::string> gold_target;  // lemma, surface form or 1-based word position
  std::string text;
  std::size_t row = 0;
};

struct Corpus {
  std::vector<CorpusRecord> records;
  std::string path;
  std::string checksum;

  std::size_t count(Label l) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const CorpusRecord& r) { return r.label == l; }));
  }
};

enum class CorpusFormat { kTsv, kJsonl };

inline CorpusFormat parse_corpus_format(std::string_view s) {
  if (s == "tsv") return CorpusFormat::kTsv;
  if (s == "jsonl") return CorpusFormat::kJsonl;
  throw Error(ErrorCode::kInvalidArgument, "unknown corpus format '" + std::string(s) + "'");
}

inline Corpus parse_corpus(std::string_view content, CorpusFormat format, std::string path = {}) {
  Corpus corpus;
  corpus.path = std::move(path);
  corpus.checksum = str::checksum_tag(content);
  std::set<std::string> ids;
  std::size_t row = 0;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view v = str::trim(line);
    if (v.empty() || v.front() == '#') continue;

    CorpusRecord rec;
    rec.row = row;
    std::string label, type, gold;
    if (format == CorpusFormat::kTsv) {
      auto f = str::split(line, '\t');
      if (f.size() != 5) {
        throw RowError(ErrorCode::kParseError, row, "expected 5 tab-separated fields, found " + std::to_string(f.size()));
      }
      rec.id = std::string(str::trim(f[0]));
      label = std::string(str::trim(f[1]));
      type = std::string(str::trim(f[2]));
      gold = std::string(str::trim(f[3]));
      rec.text = std::string(str::trim(f[4]));
    } else {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(v);
        rec.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
        label = j.at("label").get<std::string>();
        type = j.value("pun_type", std::string("-"));
        gold = j.contains("gold_target") && !j["gold_target"].is_null()
                   ? (j["gold_target"].is_string() ? j["gold_target"].get<std::string>() : j["gold_target"].dump())
                   : std::string("-");
        rec.text = j.at("text").get<std::string>();
      } catch (const nlohmann::json::exception& e) {
        throw RowError(ErrorCode::kParseError, row, e.what());
      }
    }
    if (rec.id.empty()) throw RowError(ErrorCode::kParseError, row, "empty id");
    try {
      rec.label = parse_label(label);
    } catch (const Error&) {
      throw RowError(ErrorCode::kParseError, row, "unknown label '" + label + "'");
    }
    auto pt = parse_pun_type(type);
    if (!pt) throw RowError(ErrorCode::kParseError, row, "unknown pun type '" + type + "'");
    rec.pun_type = *pt;
    if (!gold.empty() && gold != "-") rec.gold_target = gold;
    if (str::trim(rec.text).empty()) throw RowError(ErrorCode::kEmptyText, row, "record '" + rec.id + "' has no text");
    if (!ids.insert(rec.id).second) throw RowError(ErrorCode::kDuplicateId, row, "duplicate id '" + rec.id + "'");
    corpus.records.push_back(std::move(rec));
  }
  return corpus;
}

inline Corpus load_corpus(const std::string& path, CorpusFormat format) {
  return parse_corpus(io::read_file(path), format, path);
}

enum class Task { kClassify, kLocate };

struct ExperimentConfig {
  Task task = Task::kClassify;
  std::vector<VectorTransform> transforms{VectorTransform::kNone};
  std::vector<ModelFamily> models{ModelFamily::kSvmRbf};
  std::vector<LocateMethod> methods;  // empty: every method applicable to the pun type
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  double split_ratio = 0.5;
  std::vector<std::size_t> partition = default_partition();
  TrainConfig train;
  std::string corpus;
  CorpusFormat corpus_format = CorpusFormat::kTsv;
};

// Reads an experiment description such as
//   {"task": "classify", "corpus": "data/mini_corpus.tsv", "transforms": ["none", "sort"],
//    "models": ["svm-rbf"], "seeds": [1, 2, 3, 4, 5], "C": 1.0}
// Relative corpus paths resolve against base_dir.
inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {}) {
  ExperimentConfig cfg;
  try {
    std::string task = j.value("task", std::string("classify"));
    if (task == "classify") {
      cfg.task = Task::kClassify;
    } else if (task == "locate") {
      cfg.task = Task::kLocate;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown task '" + task + "'");
    }
    if (j.contains("transforms")) {
      cfg.transforms.clear();
      for (const auto& t : j["transforms"]) cfg.transforms.push_back(parse_transform(t.get<std::string>()));
    }
    if (j.contains("models")) {
      cfg.models.clear();
      for (const auto& m : j["models"]) cfg.models.push_back(parse_family(m.get<std::string>()));
    }
    if (j.contains("methods")) {
      for (const auto& m : j["methods"]) cfg.methods.push_back(parse_method(m.get<std::string>()));
    }
    if (j.contains("seeds")) cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    cfg.split_ratio = j.value("split_ratio", cfg.split_ratio);
    if (j.contains("partition")) cfg.partition = j["partition"].get<std::vector<std::size_t>>();
    cfg.train.C = j.value("C", cfg.train.C);
    if (j.contains("gamma")) {
      cfg.train.gamma = j["gamma"].is_string() ? 0.0 : j["gamma"].get<double>();
    }
    cfg.train.l2 = j.value("l2", cfg.train.l2);
    cfg.train.standardize = j.value("standardize", cfg.train.standardize);
    cfg.train.grid_search = j.value("grid_search", cfg.train.grid_search);
    if (j.contains("corpus")) {
      std::filesystem::path p = j["corpus"].get<std::string>();
      cfg.corpus = (p.is_relative() && !base_dir.empty() ? base_dir / p : p).string();
    }
    if (j.contains("format")) cfg.corpus_format = parse_corpus_format(j["format"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad experiment config: ") + e.what());
  }
  if (cfg.seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "experiment needs at least one seed");
  if (cfg.split_ratio <= 0.0 || cfg.split_ratio >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "split_ratio must lie in (0, 1)");
  }
  if (cfg.models.empty() || cfg.transforms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "experiment needs at least one model and one transform");
  }
  return cfg;
}

// Stratified split: each class is shuffled and its first round(n * ratio)
// records go to training.
struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

inline Split split_corpus(const Corpus& corpus, std::uint64_t seed, double ratio) {
  Split s;
  for (Label l : {Label::kPun, Label::kNotPun}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
      if (corpus.records[i].label == l) idx.push_back(i);
    }
    Rng rng(derive_seed(seed, l == Label::kPun ? "split-pun" : "split-not-pun"));
    rng.shuffle(idx);
    auto n_train = static_cast<std::size_t>(std::llround(static_cast<double>(idx.size()) * ratio));
    s.train.insert(s.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    s.test.insert(s.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

inline std::vector<AnalyzedSentence> analyze_corpus(const Corpus& corpus, const Analyzer& analyzer) {
  std::vector<AnalyzedSentence> out;
  out.reserve(corpus.records.size());
  for (const auto& r : corpus.records) out.push_back(analyzer.analyze(r.text));
  return out;
}

inline std::vector<LabeledInstance> build_instances(const Corpus& corpus, const std::vector<AnalyzedSentence>& analyzed,
                                                    std::span<const std::size_t> which, VectorTransform transform,
                                                    std::span<const std::size_t> partition) {
  std::vector<LabeledInstance> out;
  for (std::size_t i : which) {
    auto counts = apply_transform(analyzed[i].vector.counts, transform, partition);
    out.push_back(LabeledInstance{to_features(counts), corpus.records[i].label, corpus.records[i].id});
  }
  return out;
}

struct SeedRun {
  std::uint64_t seed = 0;
  ModelFamily model = ModelFamily::kSvmRbf;
  VectorTransform transform = VectorTransform::kNone;
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  EvalReport report;
};

struct ClassificationRow {
  ModelFamily model = ModelFamily::kSvmRbf;
  VectorTransform transform = VectorTransform::kNone;
  ClassMetrics pun;
  ClassMetrics not_pun;
  double f_avg = 0.0;
  double f_avg_min = 0.0;
  double f_avg_max = 0.0;
  std::vector<double> per_seed_f_avg;
};

struct ClassificationReport {
  std::string corpus_checksum;
  std::vector<ClassificationRow> rows;
  std::vector<SeedRun> runs;
};

inline ClassificationReport run_classification_experiment(const Corpus& corpus, const Analyzer& analyzer,
                                                          const ExperimentConfig& cfg) {
  if (cfg.seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "experiment needs at least one seed");
  if (corpus.count(Label::kPun) == 0 || corpus.count(Label::kNotPun) == 0) {
    throw Error(ErrorCode::kSingleClassData, "corpus holds a single class");
  }
  const auto analyzed = analyze_corpus(corpus, analyzer);
  ClassificationReport report;
  report.corpus_checksum = corpus.checksum;

  for (ModelFamily model : cfg.models) {
    for (VectorTransform transform : cfg.transforms) {
      ClassificationRow row;
      row.model = model;
      row.transform = transform;
      for (std::uint64_t seed : cfg.seeds) {
        Split split = split_corpus(corpus, seed, cfg.split_ratio);
        auto train = build_instances(corpus, analyzed, split.train, transform, cfg.partition);
        auto test = build_instances(corpus, analyzed, split.test, transform, cfg.partition);
        TrainConfig tc = cfg.train;
        tc.family = model;
        tc.seed = seed;
        Classifier clf = train_classifier(train, tc);
        std::vector<Label> pred;
        std::vector<Label> gold;
        for (const auto& t : test) {
          pred.push_back(predict(clf, t.vector).label);
          gold.push_back(t.label);
        }
        SeedRun run;
        run.seed = seed;
        run.model = model;
        run.transform = transform;
        for (const auto& t : train) run.train_ids.push_back(t.source_id);
        for (const auto& t : test) run.test_ids.push_back(t.source_id);
        run.report = evaluate(pred, gold);
        report.runs.push_back(run);

        row.pun.precision += run.report.pun.precision;
        row.pun.recall += run.report.pun.recall;
        row.pun.f_measure += run.report.pun.f_measure;
        row.not_pun.precision += run.report.not_pun.precision;
        row.not_pun.recall += run.report.not_pun.recall;
        row.not_pun.f_measure += run.report.not_pun.f_measure;
        row.f_avg += run.report.f_avg;
        row.per_seed_f_avg.push_back(run.report.f_avg);
      }
      const double n = static_cast<double>(cfg.seeds.size());
      for (ClassMetrics* m : {&row.pun, &row.not_pun}) {
        m->precision /= n;
        m->recall /= n;
        m->f_measure /= n;
      }
      row.f_avg /= n;
      row.f_avg_min = *std::min_element(row.per_seed_f_avg.begin(), row.per_seed_f_avg.end());
      row.f_avg_max = *std::max_element(row.per_seed_f_avg.begin(), row.per_seed_f_avg.end());
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

struct LocationOutcome {
  std::uint64_t seed = 0;
  std::string id;
  PunType pun_type = PunType::kUnknown;
  LocateMethod method = LocateMethod::kSenseBased;
  std::string gold;
  std::string guess;
  bool correct = false;
  std::string error;
};

struct LocationRow {
  LocateMethod method = LocateMethod::kSenseBased;
  PunType pun_type = PunType::kHomographic;
  double accuracy = 0.0;  // mean over seeds
  std::vector<double> per_seed;
  std::size_t records = 0;
};

struct LocationReport {
  std::string corpus_checksum;
  std::vector<LocationRow> rows;
  std::vector<LocationOutcome> outcomes;

  const LocationRow* find(LocateMethod m, PunType t) const {
    for (const auto& r : rows) {
      if (r.method == m && r.pun_type == t) return &r;
    }
    return nullptr;
  }
};

// Gold target as a lemma: a 1-based word position, a surface form found in
// the sentence, or the given string lowercased.
inline std::string gold_lemma(const std::string& gold, const AnalyzedSentence& s) {
  if (!gold.empty() && std::all_of(gold.begin(), gold.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int pos = std::stoi(gold);
    for (const auto& t : s.tokens) {
      if (t.position == pos) return t.lemma;
    }
    return {};
  }
  std::string lower = str::to_lower(gold);
  for (const auto& t : s.tokens) {
    if (!t.is_punctuation() && t.lemma == lower) return lower;
  }
  for (const auto& t : s.tokens) {
    if (!t.is_punctuation() && str::to_lower(t.surface) == lower) return t.lemma;
  }
  return lower;
}

inline std::vector<LocateMethod> methods_for(PunType t) {
  if (t == PunType::kHeterographic) {
    return {LocateMethod::kPosition, LocateMethod::kLastWord, LocateMethod::kRandom, LocateMethod::kMostPolysemous};
  }
  return {LocateMethod::kSenseBased, LocateMethod::kLastWord, LocateMethod::kRandom, LocateMethod::kMostPolysemous};
}

inline LocationReport run_location_experiment(const Corpus& corpus, const Analyzer& analyzer,
                                              const ExperimentConfig& cfg) {
  if (cfg.seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "experiment needs at least one seed");
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    const auto& r = corpus.records[i];
    if (r.label != Label::kPun) continue;
    if (!r.gold_target) throw RowError(ErrorCode::kMissingGold, r.row, "pun '" + r.id + "' has no gold target");
    selected.push_back(i);
  }
  LocationReport report;
  report.corpus_checksum = corpus.checksum;

  std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, std::size_t>>> tallies;  // per seed (hits, total)
  std::vector<AnalyzedSentence> analyzed;
  for (std::size_t i : selected) analyzed.push_back(analyzer.analyze(corpus.records[i].text));

  for (std::size_t s = 0; s < cfg.seeds.size(); ++s) {
    const std::uint64_t seed = cfg.seeds[s];
    for (std::size_t k = 0; k < selected.size(); ++k) {
      const auto& rec = corpus.records[selected[k]];
      const auto& sentence = analyzed[k];
      const std::string gold = gold_lemma(*rec.gold_target, sentence);
      for (LocateMethod m : methods_for(rec.pun_type)) {
        if (!cfg.methods.empty() && std::find(cfg.methods.begin(), cfg.methods.end(), m) == cfg.methods.end()) continue;
        LocationOutcome o;
        o.seed = seed;
        o.id = rec.id;
        o.pun_type = rec.pun_type;
        o.method = m;
        o.gold = gold;
        try {
          LocationResult r = m == LocateMethod::kPosition
                                 ? locate_heterographic(sentence)
                                 : locate_homographic(sentence, m, derive_seed(seed, rec.id), &analyzer.index());
          o.guess = r.target;
          o.correct = r.target == gold;
        } catch (const Error& e) {
          o.error = e.what();
        }
        auto& t = tallies[{static_cast<int>(m), static_cast<int>(rec.pun_type)}];
        if (t.size() < cfg.seeds.size()) t.resize(cfg.seeds.size());
        t[s].first += o.correct ? 1 : 0;
        t[s].second += 1;
        report.outcomes.push_back(std::move(o));
      }
    }
  }
  for (const auto& [key, per_seed] : tallies) {
    LocationRow row;
    row.method = static_cast<LocateMethod>(key.first);
    row.pun_type = static_cast<PunType>(key.second);
    row.records = per_seed.front().second;
    for (const auto& [hits, total] : per_seed) {
      row.per_seed.push_back(total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0);
    }
    double sum = 0.0;
    for (double v : row.per_seed) sum += v;
    row.accuracy = sum / static_cast<double>(row.per_seed.size());
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---- Report rendering ----

inline std::string fmt_metric(double v) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(4) << v;
  return o.str();
}

inline std::string classification_table(const ClassificationReport& r) {
  std::ostringstream o;
  o << std::left << std::setw(16) << "Model" << std::setw(18) << "Transform" << "  Precision        Recall           F-measure        F-avg   (min..max)\n";
  o << std::setw(34) << "" << "  Pun     Not pun  Pun     Not pun  Pun     Not pun\n";
  for (const auto& row : r.rows) {
    o << std::setw(16) << family_name(row.model) << std::setw(18) << transform_name(row.transform) << "  "
      << fmt_metric(row.pun.precision) << "  " << fmt_metric(row.not_pun.precision) << "   "
      << fmt_metric(row.pun.recall) << "  " << fmt_metric(row.not_pun.recall) << "   "
      << fmt_metric(row.pun.f_measure) << "  " << fmt_metric(row.not_pun.f_measure) << "   "
      << fmt_metric(row.f_avg) << "  (" << fmt_metric(row.f_avg_min) << ".." << fmt_metric(row.f_avg_max) << ")\n";
  }
  return o.str();
}

inline nlohmann::ordered_json classification_json(const ClassificationReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  auto cls = [](const ClassMetrics& m) {
    return nlohmann::ordered_json{{"precision", m.precision}, {"recall", m.recall}, {"f_measure", m.f_measure}};
  };
  for (const auto& row : r.rows) {
    rows.push_back({{"model", family_name(row.model)},
                    {"transform", transform_name(row.transform)},
                    {"pun", cls(row.pun)},
                    {"not_pun", cls(row.not_pun)},
                    {"f_avg", row.f_avg},
                    {"f_avg_min", row.f_avg_min},
                    {"f_avg_max", row.f_avg_max},
                    {"per_seed_f_avg", row.per_seed_f_avg}});
  }
  return {{"task", "classify"}, {"corpus_checksum", r.corpus_checksum}, {"rows", rows}};
}

inline std::string classification_log_jsonl(const ClassificationReport& r) {
  std::string out;
  for (const auto& run : r.runs) {
    nlohmann::ordered_json j{{"seed", run.seed},
                             {"model", family_name(run.model)},
                             {"transform", transform_name(run.transform)},
                             {"train_ids", run.train_ids},
                             {"test_ids", run.test_ids},
                             {"report", report_json(run.report)}};
    out += j.dump() + "\n";
  }
  return out;
}

inline std::string location_table(const LocationReport& r) {
  std::vector<PunType> types{PunType::kHomographic, PunType::kHeterographic};
  for (const auto& row : r.rows) {
    if (row.pun_type == PunType::kUnknown) {
      types.push_back(PunType::kUnknown);
      break;
    }
  }
  std::ostringstream o;
  o << std::left << std::setw(18) << "Method";
  for (std::size_t i = 0; i < types.size(); ++i) {
    o << std::setw(i + 1 < types.size() ? 16 : 0) << pun_type_name(types[i]);
  }
  o << '\n';
  for (LocateMethod m : {LocateMethod::kSenseBased, LocateMethod::kPosition, LocateMethod::kLastWord,
                         LocateMethod::kRandom, LocateMethod::kMostPolysemous}) {
    bool any = false;
    std::ostringstream line;
    line << std::left << std::setw(18) << method_name(m);
    for (PunType t : types) {
      const LocationRow* row = r.find(m, t);
      line << std::setw(16) << (row ? fmt_metric(row->accuracy) : std::string("-"));
      any = any || row != nullptr;
    }
    if (any) {
      std::string text = line.str();
      while (!text.empty() && text.back() == ' ') text.pop_back();
      o << text << '\n';
    }
  }
  return o.str();
}

inline nlohmann::ordered_json location_json(const LocationReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"method", method_name(row.method)},
                    {"pun_type", pun_type_name(row.pun_type)},
                    {"records", row.records},
                    {"accuracy", row.accuracy},
                    {"per_seed", row.per_seed}});
  }
  return {{"task", "locate"}, {"corpus_checksum", r.corpus_checksum}, {"rows", rows}};
}

inline std::string location_log_jsonl(const LocationReport& r) {
  std::string out;
  for (const auto& o : r.outcomes) {
    nlohmann::ordered_json j{{"seed", o.seed},       {"id", o.id},       {"pun_type", pun_type_name(o.pun_type)},
                             {"method", method_name(o.method)}, {"gold", o.gold}, {"guess", o.guess},
                             {"correct", o.correct}};
    if (!o.error.empty()) j["error"] = o.error;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace semfields
