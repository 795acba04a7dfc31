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
#include <set>
#include <string>
#include <vector>

#include "semfields/semfields.hpp"
#include "test_support.hpp"

namespace semfields {
namespace {

using testing::bundled_analyzer;
using testing::data_path;

Corpus bundled_corpus() { return load_corpus(data_path("mini_corpus.tsv").string(), CorpusFormat::kTsv); }

template <typename Fn>
ErrorCode code_of(Fn&& fn, std::size_t* row = nullptr) {
  try {
    fn();
  } catch (const RowError& e) {
    if (row) *row = e.row();
    return e.code();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

// Puns about money, not-puns about worship: disjoint semantic fields.
Corpus separable_corpus() {
  std::string tsv;
  for (int i = 0; i < 12; ++i) {
    tsv += "p" + std::to_string(i) + "\tpun\thomographic\tinterest\t" +
           (i % 2 ? "The banker lost interest." : "A banker used his interest.") + "\n";
    tsv += "n" + std::to_string(i) + "\tnot-pun\t-\t-\t" +
           (i % 2 ? "The church was sacred." : "A sacred church prayed.") + "\n";
  }
  return parse_corpus(tsv, CorpusFormat::kTsv);
}

TEST(Corpus, ParsesTsvRows) {
  Corpus c = parse_corpus(
      "# comment\n"
      "a1\tpun\thomographic\tinterest\tI lost interest.\n"
      "a2\t0\t-\t-\tA plain sentence.\r\n",
      CorpusFormat::kTsv, "inline");
  ASSERT_EQ(c.records.size(), 2u);
  EXPECT_EQ(c.records[0].id, "a1");
  EXPECT_EQ(c.records[0].label, Label::kPun);
  EXPECT_EQ(c.records[0].pun_type, PunType::kHomographic);
  EXPECT_EQ(c.records[0].gold_target, "interest");
  EXPECT_EQ(c.records[0].row, 2u);
  EXPECT_EQ(c.records[1].label, Label::kNotPun);
  EXPECT_FALSE(c.records[1].gold_target.has_value());
  EXPECT_EQ(c.records[1].text, "A plain sentence.");
  EXPECT_EQ(c.checksum.rfind("fnv1a64:", 0), 0u);
}

TEST(Corpus, ParsesJsonl) {
  Corpus c = parse_corpus(
      "{\"id\": 7, \"label\": \"pun\", \"pun_type\": \"het\", \"gold_target\": 3, \"text\": \"x y z\"}\n"
      "{\"id\": \"b\", \"label\": \"not_pun\", \"text\": \"plain\"}\n",
      CorpusFormat::kJsonl);
  ASSERT_EQ(c.records.size(), 2u);
  EXPECT_EQ(c.records[0].id, "7");
  EXPECT_EQ(c.records[0].pun_type, PunType::kHeterographic);
  EXPECT_EQ(c.records[0].gold_target, "3");
  EXPECT_EQ(c.records[1].pun_type, PunType::kUnknown);
}

TEST(Corpus, RowAddressedErrors) {
  std::size_t row = 0;
  EXPECT_EQ(code_of([] { parse_corpus("a\tpun\t-\t-\n", CorpusFormat::kTsv); }, &row), ErrorCode::kParseError);
  EXPECT_EQ(row, 1u);
  EXPECT_EQ(code_of([] { parse_corpus("a\tmaybe\t-\t-\ttext\n", CorpusFormat::kTsv); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_corpus("# c\na\tpun\t-\t-\t  \n", CorpusFormat::kTsv); }, &row), ErrorCode::kEmptyText);
  EXPECT_EQ(row, 2u);
  EXPECT_EQ(code_of([] { parse_corpus("a\tpun\t-\t-\tx\n\na\tpun\t-\t-\ty\n", CorpusFormat::kTsv); }, &row),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(row, 3u);
  EXPECT_EQ(code_of([] { parse_corpus("{not json}\n", CorpusFormat::kJsonl); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { load_corpus("/nonexistent/corpus.tsv", CorpusFormat::kTsv); }), ErrorCode::kIoError);
}

TEST(Corpus, BundledCountsMatchHeader) {
  Corpus c = bundled_corpus();
  EXPECT_EQ(c.count(Label::kPun), 121u);
  EXPECT_EQ(c.count(Label::kNotPun), 119u);
  auto typed = [&](PunType t) {
    return std::count_if(c.records.begin(), c.records.end(),
                         [&](const CorpusRecord& r) { return r.label == Label::kPun && r.pun_type == t; });
  };
  EXPECT_EQ(typed(PunType::kHomographic), 77);
  EXPECT_EQ(typed(PunType::kHeterographic), 44);
  for (const auto& r : c.records) {
    if (r.label != Label::kPun) continue;
    EXPECT_TRUE(r.gold_target.has_value()) << r.id;
  }
}

TEST(Split, StratifiedDeterministicAndDisjoint) {
  Corpus c = bundled_corpus();
  Split a = split_corpus(c, 3, 0.5);
  Split b = split_corpus(c, 3, 0.5);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  EXPECT_NE(split_corpus(c, 4, 0.5).train, a.train);

  std::set<std::size_t> train(a.train.begin(), a.train.end());
  for (std::size_t i : a.test) EXPECT_FALSE(train.count(i));
  EXPECT_EQ(a.train.size() + a.test.size(), c.records.size());
  std::size_t train_puns = 0;
  for (std::size_t i : a.train) train_puns += c.records[i].label == Label::kPun ? 1 : 0;
  EXPECT_EQ(train_puns, 61u);  // round(121 / 2)
  EXPECT_EQ(a.train.size() - train_puns, 60u);  // round(119 / 2)
}

TEST(Config, ReadsJsonAndResolvesPaths) {
  auto j = nlohmann::json::parse(R"({"task": "classify", "corpus": "c.tsv", "models": ["logreg"],
                                     "transforms": ["sort"], "seeds": [9], "gamma": 0.5, "C": 2})");
  ExperimentConfig cfg = experiment_config_from_json(j, "/tmp/x");
  EXPECT_EQ(cfg.corpus, "/tmp/x/c.tsv");
  EXPECT_EQ(cfg.models, (std::vector<ModelFamily>{ModelFamily::kLogReg}));
  EXPECT_EQ(cfg.transforms, (std::vector<VectorTransform>{VectorTransform::kSortFull}));
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{9}));
  EXPECT_DOUBLE_EQ(cfg.train.gamma, 0.5);
  EXPECT_DOUBLE_EQ(cfg.train.C, 2.0);
  EXPECT_THROW(experiment_config_from_json(nlohmann::json::parse(R"({"seeds": []})")), Error);
  EXPECT_THROW(experiment_config_from_json(nlohmann::json::parse(R"({"split_ratio": 1.5})")), Error);
  EXPECT_THROW(experiment_config_from_json(nlohmann::json::parse(R"({"task": "dance"})")), Error);
  EXPECT_THROW(experiment_config_from_json(nlohmann::json::parse(R"({"seeds": "x"})")), Error);
}

TEST(Classification, SeparableCorpusScoresPerfectly) {
  Corpus c = separable_corpus();
  ExperimentConfig cfg;
  cfg.models = {ModelFamily::kSvmRbf, ModelFamily::kSvmLinear, ModelFamily::kLogReg};
  ClassificationReport r = run_classification_experiment(c, bundled_analyzer(), cfg);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) EXPECT_DOUBLE_EQ(row.f_avg, 1.0) << family_name(row.model);
}

TEST(Classification, ShuffledLabelsScoreNearChance) {
  Corpus c = bundled_corpus();
  std::vector<Label> labels;
  for (const auto& rec : c.records) labels.push_back(rec.label);
  Rng rng(99);
  rng.shuffle(labels);
  for (std::size_t i = 0; i < labels.size(); ++i) c.records[i].label = labels[i];
  ExperimentConfig cfg;
  ClassificationReport r = run_classification_experiment(c, bundled_analyzer(), cfg);
  EXPECT_GE(r.rows[0].f_avg, 0.35);
  EXPECT_LE(r.rows[0].f_avg, 0.65);
}

TEST(Classification, ReportAggregatesSeedRuns) {
  Corpus c = bundled_corpus();
  ExperimentConfig cfg;
  cfg.seeds = {1, 2, 3};
  cfg.transforms = {VectorTransform::kNone, VectorTransform::kSortPartitioned};
  ClassificationReport r = run_classification_experiment(c, bundled_analyzer(), cfg);
  ASSERT_EQ(r.rows.size(), 2u);
  ASSERT_EQ(r.runs.size(), 6u);
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    double sum = 0.0;
    for (std::size_t s = 0; s < 3; ++s) {
      const SeedRun& run = r.runs[k * 3 + s];
      EXPECT_EQ(run.transform, r.rows[k].transform);
      sum += run.report.f_avg;
      std::set<std::string> train(run.train_ids.begin(), run.train_ids.end());
      for (const auto& id : run.test_ids) EXPECT_FALSE(train.count(id)) << id;
    }
    EXPECT_NEAR(r.rows[k].f_avg, sum / 3.0, 1e-12);
    EXPECT_LE(r.rows[k].f_avg_min, r.rows[k].f_avg);
    EXPECT_GE(r.rows[k].f_avg_max, r.rows[k].f_avg);
  }
  EXPECT_EQ(r.corpus_checksum, c.checksum);
}

TEST(Classification, SingleClassCorpusIsRejected) {
  Corpus c = parse_corpus("a\tpun\t-\tx\tI lost interest.\nb\tpun\t-\tx\tThe banker.\n", CorpusFormat::kTsv);
  EXPECT_EQ(code_of([&] { run_classification_experiment(c, bundled_analyzer(), ExperimentConfig{}); }),
            ErrorCode::kSingleClassData);
}

TEST(Classification, RenderingIsStable) {
  Corpus c = separable_corpus();
  ExperimentConfig cfg;
  cfg.seeds = {1, 2};
  auto a = run_classification_experiment(c, bundled_analyzer(), cfg);
  auto b = run_classification_experiment(c, bundled_analyzer(), cfg);
  EXPECT_EQ(classification_table(a), classification_table(b));
  EXPECT_EQ(classification_json(a).dump(), classification_json(b).dump());
  EXPECT_EQ(classification_log_jsonl(a), classification_log_jsonl(b));
  EXPECT_NE(classification_table(a).find("1.0000"), std::string::npos);
}

TEST(Location, WorkedExamplesAreFound) {
  Corpus c = parse_corpus(std::string("b\tpun\thomographic\tinterest\t") + testing::kBanker + "\n" +
                              "c\tpun\theterographic\tpropane\t" + testing::kChurch + "\n",
                          CorpusFormat::kTsv);
  ExperimentConfig cfg;
  cfg.task = Task::kLocate;
  LocationReport r = run_location_experiment(c, bundled_analyzer(), cfg);
  ASSERT_NE(r.find(LocateMethod::kSenseBased, PunType::kHomographic), nullptr);
  EXPECT_DOUBLE_EQ(r.find(LocateMethod::kSenseBased, PunType::kHomographic)->accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.find(LocateMethod::kPosition, PunType::kHeterographic)->accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.find(LocateMethod::kLastWord, PunType::kHomographic)->accuracy, 1.0);
  EXPECT_EQ(r.find(LocateMethod::kPosition, PunType::kHomographic), nullptr);
}

TEST(Location, RandomOnOneWordSentenceIsAlwaysRight) {
  Corpus c = parse_corpus("x\tpun\thomographic\tinterest\tInterest!\n", CorpusFormat::kTsv);
  ExperimentConfig cfg;
  cfg.methods = {LocateMethod::kRandom};
  LocationReport r = run_location_experiment(c, bundled_analyzer(), cfg);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_DOUBLE_EQ(r.rows[0].accuracy, 1.0);
  EXPECT_EQ(r.rows[0].per_seed.size(), 5u);
}

TEST(Location, GoldByPositionOrSurface) {
  auto s = bundled_analyzer().analyze(testing::kBanker);
  EXPECT_EQ(gold_lemma("10", s), "interest");
  EXPECT_EQ(gold_lemma("lost", s), "lose");
  EXPECT_EQ(gold_lemma("Banker", s), "banker");
}

TEST(Location, PunWithoutGoldIsRejected) {
  Corpus c = parse_corpus("# h\nx\tpun\thomographic\t-\tI lost interest.\n", CorpusFormat::kTsv);
  std::size_t row = 0;
  EXPECT_EQ(code_of([&] { run_location_experiment(c, bundled_analyzer(), ExperimentConfig{}); }, &row),
            ErrorCode::kMissingGold);
  EXPECT_EQ(row, 2u);
}

TEST(Location, BaselinesOnBundledCorpus) {
  ExperimentConfig cfg;
  cfg.task = Task::kLocate;
  LocationReport r = run_location_experiment(bundled_corpus(), bundled_analyzer(), cfg);
  const auto* last = r.find(LocateMethod::kLastWord, PunType::kHomographic);
  const auto* rnd = r.find(LocateMethod::kRandom, PunType::kHomographic);
  ASSERT_TRUE(last && rnd);
  EXPECT_GE(last->accuracy - rnd->accuracy, 0.20);
  EXPECT_EQ(last->records, 77u);
  std::string table = location_table(r);
  EXPECT_NE(table.find("sense_based"), std::string::npos);
  EXPECT_EQ(location_log_jsonl(r),
            location_log_jsonl(run_location_experiment(bundled_corpus(), bundled_analyzer(), cfg)));
}

}  // namespace
}  // namespace semfields
