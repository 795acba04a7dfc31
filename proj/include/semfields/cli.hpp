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

// Command-line dispatch, kept in a header so tests can drive it with
// in-memory streams. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semfields/analysis.hpp"
#include "semfields/harness.hpp"
#include "semfields/io.hpp"
#include "semfields/locator.hpp"
#include "semfields/model.hpp"
#include "semfields/thesaurus.hpp"
#include "semfields/vectorizer.hpp"

namespace semfields::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string index;
  std::string stopwords;
  std::string lexicon;
  std::string manifest;
  std::uint64_t seed = 1;
  bool json = false;
  bool quiet = false;
  std::string transform = "none";
  std::string partition = "8,8,8,10";
  std::string in;
  std::vector<std::string> text;
};

inline std::vector<std::size_t> parse_partition(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& part : str::split(s, ',')) {
    std::string_view p = str::trim(part);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (ec != std::errc{} || ptr != p.data() + p.size() || v == 0) {
      throw Error(ErrorCode::kBadPartition, "bad partition '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

namespace detail {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  CommonOptions opt;

  void progress(const std::string& msg) const {
    if (!opt.quiet) err << msg << '\n';
  }
};

inline Analyzer make_analyzer(const ThesaurusIndex& index, const CommonOptions& opt) {
  StopwordList stop = opt.stopwords.empty() ? StopwordList::defaults() : io::load_stopwords(opt.stopwords);
  Lexicon lex;
  if (!opt.lexicon.empty()) {
    lex = io::load_lexicon(opt.lexicon);
  } else if (!opt.index.empty()) {
    // A lexicon.tsv next to the index is picked up implicitly.
    auto sidecar = std::filesystem::path(opt.index).parent_path() / "lexicon.tsv";
    if (std::filesystem::exists(sidecar)) lex = io::load_lexicon(sidecar);
  }
  return Analyzer(index, std::move(stop), std::move(lex));
}

inline ThesaurusIndex require_index(const CommonOptions& opt) {
  if (opt.index.empty()) throw Error(ErrorCode::kInvalidArgument, "--index is required");
  return io::load_index(opt.index);
}

// Input lines: --in file, else positional text, else stdin. Blank lines skipped.
inline std::vector<std::string> input_lines(const Context& ctx) {
  std::vector<std::string> lines;
  auto take = [&](std::istream& s) {
    std::string line;
    while (std::getline(s, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!str::trim(line).empty()) lines.push_back(line);
    }
  };
  if (!ctx.opt.in.empty()) {
    std::istringstream s(io::read_file(ctx.opt.in));
    take(s);
  } else if (!ctx.opt.text.empty()) {
    lines.push_back(str::join(ctx.opt.text, " "));
  } else {
    take(ctx.in);
  }
  return lines;
}

inline nlohmann::ordered_json tokens_json(const AnalyzedSentence& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& t : s.tokens) {
    arr.push_back({{"surface", t.surface},
                   {"lemma", t.lemma},
                   {"pos", pos_name(t.pos)},
                   {"position", t.position},
                   {"stopword", t.is_stopword}});
  }
  return arr;
}

inline int cmd_build_index(Context& ctx, const std::string& source, const std::string& out_path, bool force) {
  if (ctx.opt.manifest.empty()) throw Error(ErrorCode::kInvalidArgument, "--manifest is required");
  SectionManifest manifest = io::load_manifest(ctx.opt.manifest);
  std::string raw = io::read_file(source);
  ctx.progress("parsing " + source);
  ThesaurusIndex index = parse_thesaurus(std::string_view(raw), manifest, ParseOptions{force});
  io::write_file_atomic(out_path, index.serialize());
  if (ctx.opt.json) {
    ctx.out << nlohmann::ordered_json{{"index", out_path},
                                      {"entries", index.entries().size()},
                                      {"sections", index.section_count()},
                                      {"checksum", index.source_checksum()}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "wrote " << out_path << ": " << index.entries().size() << " entries, " << index.section_count()
            << " sections, source " << index.source_checksum() << '\n';
  }
  return kExitOk;
}

inline int cmd_analyze(Context& ctx) {
  ThesaurusIndex index = require_index(ctx.opt);
  Analyzer analyzer = make_analyzer(index, ctx.opt);
  VectorTransform transform = parse_transform(ctx.opt.transform);
  auto partition = parse_partition(ctx.opt.partition);
  std::optional<SectionManifest> manifest;
  if (!ctx.opt.manifest.empty()) manifest = io::load_manifest(ctx.opt.manifest);
  for (const auto& line : input_lines(ctx)) {
    AnalyzedSentence s = analyzer.analyze(line);
    auto counts = apply_transform(s.vector.counts, transform, partition);
    if (ctx.opt.json) {
      nlohmann::ordered_json colls = nlohmann::ordered_json::array();
      for (const auto& c : s.collocations) {
        colls.push_back({{"phrase", c.surface_lemma}, {"pattern", pattern_name(c.pattern)}, {"position", c.position}});
      }
      nlohmann::ordered_json j{{"text", line},
                               {"tokens", tokens_json(s)},
                               {"collocations", colls},
                               {"vector", counts},
                               {"transform", transform_name(transform)}};
      if (manifest) j["sections"] = vector_json(s.vector, *manifest);
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << vector_csv_row(counts, line) << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_train(Context& ctx, const std::string& corpus_path, const std::string& format,
                     const std::string& model_path, TrainConfig cfg) {
  ThesaurusIndex index = require_index(ctx.opt);
  Analyzer analyzer = make_analyzer(index, ctx.opt);
  VectorTransform transform = parse_transform(ctx.opt.transform);
  auto partition = parse_partition(ctx.opt.partition);
  Corpus corpus = load_corpus(corpus_path, parse_corpus_format(format));
  ctx.progress("vectorizing " + std::to_string(corpus.records.size()) + " records");
  std::vector<LabeledInstance> data;
  for (const auto& r : corpus.records) {
    auto counts = apply_transform(analyzer.analyze(r.text).vector.counts, transform, partition);
    data.push_back(LabeledInstance{to_features(counts), r.label, r.id});
  }
  cfg.seed = ctx.opt.seed;
  ctx.progress("training " + std::string(family_name(cfg.family)));
  Classifier model = train_classifier(data, cfg);
  io::write_file_atomic(model_path, serialize_model(model));
  std::size_t correct = 0;
  for (const auto& d : data) correct += predict(model, d.vector).label == d.label ? 1 : 0;
  double acc = static_cast<double>(correct) / static_cast<double>(data.size());
  if (ctx.opt.json) {
    ctx.out << nlohmann::ordered_json{{"model", model_path},
                                      {"family", family_name(cfg.family)},
                                      {"transform", transform_name(transform)},
                                      {"records", data.size()},
                                      {"training_accuracy", acc}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "wrote " << model_path << " (" << family_name(cfg.family) << ", " << data.size()
            << " records, training accuracy " << fmt_metric(acc) << ")\n";
  }
  return kExitOk;
}

inline int cmd_classify(Context& ctx, const std::string& model_path) {
  if (model_path.empty()) throw Error(ErrorCode::kInvalidArgument, "--model is required");
  ThesaurusIndex index = require_index(ctx.opt);
  Analyzer analyzer = make_analyzer(index, ctx.opt);
  VectorTransform transform = parse_transform(ctx.opt.transform);
  auto partition = parse_partition(ctx.opt.partition);
  Classifier model = deserialize_model(io::read_file(model_path));
  for (const auto& line : input_lines(ctx)) {
    auto counts = apply_transform(analyzer.analyze(line).vector.counts, transform, partition);
    Prediction p = predict(model, to_features(counts));
    if (ctx.opt.json) {
      ctx.out << nlohmann::ordered_json{{"label", label_name(p.label)}, {"decision_value", p.decision_value}}.dump()
              << '\n';
    } else {
      ctx.out << label_name(p.label) << '\t' << p.decision_value << '\t' << line << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_locate(Context& ctx, const std::string& mode, const std::string& method_name_opt) {
  ThesaurusIndex index = require_index(ctx.opt);
  Analyzer analyzer = make_analyzer(index, ctx.opt);
  bool hetero = mode == "heterographic";
  if (!hetero && mode != "homographic") throw Error(ErrorCode::kInvalidArgument, "unknown mode '" + mode + "'");
  LocateMethod method = hetero ? LocateMethod::kPosition : LocateMethod::kSenseBased;
  if (!method_name_opt.empty()) method = parse_method(method_name_opt);
  for (const auto& line : input_lines(ctx)) {
    AnalyzedSentence s = analyzer.analyze(line);
    LocationResult r = method == LocateMethod::kPosition
                           ? locate_heterographic(s)
                           : locate_homographic(s, method, derive_seed(ctx.opt.seed, line), &index);
    if (ctx.opt.json) {
      ctx.out << location_json(r).dump() << '\n';
    } else {
      ctx.out << r.target << '\t' << line << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_experiment(Context& ctx, const std::string& config_path, const std::string& report_path,
                          const std::string& log_path) {
  if (config_path.empty()) throw Error(ErrorCode::kInvalidArgument, "--config is required");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(io::read_file(config_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("config: ") + e.what());
  }
  auto base = std::filesystem::path(config_path).parent_path();
  ExperimentConfig cfg = experiment_config_from_json(j, base);
  if (ctx.opt.index.empty() && j.contains("index")) {
    std::filesystem::path p = j["index"].get<std::string>();
    ctx.opt.index = (p.is_relative() ? base / p : p).string();
  }
  if (ctx.opt.partition != "8,8,8,10" || !j.contains("partition")) cfg.partition = parse_partition(ctx.opt.partition);
  if (cfg.corpus.empty()) throw Error(ErrorCode::kInvalidArgument, "config names no corpus");
  ThesaurusIndex index = require_index(ctx.opt);
  Analyzer analyzer = make_analyzer(index, ctx.opt);
  Corpus corpus = load_corpus(cfg.corpus, cfg.corpus_format);
  ctx.progress("corpus " + cfg.corpus + ": " + std::to_string(corpus.records.size()) + " records");

  std::string table, log;
  nlohmann::ordered_json report;
  if (cfg.task == Task::kClassify) {
    auto r = run_classification_experiment(corpus, analyzer, cfg);
    table = classification_table(r);
    report = classification_json(r);
    log = classification_log_jsonl(r);
  } else {
    auto r = run_location_experiment(corpus, analyzer, cfg);
    table = location_table(r);
    report = location_json(r);
    log = location_log_jsonl(r);
  }
  std::string rendered = ctx.opt.json ? report.dump(2) + "\n" : table;
  if (!report_path.empty()) io::write_file_atomic(report_path, rendered);
  if (!log_path.empty()) io::write_file_atomic(log_path, log);
  ctx.out << rendered;
  return kExitOk;
}

inline int cmd_explain(Context& ctx) {
  ThesaurusIndex index = require_index(ctx.opt);
  Analyzer analyzer = make_analyzer(index, ctx.opt);
  std::optional<SectionManifest> manifest;
  if (!ctx.opt.manifest.empty()) manifest = io::load_manifest(ctx.opt.manifest);
  auto section_label = [&](SectionId k) {
    std::string s = std::to_string(k);
    if (manifest && static_cast<std::size_t>(k) < manifest->sections().size()) s += " " + manifest->sections()[k].name;
    return s;
  };
  for (const auto& line : input_lines(ctx)) {
    AnalyzedSentence s = analyzer.analyze(line);
    LocationResult hom = locate_homographic(s, LocateMethod::kSenseBased, derive_seed(ctx.opt.seed, line), &index);
    LocationResult het = locate_heterographic(s);
    if (ctx.opt.json) {
      ctx.out << nlohmann::ordered_json{{"text", line},
                                        {"tokens", tokens_json(s)},
                                        {"vector", s.vector.counts},
                                        {"homographic", location_json(hom)},
                                        {"heterographic", location_json(het)}}
                     .dump()
              << '\n';
      continue;
    }
    ctx.out << "text: " << line << '\n';
    ctx.out << "units:";
    for (const auto& u : s.units) {
      ctx.out << ' ' << u.lemma << '{';
      for (std::size_t i = 0; i < u.sections.size(); ++i) ctx.out << (i ? "," : "") << u.sections[i];
      ctx.out << '}';
    }
    ctx.out << '\n';
    if (hom.groups) {
      const auto& g = *hom.groups;
      if (g.a_section >= 0) {
        ctx.out << "A: " << section_label(g.a_section) << (g.a_tied ? " (tied)" : "") << " ["
                << str::join(g.a_members, ", ") << "]\n";
      }
      for (std::size_t j = 0; j < g.b_groups.size(); ++j) {
        ctx.out << "B: " << section_label(g.b_sections[j]) << " [" << str::join(g.b_groups[j], ", ") << "]\n";
      }
    }
    ctx.out << "homographic: " << hom.target << '\n';
    for (const auto& c : hom.scores) {
      ctx.out << "  " << c.word << " v_alpha=" << c.v_alpha.value_or(0) << " v_beta=" << c.v_beta.value_or(0)
              << " z=" << c.z << " v_gamma=" << c.v_gamma << '\n';
    }
    ctx.out << "heterographic: " << het.target << '\n';
    for (const auto& c : het.scores) ctx.out << "  " << c.word << " v_gamma=" << c.v_gamma << '\n';
  }
  return kExitOk;
}

inline void add_common(CLI::App* sub, CommonOptions& o, bool text_input) {
  sub->add_option("--index", o.index, "Thesaurus index file");
  sub->add_option("--stopwords", o.stopwords, "Stopword list (one per line)");
  sub->add_option("--lexicon", o.lexicon, "POS lexicon (word<TAB>tag)");
  sub->add_option("--manifest", o.manifest, "Section manifest");
  sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sub->add_flag("--json", o.json, "Machine-readable output");
  sub->add_flag("--quiet", o.quiet, "Suppress progress messages");
  sub->add_option("--transform", o.transform, "Vector transform")
      ->check(CLI::IsMember({"none", "sort", "sort-partitioned"}))
      ->capture_default_str();
  sub->add_option("--partition", o.partition, "Block sizes for sort-partitioned")->capture_default_str();
  if (text_input) {
    sub->add_option("--in", o.in, "Input file, one sentence per line");
    sub->add_option("text", o.text, "Sentence (when --in is absent; stdin otherwise)");
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Semantic-field pun analysis", "semfields"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

  CommonOptions opt;
  std::string source, out_path, model_path, corpus_path, format = "tsv", family = "svm-rbf", mode = "homographic",
                                                        method, config_path, report_path, log_path;
  bool force = false;
  TrainConfig tc;
  std::string gamma = "scale";

  auto* build = app.add_subcommand("build-index", "Parse a Roget text into an index file");
  detail::add_common(build, opt, false);
  build->add_option("--source", source, "Roget thesaurus text")->required();
  build->add_option("--out", out_path, "Index output path")->required();
  build->add_flag("--force", force, "Accept a source whose checksum is not pinned");

  auto* analyze = app.add_subcommand("analyze", "Print semantic vectors");
  detail::add_common(analyze, opt, true);

  auto* train = app.add_subcommand("train", "Train a classifier on a labelled corpus");
  detail::add_common(train, opt, false);
  train->add_option("--in", corpus_path, "Corpus file")->required();
  train->add_option("--format", format, "Corpus format")->check(CLI::IsMember({"tsv", "jsonl"}))->capture_default_str();
  train->add_option("--model", model_path, "Model output path")->required();
  train->add_option("--family", family, "Model family")
      ->check(CLI::IsMember({"svm-linear", "svm-rbf", "logreg"}))
      ->capture_default_str();
  train->add_option("--C", tc.C, "SVM box constraint")->capture_default_str();
  train->add_option("--gamma", gamma, "RBF gamma or 'scale'")->capture_default_str();
  train->add_option("--l2", tc.l2, "Logistic regression L2 weight")->capture_default_str();
  train->add_flag("--standardize", tc.standardize, "Standardize features");
  train->add_flag("--grid-search", tc.grid_search, "5-fold grid search over C and gamma");

  auto* classify = app.add_subcommand("classify", "Label sentences as pun / not-pun");
  detail::add_common(classify, opt, true);
  classify->add_option("--model", model_path, "Model file")->required();

  auto* locate = app.add_subcommand("locate", "Locate the target word of a pun");
  detail::add_common(locate, opt, true);
  locate->add_option("--mode", mode, "Pun type")
      ->check(CLI::IsMember({"homographic", "heterographic"}))
      ->capture_default_str();
  locate->add_option("--method", method, "sense_based, last_word, random, most_polysemous or position");

  auto* experiment = app.add_subcommand("experiment", "Run a classification or location experiment");
  detail::add_common(experiment, opt, false);
  experiment->add_option("--config", config_path, "Experiment JSON")->required();
  experiment->add_option("--report", report_path, "Also write the report here");
  experiment->add_option("--log", log_path, "Per-seed JSONL log");

  auto* explain = app.add_subcommand("explain", "Show units, field groups and candidate scores");
  detail::add_common(explain, opt, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) {
      err << "run with --help for usage\n";
    }
    return kExitUsage;
  }

  detail::Context ctx{out, err, in, opt};
  try {
    if (*build) return detail::cmd_build_index(ctx, source, out_path, force);
    if (*analyze) return detail::cmd_analyze(ctx);
    if (*train) {
      tc.family = parse_family(family);
      if (gamma != "scale") {
        try {
          tc.gamma = std::stod(gamma);
        } catch (const std::exception&) {
          err << "error: --gamma must be a number or 'scale'\n";
          return kExitUsage;
        }
      }
      return detail::cmd_train(ctx, corpus_path, format, model_path, tc);
    }
    if (*classify) return detail::cmd_classify(ctx, model_path);
    if (*locate) return detail::cmd_locate(ctx, mode, method);
    if (*experiment) return detail::cmd_experiment(ctx, config_path, report_path, log_path);
    if (*explain) return detail::cmd_explain(ctx);
  } catch (const Error& e) {
    if (opt.json) {
      nlohmann::ordered_json j{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
      if (const auto* re = dynamic_cast<const RowError*>(&e)) j["error"]["row"] = re->row();
      out << j.dump() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    if (opt.json) out << nlohmann::ordered_json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << '\n';
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr, std::cin);
}

}  // namespace semfields::cli
