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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <unistd.h>

#include "semfields/semfields.hpp"

namespace semfields::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(SEMFIELDS_DATA_DIR) / name;
}

inline const ThesaurusIndex& bundled_index() {
  static const ThesaurusIndex index = io::load_index(data_path("index.txt"));
  return index;
}

inline const Analyzer& bundled_analyzer() {
  static const Analyzer analyzer(bundled_index(), io::load_stopwords(data_path("stopwords.txt")),
                                 io::load_lexicon(data_path("lexicon.tsv")));
  return analyzer;
}

inline constexpr const char* kBanker = "I used to be a banker but I lost interest.";
inline constexpr const char* kChurch =
    "When the church bought gas for their annual barbecue, proceeds went from the sacred to the propane.";

// Points in [-1, 1]^dims labelled by a random hyperplane through the
// origin, keeping only points at least `margin` away from it. Both classes
// are guaranteed to be present.
inline std::vector<LabeledInstance> separable_set(Rng& rng, std::size_t n, std::size_t dims, double margin = 0.1) {
  std::vector<double> w(dims);
  double norm = 0.0;
  for (auto& v : w) {
    v = rng.uniform() * 2.0 - 1.0;
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (auto& v : w) v /= norm;
  std::vector<LabeledInstance> out;
  while (out.size() < n) {
    std::vector<double> x(dims);
    for (auto& v : x) v = rng.uniform() * 2.0 - 1.0;
    double side = 0.0;
    for (std::size_t k = 0; k < dims; ++k) side += w[k] * x[k];
    if (std::abs(side) < margin) continue;
    Label want = out.size() % 2 == 0 ? Label::kPun : Label::kNotPun;
    Label got = side > 0 ? Label::kPun : Label::kNotPun;
    if (got != want) {
      for (auto& v : x) v = -v;
    }
    out.push_back(LabeledInstance{std::move(x), want, "x" + std::to_string(out.size())});
  }
  return out;
}

// Largest violation of the dual optimality conditions of a C-SVM solution:
// y_i f(x_i) >= 1 at alpha = 0, == 1 when free, <= 1 at alpha = C; plus the
// equality constraint sum alpha_i y_i = 0 and the box.
inline double kkt_violation(const SmoSolution& s, double C) {
  const std::size_t n = s.alpha.size();
  double worst = 0.0;
  double balance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double yf = s.y[i] * s.bias;
    for (std::size_t j = 0; j < n; ++j) yf += s.alpha[j] * s.Q[i][j];
    const double a = s.alpha[i];
    worst = std::max({worst, -a, a - C});
    if (a <= 0.0) worst = std::max(worst, 1.0 - yf);
    else if (a >= C) worst = std::max(worst, yf - 1.0);
    else worst = std::max(worst, std::abs(yf - 1.0));
    balance += a * s.y[i];
  }
  return std::max(worst, std::abs(balance));
}

// Field groups recomputed from scratch: tally every Section over the units,
// take the fullest (lowest id on ties) as A and every other Section sharing
// the runner-up count as B.
struct GroupsOracle {
  int a_section = -1;
  std::vector<std::string> a_members;
  std::vector<int> b_sections;
  std::vector<std::vector<std::string>> b_groups;
};

inline GroupsOracle brute_force_groups(const std::vector<SemanticUnit>& units) {
  std::map<int, std::vector<std::string>> members;
  for (const auto& u : units) {
    for (int k : u.sections) members[k].push_back(u.lemma);
  }
  GroupsOracle g;
  std::size_t top = 0;
  for (const auto& [k, m] : members) {
    if (m.size() > top) {
      top = m.size();
      g.a_section = k;
    }
  }
  if (g.a_section < 0) return g;
  g.a_members = members[g.a_section];
  std::size_t second = 0;
  for (const auto& [k, m] : members) {
    if (k != g.a_section) second = std::max(second, m.size());
  }
  for (const auto& [k, m] : members) {
    if (k != g.a_section && second > 0 && m.size() == second) {
      g.b_sections.push_back(k);
      g.b_groups.push_back(m);
    }
  }
  return g;
}

// A word salad of 1 to max_words indexed single words.
inline std::string random_sentence(Rng& rng, const ThesaurusIndex& index, std::size_t max_words = 8) {
  static const std::vector<std::string> vocab = [&] {
    std::vector<std::string> v;
    for (const auto& [word, entry] : index.entries()) {
      if (word.find_first_of(" '-") == std::string::npos) v.push_back(word);
    }
    return v;
  }();
  std::size_t n = 1 + rng.below(max_words);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.empty()) out += ' ';
    out += vocab[rng.below(vocab.size())];
  }
  return out + ".";
}

// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("semfields-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace semfields::testing
