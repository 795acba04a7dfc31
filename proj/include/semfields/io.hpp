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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "semfields/error.hpp"
#include "semfields/tagger.hpp"
#include "semfields/thesaurus.hpp"

namespace semfields::io {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temp file, then renames over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::kIoError, "cannot rename into '" + path.string() + "': " + ec.message());
  }
}

inline SectionManifest load_manifest(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return SectionManifest::parse(in);
}

inline ThesaurusIndex load_index(const std::filesystem::path& path) {
  return ThesaurusIndex::deserialize(read_file(path));
}

inline StopwordList load_stopwords(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return StopwordList::load(in);
}

inline Lexicon load_lexicon(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return Lexicon::load(in);
}

}  // namespace semfields::io
