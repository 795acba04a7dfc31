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

// Roget-style thesaurus parsing and the word -> Section index.
//
// The raw text follows the Project Gutenberg layout:
//
//   CLASS I
//   WORDS EXPRESSING ABSTRACT RELATIONS
//   SECTION I.  EXISTENCE
//   #1. Existence.--N. existence, being, entity; ...
//        V. exist, be; have being &c. n.; ...
//
// DIVISION lines are recorded but carry no weight: Sections are the only
// classification grain. Each heading's part-of-speech block (N., V., Adj.,
// Adv., Phr., Int., Prep., Conj.) is one thesaurus position.

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semfields/error.hpp"
#include "semfields/strings.hpp"

namespace semfields {

using SectionId = int;

inline constexpr std::size_t kDefaultSectionCount = 34;

struct SectionInfo {
  SectionId id = 0;
  std::string name;
  std::string class_label;

  friend bool operator==(const SectionInfo&, const SectionInfo&) = default;
};

// Ordered Section partition plus the checksums of accepted thesaurus sources.
//
// File format, one record per line:
//   id<TAB>section-name<TAB>class-label
//   #pin<TAB>fnv1a64:<16 hex digits>
// Other lines starting with '#' and blank lines are ignored.
class SectionManifest {
 public:
  SectionManifest() = default;
  explicit SectionManifest(std::vector<SectionInfo> sections,
                           std::vector<std::string> pins = {})
      : sections_(std::move(sections)), pins_(std::move(pins)) {
    validate();
  }

  static SectionManifest parse(std::istream& in) {
    std::vector<SectionInfo> sections;
    std::vector<std::string> pins;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      ++row;
      std::string_view view = str::trim(line);
      if (view.empty()) continue;
      if (str::starts_with(view, "#pin")) {
        auto fields = str::split(view, '\t');
        if (fields.size() != 2 || str::trim(fields[1]).empty()) {
          throw RowError(ErrorCode::kParseError, row, "malformed #pin line");
        }
        pins.emplace_back(str::trim(fields[1]));
        continue;
      }
      if (view.front() == '#') continue;
      auto fields = str::split(view, '\t');
      if (fields.size() != 3) {
        throw RowError(ErrorCode::kParseError, row, "expected id<TAB>name<TAB>class");
      }
      SectionInfo info;
      try {
        std::size_t used = 0;
        info.id = std::stoi(fields[0], &used);
        if (used != fields[0].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw RowError(ErrorCode::kParseError, row, "bad section id '" + fields[0] + "'");
      }
      info.name = str::squeeze_spaces(fields[1]);
      info.class_label = str::squeeze_spaces(fields[2]);
      sections.push_back(std::move(info));
    }
    return SectionManifest(std::move(sections), std::move(pins));
  }

  std::size_t size() const { return sections_.size(); }
  const std::vector<SectionInfo>& sections() const { return sections_; }
  const std::vector<std::string>& pins() const { return pins_; }
  const SectionInfo& at(SectionId id) const { return sections_.at(static_cast<std::size_t>(id)); }

  bool is_pinned(std::string_view checksum) const {
    return std::find(pins_.begin(), pins_.end(), checksum) != pins_.end();
  }

  // Matches a Section heading found in the raw text; case and spacing are ignored.
  std::optional<SectionId> find(std::string_view class_label, std::string_view name) const {
    const std::string want_class = key(class_label);
    const std::string want_name = key(name);
    for (const auto& s : sections_) {
      if (key(s.class_label) == want_class && key(s.name) == want_name) return s.id;
    }
    return std::nullopt;
  }

  friend bool operator==(const SectionManifest&, const SectionManifest&) = default;

 private:
  static std::string key(std::string_view s) { return str::to_lower(str::squeeze_spaces(s)); }

  void validate() const {
    if (sections_.empty()) throw Error(ErrorCode::kManifestMismatch, "manifest declares no sections");
    for (std::size_t i = 0; i < sections_.size(); ++i) {
      if (sections_[i].id != static_cast<SectionId>(i)) {
        throw Error(ErrorCode::kManifestMismatch,
                    "section ids must be dense and ordered; row " + std::to_string(i + 1) +
                        " has id " + std::to_string(sections_[i].id));
      }
      if (sections_[i].name.empty() || sections_[i].class_label.empty()) {
        throw Error(ErrorCode::kManifestMismatch, "section " + std::to_string(i) + " lacks a name or class");
      }
    }
  }

  std::vector<SectionInfo> sections_;
  std::vector<std::string> pins_;
};

struct ThesaurusEntry {
  std::string surface;
  std::vector<SectionId> sections;  // sorted, unique
  int entry_count = 0;

  friend bool operator==(const ThesaurusEntry&, const ThesaurusEntry&) = default;
};

inline bool is_possessive_pronoun(std::string_view w) {
  static constexpr std::string_view kPossessives[] = {"my",  "your", "his",   "her",  "its",
                                                      "our", "their", "one's", "ones", "thy"};
  return std::find(std::begin(kPossessives), std::end(kPossessives), w) != std::end(kPossessives);
}

// Lowercases, straightens apostrophes and squeezes whitespace. Inside
// multi-word phrases every possessive pronoun becomes the "one's" slot so
// "change my mind" and "change one's mind" share one key.
inline std::string normalize_surface(std::string_view surface) {
  std::string flat = str::squeeze_spaces(str::to_lower(str::straighten_quotes(surface)));
  if (flat.find(' ') == std::string::npos) return flat;
  auto words = str::split(flat, ' ');
  for (auto& w : words) {
    if (is_possessive_pronoun(w)) w = "one's";
  }
  return str::join(words, " ");
}

class ThesaurusIndex {
 public:
  static constexpr std::string_view kMagic = "SEMFIELDS-THESAURUS-INDEX";
  static constexpr int kFormatVersion = 1;

  ThesaurusIndex() = default;

  // Builds an index directly from entries; surfaces are normalized and merged.
  static ThesaurusIndex from_entries(SectionManifest manifest, std::vector<ThesaurusEntry> entries,
                                     std::string checksum = "fnv1a64:0000000000000000") {
    ThesaurusIndex index;
    index.manifest_ = std::move(manifest);
    index.checksum_ = std::move(checksum);
    for (auto& e : entries) {
      std::string key = normalize_surface(e.surface);
      auto& slot = index.entries_[key];
      slot.surface = key;
      slot.sections.insert(slot.sections.end(), e.sections.begin(), e.sections.end());
      slot.entry_count += e.entry_count;
    }
    for (auto& [key, entry] : index.entries_) index.finish(entry);
    return index;
  }

  const SectionManifest& manifest() const { return manifest_; }
  const std::string& source_checksum() const { return checksum_; }
  const std::map<std::string, ThesaurusEntry, std::less<>>& entries() const { return entries_; }
  std::size_t section_count() const { return manifest_.size(); }

  // Empty span for unknown surfaces.
  std::span<const SectionId> lookup(std::string_view surface) const {
    const ThesaurusEntry* e = find(surface);
    if (e == nullptr) return {};
    return e->sections;
  }

  int polysemy_count(std::string_view surface) const {
    const ThesaurusEntry* e = find(surface);
    return e == nullptr ? 0 : e->entry_count;
  }

  bool contains(std::string_view surface) const { return find(surface) != nullptr; }

  const ThesaurusEntry* find(std::string_view surface) const {
    auto it = entries_.find(normalize_surface(surface));
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Stable text layout:
  //   SEMFIELDS-THESAURUS-INDEX
  //   format<TAB>1
  //   checksum<TAB><source checksum>
  //   sections<TAB><n>
  //   section<TAB><id><TAB><name><TAB><class>      (n lines, ascending id)
  //   entries<TAB><m>
  //   <surface><TAB><entry_count><TAB><id,id,...>  (m lines, byte-sorted surface)
  //   end
  void write(std::ostream& out) const {
    out << kMagic << '\n';
    out << "format\t" << kFormatVersion << '\n';
    out << "checksum\t" << checksum_ << '\n';
    for (const auto& pin : manifest_.pins()) out << "pin\t" << pin << '\n';
    out << "sections\t" << manifest_.size() << '\n';
    for (const auto& s : manifest_.sections()) {
      out << "section\t" << s.id << '\t' << s.name << '\t' << s.class_label << '\n';
    }
    out << "entries\t" << entries_.size() << '\n';
    for (const auto& [key, e] : entries_) {
      out << key << '\t' << e.entry_count << '\t';
      for (std::size_t i = 0; i < e.sections.size(); ++i) {
        if (i) out << ',';
        out << e.sections[i];
      }
      out << '\n';
    }
    out << "end\n";
  }

  std::string serialize() const {
    std::ostringstream out;
    write(out);
    return out.str();
  }

  static ThesaurusIndex read(std::istream& in) {
    std::string line;
    std::size_t row = 0;
    auto next = [&](std::string_view what) -> std::vector<std::string> {
      if (!std::getline(in, line)) {
        throw Error(ErrorCode::kBadIndexFile, "truncated index file, expected " + std::string(what));
      }
      ++row;
      return str::split(line, '\t');
    };
    auto expect_key = [&](const std::vector<std::string>& f, std::string_view key, std::size_t arity) {
      if (f.empty() || f[0] != key || f.size() != arity) {
        throw RowError(ErrorCode::kBadIndexFile, row, "expected '" + std::string(key) + "' record");
      }
    };
    auto to_int = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw RowError(ErrorCode::kBadIndexFile, row, "bad integer '" + s + "'");
      }
    };

    auto magic = next("magic");
    if (magic.size() != 1 || magic[0] != kMagic) throw Error(ErrorCode::kBadIndexFile, "bad magic string");
    auto fmt = next("format");
    expect_key(fmt, "format", 2);
    if (to_int(fmt[1]) != kFormatVersion) {
      throw Error(ErrorCode::kBadIndexFile, "unsupported index format version " + fmt[1]);
    }
    auto sum = next("checksum");
    expect_key(sum, "checksum", 2);

    std::vector<std::string> pins;
    auto rec = next("sections");
    while (!rec.empty() && rec[0] == "pin") {
      expect_key(rec, "pin", 2);
      pins.push_back(rec[1]);
      rec = next("sections");
    }
    expect_key(rec, "sections", 2);
    const int n_sections = to_int(rec[1]);
    std::vector<SectionInfo> sections;
    for (int i = 0; i < n_sections; ++i) {
      auto s = next("section");
      expect_key(s, "section", 4);
      sections.push_back(SectionInfo{to_int(s[1]), s[2], s[3]});
    }
    ThesaurusIndex index;
    index.manifest_ = SectionManifest(std::move(sections), std::move(pins));
    index.checksum_ = sum[1];

    auto count = next("entries");
    expect_key(count, "entries", 2);
    const int n_entries = to_int(count[1]);
    for (int i = 0; i < n_entries; ++i) {
      auto f = next("entry");
      if (f.size() != 3 || f[0].empty()) throw RowError(ErrorCode::kBadIndexFile, row, "bad entry record");
      ThesaurusEntry e;
      e.surface = f[0];
      e.entry_count = to_int(f[1]);
      for (const auto& id : str::split(f[2], ',')) e.sections.push_back(to_int(id));
      for (SectionId id : e.sections) {
        if (id < 0 || static_cast<std::size_t>(id) >= index.manifest_.size()) {
          throw RowError(ErrorCode::kBadIndexFile, row, "section id out of range");
        }
      }
      if (!std::is_sorted(e.sections.begin(), e.sections.end()) ||
          std::adjacent_find(e.sections.begin(), e.sections.end()) != e.sections.end() ||
          e.entry_count < static_cast<int>(e.sections.size())) {
        throw RowError(ErrorCode::kBadIndexFile, row, "entry violates section-set invariants");
      }
      if (!index.entries_.emplace(e.surface, e).second) {
        throw RowError(ErrorCode::kBadIndexFile, row, "duplicate surface '" + e.surface + "'");
      }
    }
    auto end = next("end");
    if (end.size() != 1 || end[0] != "end") throw RowError(ErrorCode::kBadIndexFile, row, "missing end marker");
    return index;
  }

  static ThesaurusIndex deserialize(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read(in);
  }

 private:
  friend class ThesaurusParser;

  void finish(ThesaurusEntry& e) {
    std::sort(e.sections.begin(), e.sections.end());
    e.sections.erase(std::unique(e.sections.begin(), e.sections.end()), e.sections.end());
    e.entry_count = std::max(e.entry_count, static_cast<int>(e.sections.size()));
  }

  SectionManifest manifest_;
  std::string checksum_;
  std::map<std::string, ThesaurusEntry, std::less<>> entries_;
};

struct ParseOptions {
  // Accept a source whose checksum is not pinned by the manifest.
  bool force = false;
};

class ThesaurusParser {
 public:
  ThesaurusParser(const SectionManifest& manifest, ParseOptions options)
      : manifest_(manifest), options_(options) {}

  ThesaurusIndex parse(std::string_view raw) {
    const std::string checksum = str::checksum_tag(raw);
    if (!options_.force && !manifest_.is_pinned(checksum)) {
      throw Error(ErrorCode::kUnpinnedSource,
                  "thesaurus source " + checksum + " is not pinned by the manifest (use force to override)");
    }

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= raw.size()) {
      std::size_t end = raw.find('\n', start);
      std::string_view line = raw.substr(start, end == std::string_view::npos ? raw.size() - start : end - start);
      ++line_no;
      if (!handle_line(line, line_no)) break;
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    flush_heading();

    if (headings_ == 0) throw Error(ErrorCode::kMalformedSource, "no '#n.' headings found");
    std::vector<SectionId> missing;
    for (const auto& s : manifest_.sections()) {
      if (!seen_sections_.count(s.id)) missing.push_back(s.id);
    }
    if (!missing.empty()) {
      throw Error(ErrorCode::kManifestMismatch,
                  "manifest section " + std::to_string(missing.front()) + " (" +
                      manifest_.at(missing.front()).name + ") does not occur in the source");
    }

    ThesaurusIndex index;
    index.manifest_ = manifest_;
    index.checksum_ = checksum;
    for (auto& [surface, acc] : acc_) {
      ThesaurusEntry e;
      e.surface = surface;
      e.sections.assign(acc.sections.begin(), acc.sections.end());
      e.entry_count = static_cast<int>(acc.positions.size());
      index.entries_.emplace(surface, std::move(e));
    }
    return index;
  }

  const std::vector<std::string>& divisions() const { return divisions_; }

 private:
  struct Accumulator {
    std::set<SectionId> sections;
    std::set<std::pair<int, int>> positions;  // (heading ordinal, block ordinal)
  };

  static std::optional<std::string_view> marker(std::string_view line, std::string_view word) {
    if (!str::starts_with(line, word)) return std::nullopt;
    std::string_view rest = line.substr(word.size());
    if (!rest.empty() && !str::is_space(rest.front())) return std::nullopt;
    return str::trim(rest);
  }

  static bool is_roman(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return c == 'I' || c == 'V' || c == 'X' || c == 'L' || c == 'C';
    });
  }

  // Returns false once the Gutenberg end-of-text marker is reached.
  bool handle_line(std::string_view raw_line, std::size_t line_no) {
    std::string_view line = str::trim(raw_line);
    if (str::starts_with(line, "*** END OF")) return false;
    if (str::starts_with(line, "*** START OF")) {
      // Gutenberg boilerplate ends here; anything before is ignored anyway.
      return true;
    }
    if (auto rest = marker(line, "CLASS")) {
      std::string_view numeral = rest->substr(0, rest->find_first_of(" .\t"));
      if (!is_roman(numeral)) throw malformed(line_no, "CLASS marker without a roman numeral");
      flush_heading();
      class_label_ = "Class " + std::string(numeral);
      section_ = -1;
      return true;
    }
    if (marker(line, "DIVISION")) {
      if (class_label_.empty()) throw malformed(line_no, "DIVISION before any CLASS");
      flush_heading();
      divisions_.push_back(class_label_ + " / " + std::string(line));
      return true;
    }
    if (auto rest = marker(line, "SECTION")) {
      if (class_label_.empty()) throw malformed(line_no, "SECTION before any CLASS");
      std::string_view numeral = rest->substr(0, rest->find_first_of(" .\t"));
      if (!is_roman(numeral)) throw malformed(line_no, "SECTION marker without a roman numeral");
      std::string_view name = str::trim(rest->substr(numeral.size()));
      while (!name.empty() && (name.front() == '.' || str::is_space(name.front()))) name.remove_prefix(1);
      while (!name.empty() && (name.back() == '.' || str::is_space(name.back()))) name.remove_suffix(1);
      flush_heading();
      auto id = manifest_.find(class_label_, name);
      if (!id) {
        throw Error(ErrorCode::kManifestMismatch, "line " + std::to_string(line_no) + ": section '" +
                                                      std::string(name) + "' of " + class_label_ +
                                                      " has no manifest row");
      }
      if (seen_sections_.count(*id)) throw malformed(line_no, "section '" + std::string(name) + "' repeated");
      if (*id <= last_section_) throw malformed(line_no, "section '" + std::string(name) + "' out of order");
      seen_sections_.insert(*id);
      last_section_ = *id;
      section_ = *id;
      return true;
    }
    if (line.size() > 1 && line.front() == '#' && std::isdigit(static_cast<unsigned char>(line[1]))) {
      if (section_ < 0) throw malformed(line_no, "heading outside of any SECTION");
      flush_heading();
      heading_text_.assign(line.substr(1));
      in_heading_ = true;
      return true;
    }
    if (is_title_line(line)) {
      // Subheadings such as "2. BEING, IN THE CONCRETE" close the open heading.
      flush_heading();
      return true;
    }
    if (in_heading_ && !line.empty()) {
      heading_text_.push_back(' ');
      heading_text_.append(line);
    }
    return true;
  }

  static bool is_title_line(std::string_view line) {
    int letters = 0;
    for (char c : line) {
      unsigned char u = static_cast<unsigned char>(c);
      if (std::islower(u)) return false;
      if (std::isupper(u)) ++letters;
    }
    return letters >= 3;
  }

  Error malformed(std::size_t line_no, const std::string& what) const {
    return Error(ErrorCode::kMalformedSource, "line " + std::to_string(line_no) + ": " + what);
  }

  static std::string strip_brackets(std::string_view s) {
    std::string out;
    int square = 0;
    int curly = 0;
    int round = 0;
    for (char c : s) {
      if (c == '[') ++square;
      else if (c == ']' && square) --square;
      else if (c == '{') ++curly;
      else if (c == '}' && curly) --curly;
      else if (c == '(') ++round;
      else if (c == ')' && round) --round;
      else if (!square && !curly && !round) out.push_back(c);
    }
    return out;
  }

  // Part-of-speech block markers, matched at token start.
  static std::size_t block_marker_length(std::string_view s, std::size_t i) {
    static constexpr std::string_view kMarkers[] = {"Adj.", "Adv.", "Phr.", "Int.", "Prep.",
                                                    "Conj.", "N.", "V."};
    if (i > 0 && !(str::is_space(s[i - 1]) || s[i - 1] == '-' || s[i - 1] == ';' || s[i - 1] == '.')) {
      return 0;
    }
    for (auto m : kMarkers) {
      if (s.substr(i, m.size()) == m) {
        std::size_t after = i + m.size();
        if (after == s.size() || str::is_space(s[after]) || s[after] == '-') return m.size();
      }
    }
    return 0;
  }

  static std::string clean_item(std::string_view item) {
    std::string out;
    for (char c : item) {
      if (c == '"' || c == '!' || c == '?' || c == ':' || std::isdigit(static_cast<unsigned char>(c))) continue;
      out.push_back(c);
    }
    std::string s = str::squeeze_spaces(out);
    while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
    while (!s.empty() && (s.front() == '.' || s.front() == ' ' || s.front() == '-')) s.erase(s.begin());
    for (char c : s) {
      unsigned char u = static_cast<unsigned char>(c);
      if (!(std::isalpha(u) || c == ' ' || c == '\'' || c == '-')) return {};
    }
    return normalize_surface(s);
  }

  void add(const std::string& surface, int block) {
    if (surface.empty()) return;
    auto& acc = acc_[surface];
    acc.sections.insert(section_);
    acc.positions.emplace(headings_, block);
  }

  void flush_heading() {
    if (!in_heading_) return;
    in_heading_ = false;
    ++headings_;
    std::string text = str::straighten_quotes(heading_text_);
    heading_text_.clear();

    // "#12a. Headword.--N. item, item; ..." : skip the number, take the headword.
    std::size_t dot = text.find('.');
    std::string_view body = dot == std::string::npos ? std::string_view(text) : std::string_view(text).substr(dot + 1);
    std::size_t dash = body.find("--");
    std::string_view headword = dash == std::string_view::npos ? std::string_view{} : body.substr(0, dash);
    if (dash != std::string_view::npos) {
      std::string hw = strip_brackets(headword);
      add(clean_item(hw), 0);
      body = body.substr(dash + 2);
    }

    std::string cleaned = strip_brackets(body);
    std::string_view rest = cleaned;
    int block = 0;
    bool phrase_block = false;
    std::string current;
    auto flush_item = [&] {
      if (current.find("&c") == std::string::npos) add(clean_item(current), block);
      current.clear();
    };
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (std::size_t len = block_marker_length(rest, i)) {
        flush_item();
        ++block;
        phrase_block = rest.substr(i, len) == "Phr.";
        i += len - 1;
        continue;
      }
      char c = rest[i];
      if (c == ';' || (c == ',' && !phrase_block)) {
        flush_item();
        continue;
      }
      current.push_back(c);
    }
    flush_item();
  }

  const SectionManifest& manifest_;
  ParseOptions options_;
  std::string class_label_;
  SectionId section_ = -1;
  SectionId last_section_ = -1;
  std::set<SectionId> seen_sections_;
  std::vector<std::string> divisions_;
  bool in_heading_ = false;
  std::string heading_text_;
  int headings_ = 0;
  std::map<std::string, Accumulator> acc_;
};

inline ThesaurusIndex parse_thesaurus(std::string_view raw, const SectionManifest& manifest,
                                      ParseOptions options = {}) {
  ThesaurusParser parser(manifest, options);
  return parser.parse(raw);
}

inline ThesaurusIndex parse_thesaurus(std::istream& raw, const SectionManifest& manifest,
                                      ParseOptions options = {}) {
  std::ostringstream buf;
  buf << raw.rdbuf();
  return parse_thesaurus(buf.str(), manifest, options);
}

}  // namespace semfields
