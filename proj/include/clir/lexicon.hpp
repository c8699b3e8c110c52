// Copyright 2026 The clir Authors
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

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clir/corpus.hpp"
#include "clir/text.hpp"

namespace clir::lexicon {

// Base-word bilingual dictionary with correspondence counts. By convention
// the source side is Japanese and the target side is English; lookups in
// either direction are supported.

struct LexiconEntry {
  std::string source;
  std::string target;
  long count = 0;
  bool operator==(const LexiconEntry&) const = default;
};

struct UnknownWord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)),
        line(line) {}
  std::size_t line;
};

enum class Direction { target_given_source, source_given_target };

class Lexicon {
 public:
  void add(const std::string& source, const std::string& target, long count = 1);

  long pair_count(const std::string& source, const std::string& target) const;
  long total_source(const std::string& source) const;
  long total_target(const std::string& target) const;
  bool contains_source(const std::string& source) const;
  bool contains_target(const std::string& target) const;

  // Alternatives with counts, ordered lexicographically for determinism.
  const std::map<std::string, long>* targets_of(const std::string& source) const;
  std::vector<std::pair<std::string, long>> sources_of(const std::string& target) const;

  std::vector<LexiconEntry> entries() const;  // sorted by (source, target)
  std::size_t pair_size() const;
  bool empty() const { return by_source_.empty(); }

  void save(const std::filesystem::path& file) const;  // TSV source/target/count
  static Lexicon load(const std::filesystem::path& file);

 private:
  std::map<std::string, std::map<std::string, long>> by_source_;
  std::map<std::string, std::map<std::string, long>> by_target_;
  std::map<std::string, long> totals_by_source_;
  std::map<std::string, long> totals_by_target_;
};

// count(given, candidate) / total(given) in the requested direction; 0 for
// an absent pair. Throws UnknownWord when total(given) is zero.
double conditional_probability(const Lexicon& lexicon, const std::string& given,
                               const std::string& candidate, Direction direction);

// Characters that cannot begin or end a word, driving the right-shift rule
// of entry segmentation. Shipped as an editable data file.
struct ForbiddenChars {
  std::u32string word_initial;
  std::u32string word_final;

  bool forbidden_initial(char32_t ch) const;
  bool forbidden_final(char32_t ch) const;
  static ForbiddenChars load(const std::filesystem::path& file);
};

struct Unsegmentable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits the Japanese side of a two-base-word entry: at the leftmost
// character-type boundary when one exists, otherwise at the middle (left of
// center for odd lengths), then shifts right past forbidden boundary
// characters. Throws Unsegmentable when shifting exhausts the word.
std::pair<std::string, std::string> segment_entry_word(
    std::string_view japanese_utf8, const ForbiddenChars& forbidden);

struct BuildStats {
  long entries = 0;
  long built = 0;
  long skipped_word_count = 0;   // English side != 2 base words
  long skipped_unsegmentable = 0;
};

// Builds the base-word lexicon from (japanese, english) compound entries
// whose English side has exactly two base words; pairing is positional.
Lexicon build_base_word_dictionary(
    const std::vector<std::pair<std::string, std::string>>& entries,
    const ForbiddenChars& forbidden, const text::RootTable& roots,
    BuildStats* stats = nullptr);

std::vector<std::pair<std::string, std::string>> load_bilingual_entries(
    const std::filesystem::path& file);

struct AbbreviationEntry {
  std::string abbreviation;   // uppercase letters/digits
  std::string complete_form;  // lowercased, space-separated words
  long frequency = 0;
  bool operator==(const AbbreviationEntry&) const = default;
};

// Scans English text for "Complete Form (ABBR)" and "ABBR (complete form)"
// patterns; a match requires the normalized abbreviation's characters to be
// the initial letters of the complete form's words, in order.
std::vector<AbbreviationEntry> extract_abbreviations(
    const std::vector<corpus::Document>& docs, long min_frequency = 1);
std::vector<AbbreviationEntry> extract_abbreviations_from_text(
    const std::string& utf8_text);

class AbbreviationTable {
 public:
  void add(const AbbreviationEntry& entry);
  // Complete forms for an abbreviation (normalized uppercase), sorted by
  // descending frequency then form.
  std::vector<AbbreviationEntry> lookup(const std::string& abbreviation) const;
  std::size_t size() const;

  void save(const std::filesystem::path& file) const;  // TSV abbr/form/freq
  static AbbreviationTable load(const std::filesystem::path& file);

 private:
  std::map<std::string, std::map<std::string, long>> forms_;
};

// Single-word fallback pairs from a TSV file (source/target with optional
// count); rows whose either side has multiple words are skipped.
Lexicon load_general_dictionary(const std::filesystem::path& file,
                                long* skipped = nullptr);

}  // namespace clir::lexicon
