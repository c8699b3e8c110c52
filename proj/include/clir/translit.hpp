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
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "clir/text.hpp"

namespace clir::translit {

// Letter-level similarity between English and romanized katakana, symbol
// dictionary induction by best-path alignment, and transliteration of
// unseen words with corpus-vocabulary filtering.

constexpr char kTerminator = '$';

class SimilarityTable {
 public:
  static SimilarityTable load(const std::filesystem::path& file);

  void add_pair(char a, char b);
  void set_vowels(const std::string& vowels);
  void set_consonants(const std::string& consonants);

  bool similar_pair(char a, char b) const;
  bool is_vowel(char c) const;
  bool is_consonant(char c) const;

 private:
  std::set<std::pair<char, char>> pairs_;  // stored with min char first
  std::string vowels_;
  std::string consonants_;
};

// 3 identical, 2 phonetically similar, 1 same vowel/consonant class, 0
// otherwise. The terminator scores 3 only against itself.
int letter_similarity(char e, char j, const SimilarityTable& table);

struct Correspondence {
  std::string english;   // one or more letters
  std::string japanese;  // romaji, whole morae
  bool operator==(const Correspondence&) const = default;
  auto operator<=>(const Correspondence&) const = default;
};

struct Alignment {
  std::vector<Correspondence> correspondences;
  int score = 0;
};

struct DegenerateAlignment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximum-similarity monotone path over the letter matrix (moves: diagonal,
// right, down; the entered cell's similarity is added; the first cell's
// similarity counts; both words get a terminator). The best path is cut into
// symbol correspondences at mora boundaries.
Alignment align_word_pair(std::string_view english,
                          std::span<const std::string> morae,
                          const SimilarityTable& table);

struct SymbolPair {
  std::string english;
  std::string japanese;
  long count = 0;
  bool operator==(const SymbolPair&) const = default;
};

class TranslitModel {
 public:
  void add(const std::string& english, const std::string& japanese,
           long count = 1);

  long pair_count(const std::string& english, const std::string& japanese) const;
  long total_english(const std::string& english) const;
  long total_japanese(const std::string& japanese) const;

  const std::map<std::string, long>* english_candidates(
      const std::string& japanese) const;
  const std::map<std::string, long>* japanese_candidates(
      const std::string& english) const;

  bool has_japanese_symbol(const std::string& symbol) const;
  bool has_english_symbol(const std::string& symbol) const;
  std::size_t max_japanese_symbol_length() const;
  std::size_t max_english_symbol_length() const;

  std::vector<SymbolPair> pairs() const;  // sorted by (english, japanese)
  std::size_t pair_size() const;
  bool empty() const { return by_english_.empty(); }

  void save(const std::filesystem::path& file) const;
  static TranslitModel load(const std::filesystem::path& file);

 private:
  std::map<std::string, std::map<std::string, long>> by_english_;
  std::map<std::string, std::map<std::string, long>> by_japanese_;
  std::map<std::string, long> totals_english_;
  std::map<std::string, long> totals_japanese_;
};

struct BuildCounts {
  long aligned = 0;
  long discarded = 0;
};

// Aligns every (english word, katakana word) pair and accumulates symbol
// counts; pairs whose total similarity is not above the threshold are
// discarded. Without an explicit threshold, 2 * max(word lengths) is used,
// per pair.
TranslitModel build_translit_dictionary(
    const std::vector<std::pair<std::string, std::string>>& word_pairs,
    const SimilarityTable& table, const text::RomanizationTable& roman,
    std::optional<int> threshold = std::nullopt, BuildCounts* counts = nullptr);

std::vector<std::pair<std::string, std::string>> load_word_pairs(
    const std::filesystem::path& file);

enum class Direction { japanese_to_english, english_to_japanese };

struct VocabEntry {
  long count = 0;
  std::string surface;  // display form; differs from the key for katakana
};

// Indexed words of the target language with occurrence counts. Keys are in
// the composition alphabet: lowercase words for English, romaji for
// katakana targets.
class TargetVocabulary {
 public:
  void add(const std::string& key, long count, std::string surface = {});
  const VocabEntry* find(const std::string& key) const;
  long total() const { return total_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, VocabEntry> entries_;
  long total_ = 0;
};

struct TranslitCandidate {
  std::string word;     // vocabulary key
  std::string surface;  // display form
  double score = 0.0;
  bool operator==(const TranslitCandidate&) const = default;
};

struct NoSegmentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoCandidate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Segments the source into the minimal number of known symbols, composes
// target candidates from symbol correspondences, drops unindexed words and
// ranks the rest by P(T) * product of P(s|t). Top k, ties lexicographic.
std::vector<TranslitCandidate> transliterate(std::string_view source_utf8,
                                             Direction direction,
                                             const TranslitModel& model,
                                             const TargetVocabulary& vocabulary,
                                             std::size_t k,
                                             const text::RomanizationTable& roman);

}  // namespace clir::translit
