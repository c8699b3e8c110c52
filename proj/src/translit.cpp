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

#include "clir/translit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <limits>

namespace clir::translit {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

SimilarityTable SimilarityTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open similarity table: " + file.string());
  SimilarityTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols[0] == "pair" && cols.size() == 3 && cols[1].size() == 1 &&
        cols[2].size() == 1) {
      table.add_pair(cols[1][0], cols[2][0]);
    } else if (cols[0] == "vowels" && cols.size() == 2) {
      table.set_vowels(cols[1]);
    } else if (cols[0] == "consonants" && cols.size() == 2) {
      table.set_consonants(cols[1]);
    } else {
      throw std::runtime_error("malformed similarity row at line " +
                               std::to_string(lineno) + " of " + file.string());
    }
  }
  return table;
}

void SimilarityTable::add_pair(char a, char b) {
  pairs_.insert({std::min(a, b), std::max(a, b)});
}

void SimilarityTable::set_vowels(const std::string& vowels) { vowels_ = vowels; }

void SimilarityTable::set_consonants(const std::string& consonants) {
  consonants_ = consonants;
}

bool SimilarityTable::similar_pair(char a, char b) const {
  return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool SimilarityTable::is_vowel(char c) const {
  return vowels_.find(c) != std::string::npos;
}

bool SimilarityTable::is_consonant(char c) const {
  return consonants_.find(c) != std::string::npos;
}

int letter_similarity(char e, char j, const SimilarityTable& table) {
  if (e == j) return 3;
  if (e == kTerminator || j == kTerminator) return 0;
  if (table.similar_pair(e, j)) return 2;
  if (table.is_vowel(e) && table.is_vowel(j)) return 1;
  if (table.is_consonant(e) && table.is_consonant(j)) return 1;
  return 0;
}

Alignment align_word_pair(std::string_view english,
                          std::span<const std::string> morae,
                          const SimilarityTable& table) {
  if (english.empty() || morae.empty())
    throw DegenerateAlignment("empty input word");

  std::string eng = to_lower(english);
  eng.push_back(kTerminator);

  std::string jpn;
  std::vector<std::size_t> mora_of;  // row -> mora index
  for (std::size_t m = 0; m < morae.size(); ++m) {
    jpn += morae[m];
    mora_of.resize(jpn.size(), m);
  }
  jpn.push_back(kTerminator);
  mora_of.push_back(morae.size());  // terminator pseudo-mora

  const std::size_t rows = jpn.size();
  const std::size_t cols = eng.size();
  constexpr int kNoPath = std::numeric_limits<int>::min() / 2;

  std::vector<std::vector<int>> dp(rows, std::vector<int>(cols, kNoPath));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      int sim = letter_similarity(eng[j], jpn[i], table);
      if (i == 0 && j == 0) {
        dp[i][j] = sim;
        continue;
      }
      int best = kNoPath;
      if (i > 0 && j > 0) best = std::max(best, dp[i - 1][j - 1]);
      if (j > 0) best = std::max(best, dp[i][j - 1]);
      if (i > 0) best = std::max(best, dp[i - 1][j]);
      dp[i][j] = best + sim;
    }
  }

  int score = dp[rows - 1][cols - 1];
  if (score <= 0) throw DegenerateAlignment("no positive-similarity path");

  // Backtrace, preferring diagonal, then right, then down.
  std::vector<std::pair<std::size_t, std::size_t>> path;
  std::size_t i = rows - 1, j = cols - 1;
  while (true) {
    path.emplace_back(i, j);
    if (i == 0 && j == 0) break;
    int need = dp[i][j] - letter_similarity(eng[j], jpn[i], table);
    if (i > 0 && j > 0 && dp[i - 1][j - 1] == need) {
      --i;
      --j;
    } else if (j > 0 && dp[i][j - 1] == need) {
      --j;
    } else {
      --i;
    }
  }
  std::reverse(path.begin(), path.end());

  // Each mora claims the English letters whose path cells fall in its rows;
  // letters sharing a mora merge into one correspondence, letters touching
  // no mora (terminator-row cells) merge leftward.
  const std::size_t n_letters = cols - 1;
  const std::size_t n_morae = morae.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::pair<std::size_t, std::size_t>> span(n_letters, {kNone, kNone});
  std::size_t max_claimed_mora = 0;
  bool any_claim = false;
  for (auto [r, c] : path) {
    if (c >= n_letters) continue;            // terminator column
    std::size_t m = mora_of[r];
    if (m >= n_morae) continue;              // terminator row
    auto& [lo, hi] = span[c];
    if (lo == kNone) lo = m;
    hi = m;
    max_claimed_mora = std::max(max_claimed_mora, m);
    any_claim = true;
  }
  if (!any_claim) throw DegenerateAlignment("path touches no mora");

  struct Group {
    std::size_t letter_begin, letter_end;  // [begin, end)
    std::size_t mora_begin, mora_end;      // [begin, end)
  };
  std::vector<Group> groups;
  for (std::size_t c = 0; c < n_letters; ++c) {
    auto [lo, hi] = span[c];
    if (lo == kNone) {
      // Letter aligned only to the terminator row: extend the last group.
      groups.back().letter_end = c + 1;
      continue;
    }
    if (!groups.empty() && lo < groups.back().mora_end) {
      groups.back().letter_end = c + 1;
      groups.back().mora_end = std::max(groups.back().mora_end, hi + 1);
    } else {
      groups.push_back({c, c + 1, lo, hi + 1});
    }
  }
  // Morae visited only in the terminator column attach to the last group.
  groups.back().mora_end = std::max(groups.back().mora_end, n_morae);

  Alignment result;
  result.score = score;
  for (const Group& g : groups) {
    Correspondence corr;
    corr.english = eng.substr(g.letter_begin, g.letter_end - g.letter_begin);
    for (std::size_t m = g.mora_begin; m < g.mora_end; ++m)
      corr.japanese += morae[m];
    result.correspondences.push_back(std::move(corr));
  }
  return result;
}

void TranslitModel::add(const std::string& english, const std::string& japanese,
                        long count) {
  if (count <= 0) return;
  by_english_[english][japanese] += count;
  by_japanese_[japanese][english] += count;
  totals_english_[english] += count;
  totals_japanese_[japanese] += count;
}

long TranslitModel::pair_count(const std::string& english,
                               const std::string& japanese) const {
  auto it = by_english_.find(english);
  if (it == by_english_.end()) return 0;
  auto jt = it->second.find(japanese);
  return jt == it->second.end() ? 0 : jt->second;
}

long TranslitModel::total_english(const std::string& english) const {
  auto it = totals_english_.find(english);
  return it == totals_english_.end() ? 0 : it->second;
}

long TranslitModel::total_japanese(const std::string& japanese) const {
  auto it = totals_japanese_.find(japanese);
  return it == totals_japanese_.end() ? 0 : it->second;
}

const std::map<std::string, long>* TranslitModel::english_candidates(
    const std::string& japanese) const {
  auto it = by_japanese_.find(japanese);
  return it == by_japanese_.end() ? nullptr : &it->second;
}

const std::map<std::string, long>* TranslitModel::japanese_candidates(
    const std::string& english) const {
  auto it = by_english_.find(english);
  return it == by_english_.end() ? nullptr : &it->second;
}

bool TranslitModel::has_japanese_symbol(const std::string& symbol) const {
  return totals_japanese_.count(symbol) > 0;
}

bool TranslitModel::has_english_symbol(const std::string& symbol) const {
  return totals_english_.count(symbol) > 0;
}

std::size_t TranslitModel::max_japanese_symbol_length() const {
  std::size_t n = 0;
  for (const auto& [symbol, total] : totals_japanese_)
    n = std::max(n, symbol.size());
  return n;
}

std::size_t TranslitModel::max_english_symbol_length() const {
  std::size_t n = 0;
  for (const auto& [symbol, total] : totals_english_)
    n = std::max(n, symbol.size());
  return n;
}

std::vector<SymbolPair> TranslitModel::pairs() const {
  std::vector<SymbolPair> out;
  for (const auto& [english, japanese_counts] : by_english_)
    for (const auto& [japanese, count] : japanese_counts)
      out.push_back({english, japanese, count});
  return out;
}

std::size_t TranslitModel::pair_size() const {
  std::size_t n = 0;
  for (const auto& [english, japanese_counts] : by_english_)
    n += japanese_counts.size();
  return n;
}

void TranslitModel::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write transliteration model: " + file.string());
  for (const auto& [english, japanese_counts] : by_english_)
    for (const auto& [japanese, count] : japanese_counts)
      out << english << '\t' << japanese << '\t' << count << '\n';
}

TranslitModel TranslitModel::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open transliteration model: " + file.string());
  TranslitModel model;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty())
      throw std::runtime_error("malformed model row at line " +
                               std::to_string(lineno) + " of " + file.string());
    model.add(cols[0], cols[1], std::stol(cols[2]));
  }
  return model;
}

TranslitModel build_translit_dictionary(
    const std::vector<std::pair<std::string, std::string>>& word_pairs,
    const SimilarityTable& table, const text::RomanizationTable& roman,
    std::optional<int> threshold, BuildCounts* counts) {
  TranslitModel model;
  BuildCounts local;
  for (const auto& [english, katakana] : word_pairs) {
    std::vector<std::string> morae;
    try {
      morae = text::romanize_katakana(katakana, roman);
    } catch (const text::UnsupportedCharacter&) {
      ++local.discarded;
      continue;
    }
    std::size_t romaji_len = 0;
    for (const auto& m : morae) romaji_len += m.size();
    int cut = threshold ? *threshold
                        : 2 * static_cast<int>(std::max(english.size(), romaji_len));
    try {
      Alignment alignment = align_word_pair(english, morae, table);
      if (alignment.score <= cut) {
        ++local.discarded;
        continue;
      }
      for (const Correspondence& c : alignment.correspondences)
        model.add(c.english, c.japanese);
      ++local.aligned;
    } catch (const DegenerateAlignment&) {
      ++local.discarded;
    }
  }
  if (counts) *counts = local;
  return model;
}

std::vector<std::pair<std::string, std::string>> load_word_pairs(
    const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open word pair file: " + file.string());
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw std::runtime_error("malformed word pair at line " +
                               std::to_string(lineno) + " of " + file.string());
    pairs.emplace_back(cols[0], cols[1]);
  }
  return pairs;
}

void TargetVocabulary::add(const std::string& key, long count,
                           std::string surface) {
  if (count <= 0) return;
  VocabEntry& e = entries_[key];
  e.count += count;
  if (e.surface.empty()) e.surface = surface.empty() ? key : std::move(surface);
  total_ += count;
}

const VocabEntry* TargetVocabulary::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

// All segmentations of `units` into symbols the model knows, keeping only
// those with the minimal symbol count. Symbols are concatenations of
// consecutive units (morae for Japanese, letters for English).
std::vector<std::vector<std::string>> minimal_segmentations(
    const std::vector<std::string>& units, std::size_t max_symbol_len,
    const std::function<bool(const std::string&)>& known) {
  const std::size_t n = units.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> best(n + 1, kInf);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::string symbol;
    for (std::size_t j = i; j < n; ++j) {
      symbol += units[j];
      if (symbol.size() > max_symbol_len) break;
      if (known(symbol) && best[j + 1] != kInf)
        best[i] = std::min(best[i], best[j + 1] + 1);
    }
  }
  std::vector<std::vector<std::string>> out;
  if (best[0] == kInf) return out;

  std::vector<std::string> current;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      out.push_back(current);
      return;
    }
    std::string symbol;
    for (std::size_t j = i; j < n; ++j) {
      symbol += units[j];
      if (symbol.size() > max_symbol_len) break;
      if (known(symbol) && best[j + 1] != kInf &&
          best[j + 1] + 1 + current.size() == best[0]) {
        current.push_back(symbol);
        walk(j + 1);
        current.pop_back();
      }
    }
  };
  walk(0);
  return out;
}

}  // namespace

std::vector<TranslitCandidate> transliterate(std::string_view source_utf8,
                                             Direction direction,
                                             const TranslitModel& model,
                                             const TargetVocabulary& vocabulary,
                                             std::size_t k,
                                             const text::RomanizationTable& roman) {
  if (source_utf8.empty()) throw NoSegmentation("empty source word");

  std::vector<std::string> units;
  if (direction == Direction::japanese_to_english) {
    units = text::romanize_katakana(source_utf8, roman);
  } else {
    for (char c : to_lower(source_utf8)) units.push_back(std::string(1, c));
  }

  const bool ja_source = direction == Direction::japanese_to_english;
  auto known = [&](const std::string& s) {
    return ja_source ? model.has_japanese_symbol(s) : model.has_english_symbol(s);
  };
  std::size_t max_len = ja_source ? model.max_japanese_symbol_length()
                                  : model.max_english_symbol_length();

  auto segmentations = minimal_segmentations(units, max_len, known);
  if (segmentations.empty())
    throw NoSegmentation("source not covered by known symbols: " +
                         std::string(source_utf8));

  // Compose target candidates; a word reachable through several derivations
  // keeps its best score.
  std::unordered_map<std::string, double> pool;
  for (const auto& seg : segmentations) {
    std::vector<const std::map<std::string, long>*> options;
    options.reserve(seg.size());
    for (const std::string& s : seg)
      options.push_back(ja_source ? model.english_candidates(s)
                                  : model.japanese_candidates(s));

    std::string word;
    std::function<void(std::size_t, double)> compose = [&](std::size_t pos,
                                                           double prob) {
      if (pos == seg.size()) {
        auto it = pool.find(word);
        if (it == pool.end() || prob > it->second) pool[word] = prob;
        return;
      }
      std::size_t len_before = word.size();
      for (const auto& [target, count] : *options[pos]) {
        long total = ja_source ? model.total_english(target)
                               : model.total_japanese(target);
        double p = static_cast<double>(count) / static_cast<double>(total);
        word += target;
        compose(pos + 1, prob * p);
        word.resize(len_before);
      }
    };
    compose(0, 1.0);
  }

  std::vector<TranslitCandidate> candidates;
  for (const auto& [word, prob] : pool) {
    const VocabEntry* entry = vocabulary.find(word);
    if (!entry) continue;  // unindexed words have zero probability
    double p_target = static_cast<double>(entry->count) /
                      static_cast<double>(vocabulary.total());
    candidates.push_back({word, entry->surface, p_target * prob});
  }
  if (candidates.empty())
    throw NoCandidate("no indexed transliteration for: " +
                      std::string(source_utf8));

  std::sort(candidates.begin(), candidates.end(),
            [](const TranslitCandidate& a, const TranslitCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  if (candidates.size() > k) candidates.resize(k);
  return candidates;
}

}  // namespace clir::translit
