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

#include "clir/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "clir/unicode.hpp"

namespace clir::lexicon {

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

bool parse_count(const std::string& s, long& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stol(s);
  return true;
}

}  // namespace

void Lexicon::add(const std::string& source, const std::string& target,
                  long count) {
  if (count <= 0) return;
  by_source_[source][target] += count;
  by_target_[target][source] += count;
  totals_by_source_[source] += count;
  totals_by_target_[target] += count;
}

long Lexicon::pair_count(const std::string& source,
                         const std::string& target) const {
  auto it = by_source_.find(source);
  if (it == by_source_.end()) return 0;
  auto jt = it->second.find(target);
  return jt == it->second.end() ? 0 : jt->second;
}

long Lexicon::total_source(const std::string& source) const {
  auto it = totals_by_source_.find(source);
  return it == totals_by_source_.end() ? 0 : it->second;
}

long Lexicon::total_target(const std::string& target) const {
  auto it = totals_by_target_.find(target);
  return it == totals_by_target_.end() ? 0 : it->second;
}

bool Lexicon::contains_source(const std::string& source) const {
  return totals_by_source_.count(source) > 0;
}

bool Lexicon::contains_target(const std::string& target) const {
  return totals_by_target_.count(target) > 0;
}

const std::map<std::string, long>* Lexicon::targets_of(
    const std::string& source) const {
  auto it = by_source_.find(source);
  return it == by_source_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, long>> Lexicon::sources_of(
    const std::string& target) const {
  std::vector<std::pair<std::string, long>> out;
  auto it = by_target_.find(target);
  if (it == by_target_.end()) return out;
  out.assign(it->second.begin(), it->second.end());
  return out;
}

std::vector<LexiconEntry> Lexicon::entries() const {
  std::vector<LexiconEntry> out;
  for (const auto& [source, targets] : by_source_)
    for (const auto& [target, count] : targets)
      out.push_back({source, target, count});
  return out;
}

std::size_t Lexicon::pair_size() const {
  std::size_t n = 0;
  for (const auto& [source, targets] : by_source_) n += targets.size();
  return n;
}

void Lexicon::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write lexicon: " + file.string());
  for (const auto& [source, targets] : by_source_)
    for (const auto& [target, count] : targets)
      out << source << '\t' << target << '\t' << count << '\n';
}

Lexicon Lexicon::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open lexicon: " + file.string());
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    long count = 0;
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty() ||
        !parse_count(cols[2], count))
      throw ParseError("malformed lexicon row", lineno);
    lex.add(cols[0], cols[1], count);
  }
  return lex;
}

double conditional_probability(const Lexicon& lexicon, const std::string& given,
                               const std::string& candidate,
                               Direction direction) {
  long total = direction == Direction::target_given_source
                   ? lexicon.total_source(given)
                   : lexicon.total_target(given);
  if (total == 0) throw UnknownWord("no counts for word: " + given);
  long count = direction == Direction::target_given_source
                   ? lexicon.pair_count(given, candidate)
                   : lexicon.pair_count(candidate, given);
  return static_cast<double>(count) / static_cast<double>(total);
}

bool ForbiddenChars::forbidden_initial(char32_t ch) const {
  return word_initial.find(ch) != std::u32string::npos;
}

bool ForbiddenChars::forbidden_final(char32_t ch) const {
  return word_final.find(ch) != std::u32string::npos;
}

ForbiddenChars ForbiddenChars::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open boundary character file: " +
                             file.string());
  ForbiddenChars fc;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[1].empty())
      throw ParseError("malformed boundary character row", lineno);
    std::u32string chars = decode_utf8(cols[1]);
    if (cols[0] == "initial")
      fc.word_initial += chars;
    else if (cols[0] == "final")
      fc.word_final += chars;
    else
      throw ParseError("unknown boundary character kind '" + cols[0] + "'",
                       lineno);
  }
  return fc;
}

std::pair<std::string, std::string> segment_entry_word(
    std::string_view japanese_utf8, const ForbiddenChars& forbidden) {
  std::u32string word = decode_utf8(japanese_utf8);
  if (word.size() < 2)
    throw Unsegmentable("word too short to split: " + std::string(japanese_utf8));

  // Leftmost character-type boundary, else the middle (left of center when
  // the length is odd).
  std::size_t split = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (text::classify_char(word[i]) != text::classify_char(word[i - 1])) {
      split = i;
      break;
    }
  }
  if (split == 0) split = word.size() / 2;
  if (split == 0) split = 1;

  while (split < word.size() &&
         (forbidden.forbidden_initial(word[split]) ||
          forbidden.forbidden_final(word[split - 1])))
    ++split;
  if (split >= word.size())
    throw Unsegmentable("no admissible split: " + std::string(japanese_utf8));

  return {encode_utf8(std::u32string_view(word).substr(0, split)),
          encode_utf8(std::u32string_view(word).substr(split))};
}

Lexicon build_base_word_dictionary(
    const std::vector<std::pair<std::string, std::string>>& entries,
    const ForbiddenChars& forbidden, const text::RootTable& roots,
    BuildStats* stats) {
  Lexicon lex;
  BuildStats local;
  text::StopwordSet no_stopwords;
  for (const auto& [japanese, english] : entries) {
    ++local.entries;
    auto tokens = text::tokenize_english(english, no_stopwords, roots);
    if (tokens.size() != 2 || japanese.empty()) {
      ++local.skipped_word_count;
      continue;
    }
    try {
      auto [left, right] = segment_entry_word(japanese, forbidden);
      lex.add(left, tokens[0].root);
      lex.add(right, tokens[1].root);
      ++local.built;
    } catch (const Unsegmentable&) {
      ++local.skipped_unsegmentable;
    }
  }
  if (stats) *stats = local;
  return lex;
}

std::vector<std::pair<std::string, std::string>> load_bilingual_entries(
    const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open bilingual entry file: " + file.string());
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw ParseError("malformed bilingual entry", lineno);
    entries.emplace_back(cols[0], cols[1]);
  }
  return entries;
}

namespace {

bool ascii_letter(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}
bool ascii_upper_or_digit(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9');
}
char32_t lower(char32_t c) { return c >= U'A' && c <= U'Z' ? c - U'A' + U'a' : c; }

// Normalizes an abbreviation candidate: drop hyphens, strip one trailing
// lowercase 's'. Returns empty when the result is not a plausible
// abbreviation (>= 2 uppercase letters/digits, at least one letter).
std::u32string normalize_abbreviation(std::u32string_view raw) {
  while (!raw.empty() && raw.front() == U' ') raw.remove_prefix(1);
  while (!raw.empty() && raw.back() == U' ') raw.remove_suffix(1);
  std::u32string s;
  for (char32_t c : raw)
    if (c != U'-') s.push_back(c);
  if (!s.empty() && s.back() == U's') s.pop_back();
  if (s.size() < 2) return {};
  bool has_letter = false;
  for (char32_t c : s) {
    if (!ascii_upper_or_digit(c)) return {};
    if (c >= U'A' && c <= U'Z') has_letter = true;
  }
  return has_letter ? s : std::u32string{};
}

// Splits on whitespace and hyphens, keeping only word characters, lowercased.
std::vector<std::u32string> form_words(std::u32string_view raw) {
  std::vector<std::u32string> words;
  std::u32string current;
  for (char32_t c : raw) {
    if (ascii_letter(c) || (c >= U'0' && c <= U'9')) {
      current.push_back(lower(c));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool initials_match(const std::u32string& abbr,
                    const std::vector<std::u32string>& words) {
  if (abbr.size() != words.size()) return false;
  for (std::size_t i = 0; i < abbr.size(); ++i)
    if (words[i].empty() || words[i][0] != lower(abbr[i])) return false;
  return true;
}

std::string join_words(const std::vector<std::u32string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += encode_utf8(words[i]);
  }
  return out;
}

void scan_text(const std::u32string& text,
               std::map<std::pair<std::string, std::string>, long>& tuples) {
  for (std::size_t open = 0; open < text.size(); ++open) {
    if (text[open] != U'(') continue;
    std::size_t close = text.find(U')', open + 1);
    if (close == std::u32string::npos) break;
    std::u32string inside = text.substr(open + 1, close - open - 1);
    std::u32string before = text.substr(0, open);

    // Preceding words up to the sentence-ish boundary; enough context for
    // the longest plausible complete form.
    std::vector<std::u32string> before_words = form_words(before);

    // Pattern 1: Complete Form (ABBR)
    if (auto abbr = normalize_abbreviation(inside); !abbr.empty()) {
      if (before_words.size() >= abbr.size()) {
        std::vector<std::u32string> tail(before_words.end() - abbr.size(),
                                         before_words.end());
        if (initials_match(abbr, tail))
          ++tuples[{encode_utf8(abbr), join_words(tail)}];
      }
      continue;
    }

    // Pattern 2: ABBR (complete form). The abbreviation is the word right
    // before the parenthesis, taken with its original casing.
    std::size_t end = before.size();
    while (end > 0 && before[end - 1] == U' ') --end;
    std::size_t start = end;
    while (start > 0 && (ascii_letter(before[start - 1]) ||
                         (before[start - 1] >= U'0' && before[start - 1] <= U'9') ||
                         before[start - 1] == U'-'))
      --start;
    if (start == end) continue;
    auto abbr = normalize_abbreviation(
        std::u32string_view(before).substr(start, end - start));
    if (abbr.empty()) continue;
    std::vector<std::u32string> inside_words = form_words(inside);
    if (initials_match(abbr, inside_words))
      ++tuples[{encode_utf8(abbr), join_words(inside_words)}];
  }
}

}  // namespace

std::vector<AbbreviationEntry> extract_abbreviations_from_text(
    const std::string& utf8_text) {
  std::map<std::pair<std::string, std::string>, long> tuples;
  scan_text(decode_utf8(utf8_text), tuples);
  std::vector<AbbreviationEntry> out;
  for (const auto& [key, freq] : tuples)
    out.push_back({key.first, key.second, freq});
  return out;
}

std::vector<AbbreviationEntry> extract_abbreviations(
    const std::vector<corpus::Document>& docs, long min_frequency) {
  std::map<std::pair<std::string, std::string>, long> tuples;
  for (const corpus::Document& doc : docs) {
    scan_text(decode_utf8(doc.title), tuples);
    scan_text(decode_utf8(doc.abstract), tuples);
    for (const std::string& kw : doc.keywords) scan_text(decode_utf8(kw), tuples);
  }
  std::vector<AbbreviationEntry> out;
  for (const auto& [key, freq] : tuples)
    if (freq >= min_frequency) out.push_back({key.first, key.second, freq});
  return out;
}

void AbbreviationTable::add(const AbbreviationEntry& entry) {
  forms_[entry.abbreviation][entry.complete_form] += entry.frequency;
}

std::vector<AbbreviationEntry> AbbreviationTable::lookup(
    const std::string& abbreviation) const {
  std::vector<AbbreviationEntry> out;
  auto it = forms_.find(abbreviation);
  if (it == forms_.end()) return out;
  for (const auto& [form, freq] : it->second)
    out.push_back({abbreviation, form, freq});
  std::sort(out.begin(), out.end(),
            [](const AbbreviationEntry& a, const AbbreviationEntry& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.complete_form < b.complete_form;
            });
  return out;
}

std::size_t AbbreviationTable::size() const {
  std::size_t n = 0;
  for (const auto& [abbr, forms] : forms_) n += forms.size();
  return n;
}

void AbbreviationTable::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write abbreviation table: " + file.string());
  for (const auto& [abbr, forms] : forms_)
    for (const auto& [form, freq] : forms)
      out << abbr << '\t' << form << '\t' << freq << '\n';
}

AbbreviationTable AbbreviationTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open abbreviation table: " + file.string());
  AbbreviationTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    long freq = 0;
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty() ||
        !parse_count(cols[2], freq))
      throw ParseError("malformed abbreviation row", lineno);
    table.add({cols[0], cols[1], freq});
  }
  return table;
}

Lexicon load_general_dictionary(const std::filesystem::path& file,
                                long* skipped) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open general dictionary: " + file.string());
  Lexicon lex;
  long skip = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() < 2 || cols.size() > 3 || cols[0].empty() || cols[1].empty())
      throw ParseError("malformed general dictionary row", lineno);
    long count = 1;
    if (cols.size() == 3 && !parse_count(cols[2], count))
      throw ParseError("malformed count", lineno);
    // Single words only: no internal whitespace on either side.
    if (cols[0].find(' ') != std::string::npos ||
        cols[1].find(' ') != std::string::npos) {
      ++skip;
      continue;
    }
    lex.add(cols[0], cols[1], count);
  }
  if (skipped) *skipped = skip;
  return lex;
}

}  // namespace clir::lexicon
