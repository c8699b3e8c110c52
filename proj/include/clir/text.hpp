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

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace clir::text {

// Script classification, tokenization for both languages, stopword handling
// and katakana romanization. Everything here is a pure function over
// immutable tables; tables are loaded once and shared.

enum class ScriptClass { Kanji, Katakana, Hiragana, Latin, Digit, Other };

const char* script_name(ScriptClass c);

// Total over all Unicode scalar values; every scalar maps to exactly one
// class. Hiragana U+3040..U+309F, Katakana U+30A0..U+30FF, CJK Unified
// Ideographs U+4E00..U+9FFF, ASCII letters, ASCII digits; everything else
// is Other.
ScriptClass classify_char(char32_t ch) noexcept;

struct ScriptRun {
  ScriptClass script;
  std::size_t length;  // in scalar values
  bool operator==(const ScriptRun&) const = default;
};

std::vector<ScriptRun> script_profile(std::u32string_view word);

struct Token {
  std::string surface;
  std::string root;
  std::vector<ScriptRun> script_profile;
};

struct UnsupportedCharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Katakana character (or digraph with small ya/yu/yo etc.) to romaji mora.
// The long-vowel mark and gemination are handled structurally by
// romanize_katakana, not by table entries.
class RomanizationTable {
 public:
  static RomanizationTable load(const std::filesystem::path& file);

  void add(std::u32string katakana, std::string mora);
  const std::string* find(std::u32string_view katakana) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::u32string, std::string> entries_;
};

// One mora per katakana character, with digraphs, gemination (small tsu)
// and the long-vowel mark folded into single morae: "dee-ta", "ne-tto-waa-ku".
// Throws UnsupportedCharacter for scalars the table cannot resolve.
std::vector<std::string> romanize_katakana(std::u32string_view word,
                                           const RomanizationTable& table);
std::vector<std::string> romanize_katakana(std::string_view utf8_word,
                                           const RomanizationTable& table);

using StopwordSet = std::unordered_set<std::string>;
using RootTable = std::unordered_map<std::string, std::string>;

StopwordSet load_stopwords(const std::filesystem::path& file);
RootTable load_root_table(const std::filesystem::path& file);

// Root-form normalization of a lowercased token: exact table lookup first,
// then a small deterministic suffix-stripping rule set, then identity.
std::string root_form(const std::string& token, const RootTable& roots);

struct EnglishToken {
  Token token;
  bool stopword;
};

// Full token stream including stopwords, so callers that need adjacency
// (compound grouping) can see where stopwords were.
std::vector<EnglishToken> tokenize_english_full(std::string_view utf8_text,
                                                const StopwordSet& stopwords,
                                                const RootTable& roots);

// Lowercased alphanumeric tokens split on non-alphanumerics, stopwords
// removed, roots normalized.
std::vector<Token> tokenize_english(std::string_view utf8_text,
                                    const StopwordSet& stopwords,
                                    const RootTable& roots);

using JaVocabulary = std::unordered_set<std::string>;

JaVocabulary load_vocabulary(const std::filesystem::path& file);

// Greedy longest-match segmentation against the vocabulary; where nothing
// matches, maximal runs of identical ScriptClass become fallback tokens.
// Hiragana-only fallback runs are function words and are dropped, as are
// Other-class runs (whitespace, punctuation).
std::vector<Token> tokenize_japanese(std::string_view utf8_text,
                                     const JaVocabulary& vocabulary);

}  // namespace clir::text
