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

#include "clir/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "clir/unicode.hpp"

namespace clir::text {

namespace {

constexpr char32_t kLongVowelMark = U'ー';  // ー
constexpr char32_t kSmallTsu = U'ッ';       // ッ
constexpr char32_t kSmallYa = U'ャ';
constexpr char32_t kSmallYu = U'ュ';
constexpr char32_t kSmallYo = U'ョ';
constexpr char32_t kSmallA = U'ァ';
constexpr char32_t kSmallI = U'ィ';
constexpr char32_t kSmallU = U'ゥ';
constexpr char32_t kSmallE = U'ェ';
constexpr char32_t kSmallO = U'ォ';

bool is_digraph_tail(char32_t ch) {
  switch (ch) {
    case kSmallYa:
    case kSmallYu:
    case kSmallYo:
    case kSmallA:
    case kSmallI:
    case kSmallU:
    case kSmallE:
    case kSmallO:
      return true;
    default:
      return false;
  }
}

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

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

}  // namespace

const char* script_name(ScriptClass c) {
  switch (c) {
    case ScriptClass::Kanji: return "kanji";
    case ScriptClass::Katakana: return "katakana";
    case ScriptClass::Hiragana: return "hiragana";
    case ScriptClass::Latin: return "latin";
    case ScriptClass::Digit: return "digit";
    case ScriptClass::Other: return "other";
  }
  return "other";
}

ScriptClass classify_char(char32_t ch) noexcept {
  if (ch >= U'぀' && ch <= U'ゟ') return ScriptClass::Hiragana;
  if (ch >= U'゠' && ch <= U'ヿ') return ScriptClass::Katakana;
  if (ch >= U'一' && ch <= U'鿿') return ScriptClass::Kanji;
  if ((ch >= U'a' && ch <= U'z') || (ch >= U'A' && ch <= U'Z'))
    return ScriptClass::Latin;
  if (ch >= U'0' && ch <= U'9') return ScriptClass::Digit;
  return ScriptClass::Other;
}

std::vector<ScriptRun> script_profile(std::u32string_view word) {
  std::vector<ScriptRun> runs;
  for (char32_t ch : word) {
    ScriptClass c = classify_char(ch);
    if (!runs.empty() && runs.back().script == c) {
      ++runs.back().length;
    } else {
      runs.push_back({c, 1});
    }
  }
  return runs;
}

RomanizationTable RomanizationTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open romanization table: " + file.string());
  RomanizationTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw std::runtime_error("malformed romanization row at line " +
                               std::to_string(lineno) + " of " + file.string());
    table.add(decode_utf8(cols[0]), cols[1]);
  }
  return table;
}

void RomanizationTable::add(std::u32string katakana, std::string mora) {
  entries_[std::move(katakana)] = std::move(mora);
}

const std::string* RomanizationTable::find(std::u32string_view katakana) const {
  auto it = entries_.find(std::u32string(katakana));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> romanize_katakana(std::u32string_view word,
                                           const RomanizationTable& table) {
  std::vector<std::string> morae;
  bool geminate = false;
  std::size_t i = 0;
  while (i < word.size()) {
    char32_t ch = word[i];
    if (ch == kSmallTsu) {
      geminate = true;
      ++i;
      continue;
    }
    if (ch == kLongVowelMark) {
      if (morae.empty() || !is_vowel_letter(morae.back().back()))
        throw UnsupportedCharacter("long-vowel mark with no preceding vowel");
      morae.back().push_back(morae.back().back());
      ++i;
      continue;
    }
    std::string mora;
    if (i + 1 < word.size() && is_digraph_tail(word[i + 1])) {
      if (const std::string* m = table.find(word.substr(i, 2))) {
        mora = *m;
        i += 2;
      }
    }
    if (mora.empty()) {
      const std::string* m = table.find(word.substr(i, 1));
      if (!m)
        throw UnsupportedCharacter("no romanization for " +
                                   encode_utf8(word.substr(i, 1)));
      mora = *m;
      ++i;
    }
    if (geminate) {
      // Hepburn gemination: double the initial consonant, "tch" before ch.
      if (mora.size() >= 2 && mora[0] == 'c' && mora[1] == 'h')
        mora.insert(mora.begin(), 't');
      else if (!is_vowel_letter(mora[0]))
        mora.insert(mora.begin(), mora[0]);
      else
        mora.insert(mora.begin(), 't');
      geminate = false;
    }
    morae.push_back(std::move(mora));
  }
  if (geminate) morae.push_back("t");  // word-final small tsu
  return morae;
}

std::vector<std::string> romanize_katakana(std::string_view utf8_word,
                                           const RomanizationTable& table) {
  return romanize_katakana(decode_utf8(utf8_word), table);
}

StopwordSet load_stopwords(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open stopword file: " + file.string());
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (!line.empty()) words.insert(line);
  }
  return words;
}

RootTable load_root_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open root table: " + file.string());
  RootTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw std::runtime_error("malformed root table row at line " +
                               std::to_string(lineno) + " of " + file.string());
    table[cols[0]] = cols[1];
  }
  return table;
}

std::string root_form(const std::string& token, const RootTable& roots) {
  auto it = roots.find(token);
  if (it != roots.end()) return it->second;

  auto ends_with = [&token](std::string_view suffix) {
    return token.size() >= suffix.size() &&
           token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  auto drop = [&token](std::size_t n) { return token.substr(0, token.size() - n); };
  auto undouble = [](std::string stem) {
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel_letter(stem.back()))
      stem.pop_back();
    return stem;
  };

  // Suffix rules fire only when the remaining stem keeps a usable length;
  // short forms ("mrds", "mining") stay as they are.
  if (ends_with("ies") && token.size() >= 6) return drop(3) + "y";
  if ((ends_with("ses") || ends_with("xes") || ends_with("zes") ||
       ends_with("ches") || ends_with("shes")) &&
      token.size() >= 5)
    return drop(2);
  if (ends_with("s") && !ends_with("ss") && !ends_with("us") &&
      !ends_with("is") && token.size() >= 5)
    return drop(1);
  if (ends_with("ing") && token.size() >= 7) return undouble(drop(3));
  if (ends_with("ed") && token.size() >= 6) return undouble(drop(2));
  return token;
}

std::vector<EnglishToken> tokenize_english_full(std::string_view utf8_text,
                                                const StopwordSet& stopwords,
                                                const RootTable& roots) {
  std::u32string text = decode_utf8(utf8_text);
  std::vector<EnglishToken> tokens;
  std::u32string current;
  auto flush = [&]() {
    if (current.empty()) return;
    Token tok;
    tok.surface = encode_utf8(current);
    tok.script_profile = script_profile(current);
    bool has_letter = std::any_of(current.begin(), current.end(), [](char32_t c) {
      return classify_char(c) == ScriptClass::Latin;
    });
    tok.root = has_letter ? root_form(tok.surface, roots) : tok.surface;
    bool stop = stopwords.count(tok.surface) > 0;
    tokens.push_back({std::move(tok), stop});
    current.clear();
  };
  for (char32_t ch : text) {
    ScriptClass c = classify_char(ch);
    if (c == ScriptClass::Latin || c == ScriptClass::Digit) {
      if (ch >= U'A' && ch <= U'Z') ch = ch - U'A' + U'a';
      current.push_back(ch);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<Token> tokenize_english(std::string_view utf8_text,
                                    const StopwordSet& stopwords,
                                    const RootTable& roots) {
  std::vector<Token> out;
  for (auto& et : tokenize_english_full(utf8_text, stopwords, roots))
    if (!et.stopword) out.push_back(std::move(et.token));
  return out;
}

JaVocabulary load_vocabulary(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open vocabulary file: " + file.string());
  JaVocabulary vocab;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (!line.empty()) vocab.insert(line);
  }
  return vocab;
}

std::vector<Token> tokenize_japanese(std::string_view utf8_text,
                                     const JaVocabulary& vocabulary) {
  std::u32string text = decode_utf8(utf8_text);
  std::size_t max_len = 1;
  for (const auto& w : vocabulary)
    max_len = std::max(max_len, decode_utf8(w).size());

  auto vocab_match = [&](std::size_t pos) -> std::size_t {
    // Longest vocabulary word starting at pos; 0 if none.
    std::size_t limit = std::min(max_len, text.size() - pos);
    for (std::size_t len = limit; len >= 1; --len) {
      if (vocabulary.count(encode_utf8(text.substr(pos, len)))) return len;
    }
    return 0;
  };

  std::vector<Token> tokens;
  auto emit = [&](std::u32string_view surface) {
    Token tok;
    tok.surface = encode_utf8(surface);
    tok.root = tok.surface;
    tok.script_profile = script_profile(surface);
    tokens.push_back(std::move(tok));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (std::size_t len = vocab_match(i); len > 0) {
      emit(std::u32string_view(text).substr(i, len));
      i += len;
      continue;
    }
    // Fallback run: same script class, ends where a vocabulary match begins.
    ScriptClass c = classify_char(text[i]);
    std::size_t j = i + 1;
    while (j < text.size() && classify_char(text[j]) == c && vocab_match(j) == 0)
      ++j;
    if (c != ScriptClass::Hiragana && c != ScriptClass::Other)
      emit(std::u32string_view(text).substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace clir::text
