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
#include <stdexcept>
#include <string>
#include <vector>

namespace clir::corpus {

enum class Language { english, japanese };

const char* language_name(Language lang);
Language parse_language(const std::string& name);

// One bilingual technical record: title, abstract and author keywords are
// the indexed fields.
struct Document {
  std::string id;
  std::string title;
  std::string abstract;
  std::vector<std::string> keywords;
  Language language = Language::english;
};

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON Lines, one document per line with fields id/title/abstract/keywords/
// language. Errors carry the offending line number.
std::vector<Document> load_jsonl(const std::filesystem::path& file);
void save_jsonl(const std::vector<Document>& docs,
                const std::filesystem::path& file);

}  // namespace clir::corpus
