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

#include "clir/corpus.hpp"

#include <fstream>

#include <json.hpp>

namespace clir::corpus {

const char* language_name(Language lang) {
  return lang == Language::english ? "english" : "japanese";
}

Language parse_language(const std::string& name) {
  if (name == "english") return Language::english;
  if (name == "japanese") return Language::japanese;
  throw CorpusError("unknown language: " + name);
}

std::vector<Document> load_jsonl(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw CorpusError("cannot open corpus file: " + file.string());
  std::vector<Document> docs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorpusError("line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      Document d;
      d.id = j.at("id").get<std::string>();
      d.title = j.value("title", std::string());
      d.abstract = j.value("abstract", std::string());
      if (j.contains("keywords"))
        d.keywords = j.at("keywords").get<std::vector<std::string>>();
      d.language = parse_language(j.value("language", std::string("english")));
      docs.push_back(std::move(d));
    } catch (const nlohmann::json::exception& e) {
      throw CorpusError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return docs;
}

void save_jsonl(const std::vector<Document>& docs,
                const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw CorpusError("cannot write corpus file: " + file.string());
  for (const Document& d : docs) {
    nlohmann::json j;
    j["id"] = d.id;
    j["title"] = d.title;
    j["abstract"] = d.abstract;
    j["keywords"] = d.keywords;
    j["language"] = language_name(d.language);
    out << j.dump() << '\n';
  }
}

}  // namespace clir::corpus
