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

#include <stdexcept>
#include <string>
#include <string_view>

namespace clir {

struct Utf8Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decodes a UTF-8 byte string into Unicode scalar values. Throws Utf8Error
// on malformed sequences (truncated, overlong, surrogate, out of range).
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view scalars);
std::string encode_utf8(char32_t scalar);

}  // namespace clir
