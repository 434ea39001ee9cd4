// Copyright 2026 The Arasent Authors
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

#ifndef ARASENT_UTF8_HPP_
#define ARASENT_UTF8_HPP_

#include <string>
#include <string_view>

namespace arasent {
namespace utf8 {

// Invalid byte sequences decode to U+FFFD, one replacement per bad byte.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view codepoints);

void append(std::string& out, char32_t cp);

}  // namespace utf8

// Character classes used across the pipeline. All offsets in this
// library count Unicode codepoints, never bytes.
bool is_arabic_block(char32_t cp);  // any codepoint in the Arabic ranges
bool is_arabic_letter(char32_t cp); // Arabic block minus digits/punctuation
bool is_ascii_letter(char32_t cp);
bool is_digit_char(char32_t cp);    // ASCII plus Arabic-Indic digit blocks
bool is_emoji_char(char32_t cp);
bool is_space_char(char32_t cp);
bool is_punct_char(char32_t cp);

}  // namespace arasent

#endif  // ARASENT_UTF8_HPP_
