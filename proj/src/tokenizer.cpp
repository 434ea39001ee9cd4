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

#include "arasent/tokenizer.hpp"

#include "arasent/utf8.hpp"

namespace arasent {

namespace {

TokenKind classify(const std::u32string& cps, size_t begin, size_t end) {
  bool any_letter = false;
  bool all_digits = true;
  bool any_emoji = false;
  for (size_t i = begin; i < end; ++i) {
    const char32_t cp = cps[i];
    if (is_arabic_letter(cp) || is_ascii_letter(cp)) any_letter = true;
    if (!is_digit_char(cp)) all_digits = false;
    if (is_emoji_char(cp)) any_emoji = true;
  }
  if (any_letter) return TokenKind::word;
  if (all_digits && end > begin) return TokenKind::number;
  if (any_emoji) return TokenKind::emoji;
  return TokenKind::word;
}

}  // namespace

size_t TokenizedText::sentence_of(size_t token_index) const {
  for (size_t s = 0; s < sentences.size(); ++s) {
    if (token_index >= sentences[s].begin && token_index < sentences[s].end) {
      return s;
    }
  }
  return sentences.empty() ? 0 : sentences.size() - 1;
}

TokenizedText tokenize(std::string_view normalized_text) {
  const std::u32string cps = utf8::decode(normalized_text);
  TokenizedText out;

  // sentence_break_after[i] marks a newline between token i and i+1.
  std::vector<size_t> newline_after;

  size_t i = 0;
  const size_t n = cps.size();
  while (i < n) {
    if (is_space_char(cps[i])) {
      if (cps[i] == '\n' && !out.tokens.empty()) {
        newline_after.push_back(out.tokens.size() - 1);
      }
      ++i;
      continue;
    }
    const char32_t cp = cps[i];
    if (is_punct_char(cp)) {
      out.tokens.push_back(
          {utf8::encode(std::u32string(1, cp)), i, i + 1, TokenKind::punct});
      ++i;
      continue;
    }
    if (is_emoji_char(cp)) {
      size_t j = i + 1;
      while (j < n && is_emoji_char(cps[j])) ++j;
      out.tokens.push_back(
          {utf8::encode(cps.substr(i, j - i)), i, j, TokenKind::emoji});
      i = j;
      continue;
    }
    size_t j = i;
    while (j < n && !is_space_char(cps[j]) && !is_punct_char(cps[j]) &&
           !is_emoji_char(cps[j])) {
      ++j;
    }
    out.tokens.push_back(
        {utf8::encode(cps.substr(i, j - i)), i, j, classify(cps, i, j)});
    i = j;
  }

  // Sentence partition: break after the last of a run of terminators,
  // and after tokens followed by a newline.
  size_t begin = 0;
  size_t nl = 0;
  for (size_t t = 0; t < out.tokens.size(); ++t) {
    bool brk = false;
    if (is_sentence_terminator(out.tokens[t]) &&
        (t + 1 >= out.tokens.size() ||
         !is_sentence_terminator(out.tokens[t + 1]))) {
      brk = true;
    }
    while (nl < newline_after.size() && newline_after[nl] < t) ++nl;
    if (nl < newline_after.size() && newline_after[nl] == t) brk = true;
    if (brk && t + 1 > begin) {
      out.sentences.push_back({begin, t + 1});
      begin = t + 1;
    }
  }
  if (begin < out.tokens.size()) {
    out.sentences.push_back({begin, out.tokens.size()});
  }
  return out;
}

bool is_question_mark_token(const Token& token) {
  return token.kind == TokenKind::punct &&
         (token.text == "?" || token.text == "\xD8\x9F");  // U+061F
}

bool is_sentence_terminator(const Token& token) {
  return token.kind == TokenKind::punct &&
         (token.text == "." || token.text == "!" || token.text == "?" ||
          token.text == "\xD8\x9F");
}

}  // namespace arasent
