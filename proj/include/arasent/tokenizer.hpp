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

#ifndef ARASENT_TOKENIZER_HPP_
#define ARASENT_TOKENIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arasent {

enum class TokenKind { word, punct, emoji, number };

struct Token {
  std::string text;   // UTF-8
  size_t start = 0;   // codepoint offset into the normalized text
  size_t end = 0;     // half-open
  TokenKind kind = TokenKind::word;
};

struct SentenceRange {
  size_t begin = 0;  // token indices, half-open
  size_t end = 0;
};

// Tokens plus the sentence partition over them.
struct TokenizedText {
  std::vector<Token> tokens;
  std::vector<SentenceRange> sentences;

  // Sentence index containing token i. Tokens always belong to exactly
  // one sentence.
  size_t sentence_of(size_t token_index) const;
};

// Splits normalized text on whitespace; punctuation characters become
// standalone punct tokens; emoji runs become emoji tokens. Sentence
// boundaries are recorded after . ! ? ؟ and newlines (consecutive
// terminators close a single sentence).
TokenizedText tokenize(std::string_view normalized_text);

bool is_question_mark_token(const Token& token);
bool is_sentence_terminator(const Token& token);

}  // namespace arasent

#endif  // ARASENT_TOKENIZER_HPP_
