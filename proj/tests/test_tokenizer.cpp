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

#include <doctest.h>

#include "arasent/utf8.hpp"

using namespace arasent;

namespace {

std::vector<std::string> texts(const TokenizedText& t) {
  std::vector<std::string> out;
  for (const auto& token : t.tokens) out.push_back(token.text);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("tokenizer");

TEST_CASE("whitespace split") {
  const auto t = tokenize("صباح الخير");
  CHECK(texts(t) == std::vector<std::string>{"صباح", "الخير"});
  CHECK(t.sentences.size() == 1);
  CHECK(t.sentences[0].begin == 0);
  CHECK(t.sentences[0].end == 2);
}

TEST_CASE("arabic question mark becomes a standalone punct token") {
  const auto t = tokenize("ايه القرف ده؟");
  CHECK(texts(t) == std::vector<std::string>{"ايه", "القرف", "ده", "؟"});
  CHECK(t.tokens[3].kind == TokenKind::punct);
  CHECK(is_question_mark_token(t.tokens[3]));
}

TEST_CASE("arabic comma separates tokens") {
  const auto t = tokenize("رائع، لكن سيء");
  CHECK(texts(t) == std::vector<std::string>{"رائع", "،", "لكن", "سيء"});
}

TEST_CASE("offsets index codepoints on the normalized text") {
  const auto t = tokenize("صباح الخير");
  REQUIRE(t.tokens.size() == 2);
  CHECK(t.tokens[0].start == 0);
  CHECK(t.tokens[0].end == 4);
  CHECK(t.tokens[1].start == 5);
  CHECK(t.tokens[1].end == 10);
  // Slicing the codepoints with the offsets recovers the token.
  const auto cps = utf8::decode("صباح الخير");
  CHECK(utf8::encode(cps.substr(5, 5)) == "الخير");
}

TEST_CASE("token kinds") {
  const auto t = tokenize("الخدمة ادسل 123 ٤٥٦ 😀 !");
  REQUIRE(t.tokens.size() == 6);
  CHECK(t.tokens[0].kind == TokenKind::word);
  CHECK(t.tokens[1].kind == TokenKind::word);
  CHECK(t.tokens[2].kind == TokenKind::number);
  CHECK(t.tokens[3].kind == TokenKind::number);
  CHECK(t.tokens[4].kind == TokenKind::emoji);
  CHECK(t.tokens[5].kind == TokenKind::punct);
}

TEST_CASE("sentence boundaries after terminators and newlines") {
  const auto t = tokenize("جميل. سيء؟ عادي\nاخر");
  REQUIRE(t.tokens.size() == 6);
  REQUIRE(t.sentences.size() == 4);
  CHECK(t.sentences[0].begin == 0);
  CHECK(t.sentences[0].end == 2);  // جميل .
  CHECK(t.sentences[1].end == 4);  // سيء ؟
  CHECK(t.sentences[2].end == 5);  // عادي (newline break)
  CHECK(t.sentences[3].end == 6);  // اخر
  CHECK(t.sentence_of(0) == 0);
  CHECK(t.sentence_of(3) == 1);
  CHECK(t.sentence_of(5) == 3);
}

TEST_CASE("consecutive terminators close one sentence") {
  const auto t = tokenize("جميل؟!!");
  CHECK(t.tokens.size() == 4);
  CHECK(t.sentences.size() == 1);
}

TEST_CASE("emoji runs form one token, punctation splits per character") {
  const auto t = tokenize("حلو😀😁 ((جدا))");
  REQUIRE(t.tokens.size() == 7);
  CHECK(t.tokens[0].text == "حلو");
  CHECK(t.tokens[1].kind == TokenKind::emoji);
  CHECK(t.tokens[1].text == "😀😁");
  CHECK(t.tokens[2].text == "(");
  CHECK(t.tokens[4].text == "جدا");
}

TEST_CASE("tokens partition into sentences completely") {
  const auto t = tokenize("هل الخدمة جيدة؟ لا. ابدا");
  size_t covered = 0;
  for (const auto& s : t.sentences) {
    CHECK(s.begin == covered);
    covered = s.end;
  }
  CHECK(covered == t.tokens.size());
}

TEST_CASE("empty and whitespace-only input") {
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("   \n ").tokens.empty());
  CHECK(tokenize("").sentences.empty());
}

TEST_SUITE_END();
