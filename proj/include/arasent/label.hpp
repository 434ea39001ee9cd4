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

#ifndef ARASENT_LABEL_HPP_
#define ARASENT_LABEL_HPP_

#include <array>
#include <optional>
#include <string_view>

namespace arasent {

enum class Label { positive = 0, negative = 1, neutral = 2 };

inline constexpr std::array<Label, 3> kAllLabels = {
    Label::positive, Label::negative, Label::neutral};

constexpr std::string_view to_string(Label label) {
  switch (label) {
    case Label::positive: return "positive";
    case Label::negative: return "negative";
    case Label::neutral: return "neutral";
  }
  return "neutral";
}

inline std::optional<Label> parse_label(std::string_view s) {
  if (s == "positive") return Label::positive;
  if (s == "negative") return Label::negative;
  if (s == "neutral") return Label::neutral;
  return std::nullopt;
}

}  // namespace arasent

#endif  // ARASENT_LABEL_HPP_
