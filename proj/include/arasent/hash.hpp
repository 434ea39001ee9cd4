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

#ifndef ARASENT_HASH_HPP_
#define ARASENT_HASH_HPP_

#include <cstdint>
#include <string_view>

namespace arasent {

// FNV-1a, 64-bit. Stable across platforms; used for dedup fingerprints
// and manifest content hashes.
inline uint64_t fnv1a64(std::string_view data,
                        uint64_t seed = 0xcbf29ce484222325ULL) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace arasent

#endif  // ARASENT_HASH_HPP_
