// Copyright 2026 The chas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHAS_SRC_INTERNAL_HPP_
#define CHAS_SRC_INTERNAL_HPP_

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "chas/error.hpp"

namespace chas::internal {

// Shortest round-trip decimal form; keeps CSV and JSONL output
// deterministic and value-exact.
inline std::string dtos(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline uint64_t fnv1a(std::string_view data, uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string read_file(const std::string& path);           // throws ChasError(kIo)
void write_file(const std::string& path, std::string_view content);

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace chas::internal

#endif  // CHAS_SRC_INTERNAL_HPP_
