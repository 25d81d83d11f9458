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

#include <fstream>
#include <sstream>

#include "chas/error.hpp"
#include "chas/rng.hpp"
#include "chas/types.hpp"
#include "internal.hpp"

namespace chas {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kOk: return "OK";
    case Errc::kIo: return "IO";
    case Errc::kParse: return "PARSE";
    case Errc::kConfig: return "CONFIG";
    case Errc::kEnrollInsufficient: return "ENROLL_INSUFFICIENT";
    case Errc::kConfigMismatch: return "CONFIG_MISMATCH";
    case Errc::kEvalNeedsImpostors: return "EVAL_NEEDS_IMPOSTORS";
    case Errc::kInvalidSpec: return "INVALID_SPEC";
    case Errc::kInvalidArgument: return "INVALID_ARGUMENT";
    case Errc::kNumeric: return "NUMERIC";
    case Errc::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* to_string(TouchPhase phase) {
  switch (phase) {
    case TouchPhase::kDown: return "down";
    case TouchPhase::kMove: return "move";
    case TouchPhase::kUp: return "up";
  }
  return "?";
}

const char* to_string(Channel channel) {
  switch (channel) {
    case Channel::kTouch: return "touch";
    case Channel::kVibration: return "vibration";
    case Channel::kRotation: return "rotation";
  }
  return "?";
}

const char* to_string(GestureKind kind) {
  return kind == GestureKind::kTap ? "tap" : "slide";
}

TouchPhase touch_phase_from_string(const std::string& s) {
  if (s == "down") return TouchPhase::kDown;
  if (s == "move") return TouchPhase::kMove;
  if (s == "up") return TouchPhase::kUp;
  throw ChasError(Errc::kParse, "unknown touch phase: " + s);
}

GestureKind gesture_kind_from_string(const std::string& s) {
  if (s == "tap") return GestureKind::kTap;
  if (s == "slide") return GestureKind::kSlide;
  throw ChasError(Errc::kParse, "unknown gesture kind: " + s);
}

Channel channel_from_string(const std::string& s) {
  if (s == "touch") return Channel::kTouch;
  if (s == "vibration") return Channel::kVibration;
  if (s == "rotation") return Channel::kRotation;
  throw ChasError(Errc::kParse, "unknown channel: " + s);
}

uint64_t mix_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = internal::fnv1a(tag);
  Rng rng(seed ^ h);
  return rng.next_u64();
}

namespace internal {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ChasError(Errc::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ChasError(Errc::kIo, "read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ChasError(Errc::kIo, "cannot create " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ChasError(Errc::kIo, "write failed: " + path);
}

}  // namespace internal
}  // namespace chas
