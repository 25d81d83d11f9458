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

#ifndef CHAS_TYPES_HPP_
#define CHAS_TYPES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chas {

enum class TouchPhase { kDown, kMove, kUp };

enum class Channel { kTouch = 0, kVibration = 1, kRotation = 2 };

enum class GestureKind { kTap = 0, kSlide = 1 };

const char* to_string(TouchPhase phase);
const char* to_string(Channel channel);
const char* to_string(GestureKind kind);
TouchPhase touch_phase_from_string(const std::string& s);
GestureKind gesture_kind_from_string(const std::string& s);
Channel channel_from_string(const std::string& s);

// One touch-screen sample. Timestamps are integer milliseconds since
// log start; pressure and size are unitless in [0, 1].
struct TouchSample {
  int64_t t = 0;
  double x = 0.0;
  double y = 0.0;
  double pressure = 0.0;
  double size = 0.0;
  TouchPhase phase = TouchPhase::kDown;
};

// One accelerometer (vibration) or gyroscope (rotation) sample.
struct InertialSample {
  int64_t t = 0;
  Channel channel = Channel::kVibration;
  std::array<double, 3> v = {0.0, 0.0, 0.0};
};

// Session boundary marker: gestures starting at or after t belong to
// the given session id until the next marker.
struct SessionMark {
  int64_t t = 0;
  int session = 1;
};

// A parsed device log. Sample lists are sorted by t (stable).
struct RawEventLog {
  int screen_width = 0;
  int screen_height = 0;
  std::string user;  // optional subject tag from the meta record
  std::vector<TouchSample> touch;
  std::vector<InertialSample> inertial;
  std::vector<SessionMark> sessions;
};

struct GestureLabel {
  std::string user;
  int session = 1;
};

// One segmented gesture: touch samples from down through the matching
// up, plus inertial samples within the padded time window.
struct GestureSegment {
  std::vector<TouchSample> touch;
  std::vector<InertialSample> vibration;
  std::vector<InertialSample> rotation;
  std::optional<GestureLabel> label;

  int64_t t_down() const { return touch.front().t; }
  int64_t t_up() const { return touch.back().t; }
};

// Per-log segmentation diagnostics.
struct SegmentDiagnostics {
  int64_t orphan_ups = 0;          // up with no open gesture
  int64_t stray_moves = 0;         // move outside any gesture
  int64_t multitouch_dropped = 0;  // spans with overlapping pointers
  int64_t unmatched_downs = 0;     // log ended mid-gesture
  int64_t rejected_gestures = 0;   // unusable touch channel
};

// Fixed-rate observation sequence for one sensor channel. Touch frames
// are [x_norm, y_norm, pressure, size]; inertial frames are the three
// axis values.
struct ObservationSequence {
  Channel channel = Channel::kTouch;
  double rate_hz = 0.0;
  std::vector<std::vector<double>> frames;

  int dim() const { return frames.empty() ? 0 : static_cast<int>(frames.front().size()); }
  size_t length() const { return frames.size(); }
};

// A preprocessed gesture ready for modeling/scoring. The touch sequence
// is always present; inertial sequences only when the log carried them.
struct ProcessedGesture {
  GestureKind kind = GestureKind::kTap;
  std::vector<ObservationSequence> sequences;  // ordered by channel enum
  double duration_ms = 0.0;
  size_t raw_index = 0;  // provenance into the segment list
  std::optional<GestureLabel> label;

  const ObservationSequence* find(Channel channel) const {
    for (const auto& seq : sequences) {
      if (seq.channel == channel) return &seq;
    }
    return nullptr;
  }
  bool has(Channel channel) const { return find(channel) != nullptr; }
};

}  // namespace chas

#endif  // CHAS_TYPES_HPP_
