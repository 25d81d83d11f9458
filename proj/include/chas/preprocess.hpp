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

#ifndef CHAS_PREPROCESS_HPP_
#define CHAS_PREPROCESS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "chas/config.hpp"
#include "chas/types.hpp"

namespace chas {

using TimedVector = std::pair<double, std::vector<double>>;

// Averages samples that share a timestamp so times become strictly
// increasing. Input must be sorted by time.
std::vector<TimedVector> collapse_ties(const std::vector<TimedVector>& points);

// Piecewise-linear resampling onto a uniform grid of spacing
// 1000/rate_hz ms starting at the first timestamp. The final frame is
// pinned to the last input value; when the span is not a multiple of
// the spacing the last step is shorter. A single input point yields a
// single frame.
std::vector<std::vector<double>> resample(const std::vector<TimedVector>& points,
                                          double rate_hz);

// Tap iff duration <= tap_max_ms and cumulative path length over the
// touch samples <= tap_max_px. Both in raw log units (ms, pixels).
GestureKind classify_kind(const GestureSegment& segment, double tap_max_ms,
                          double tap_max_px);

// Canonicalizes slide coordinates: first frame moved to the origin, the
// chord (last - first) rotated onto the positive x-axis, and, when
// scale_normalize is set, coordinates divided by the chord length.
// Pressure and size pass through. A zero-length chord degrades to
// translation only.
ObservationSequence normalize_rotation(const ObservationSequence& touch_seq,
                                       bool scale_normalize = true);

// Translation-only variant used for taps.
ObservationSequence translate_only(const ObservationSequence& touch_seq);

// Full per-gesture preprocessing: screen-normalized touch frames,
// resampling of every available channel at cfg.rate_hz, rotation
// normalization of slide touch sequences. Returns nullopt when the
// touch channel is unusable.
std::optional<ProcessedGesture> build_processed(const GestureSegment& segment,
                                                const PreprocessConfig& cfg,
                                                int screen_width,
                                                int screen_height,
                                                size_t raw_index = 0);

// segment() + build_processed() over a whole log.
std::vector<ProcessedGesture> preprocess_log(const RawEventLog& log,
                                             const PreprocessConfig& cfg,
                                             SegmentDiagnostics* diag = nullptr);

}  // namespace chas

#endif  // CHAS_PREPROCESS_HPP_
