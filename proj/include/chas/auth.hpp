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

#ifndef CHAS_AUTH_HPP_
#define CHAS_AUTH_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "chas/config.hpp"
#include "chas/enrollment.hpp"
#include "chas/types.hpp"

namespace chas {

// Sliding window over the k most recent fused gesture scores.
class ScoreWindow {
 public:
  explicit ScoreWindow(size_t capacity);

  void push(double score);  // evicts the oldest beyond capacity
  double mean() const;
  size_t size() const { return scores_.size(); }
  size_t capacity() const { return capacity_; }
  bool full() const { return scores_.size() == capacity_; }

 private:
  size_t capacity_;
  std::deque<double> scores_;
};

enum class Verdict { kAccept, kReject, kUndecided };

const char* to_string(Verdict verdict);

struct Decision {
  Verdict verdict = Verdict::kUndecided;
  double window_mean = 0.0;
  uint64_t gestures_observed = 0;
  double threshold_used = 0.0;
};

// Appends the score and decides: undecided until the window fills,
// then accept iff the window mean >= threshold. A reject is the
// caller's signal to invoke fallback access control.
Decision push_and_decide(ScoreWindow& window, double score, double threshold,
                         uint64_t gestures_observed);

enum class ThresholdMode { kBalanced, kZeroFrrQuantile, kZeroFarGuard };

ThresholdMode threshold_mode_from_string(const std::string& s);

// Threshold from owner-only holdout data: windowed means over the
// holdout stream, then
//   balanced           -> 5th percentile
//   zero_frr_quantile  -> minimum minus 0.01
//   zero_far_guard     -> 1st percentile
// clamped to [0, 1]. Throws when the holdout is smaller than k.
double calibrate_threshold(const UserTemplate& tpl,
                           const std::vector<ProcessedGesture>& holdout,
                           ThresholdMode mode, size_t k,
                           const ScoreConfig& score_cfg);

// Same calibration from an already-scored owner stream.
double calibrate_from_scores(const std::vector<double>& fused_scores,
                             ThresholdMode mode, size_t k);

}  // namespace chas

#endif  // CHAS_AUTH_HPP_
