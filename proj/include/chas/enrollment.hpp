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

#ifndef CHAS_ENROLLMENT_HPP_
#define CHAS_ENROLLMENT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chas/config.hpp"
#include "chas/hmm.hpp"
#include "chas/types.hpp"

namespace chas {

// One trained sensor model plus the normalization statistics scoring
// needs: the training distribution of per-frame log-likelihood and the
// mean training state-occupancy profile.
struct ChannelModel {
  HmmModel model;
  double ll_mean = 0.0;
  double ll_std = 1.0;              // floored
  std::vector<double> occ_ref;      // sums to 1
  int gesture_count = 0;
  bool selection_fallback = false;  // model selection skipped CV
};

struct KindTemplate {
  std::map<Channel, ChannelModel> channels;  // touch always present
  int gesture_count = 0;
};

// Per-user behavioral template. Built from the owner's data only; the
// API takes a single gesture list and rejects mixed subject labels.
struct UserTemplate {
  std::map<GestureKind, KindTemplate> kinds;
  std::string config_hash;
  std::string subject;  // label of the enrolled user, when known
  uint64_t seed = 0;
  // Fused scores of owner gestures held out by the enrollment pipeline,
  // in stream order. Threshold calibration at scoring time reads these.
  std::vector<double> calibration_scores;

  bool has_kind(GestureKind kind) const { return kinds.count(kind) > 0; }
};

struct EnrollReport {
  std::map<GestureKind, int> counts;          // gestures seen per kind
  std::vector<GestureKind> skipped_kinds;     // below minimum enrollment
  std::map<std::string, std::string> notes;   // e.g. omitted channels
};

struct ChannelScore {
  double ll_score = 0.0;   // z-scored per-frame log-likelihood
  double s_ll = 0.0;       // logistic-mapped, in [0,1]
  double kin_score = 0.0;  // occupancy similarity, in [0,1]
  double combined = 0.0;   // weighted blend, in [0,1]
};

struct GestureScore {
  std::map<Channel, ChannelScore> channels;
  std::vector<Channel> channels_used;  // channel-enum order
  double fused = 0.0;                  // mean of combined over channels_used
};

// Trains one ChannelModel set per (kind, channel) via select_model and
// derives the score-normalization statistics from the training data.
// Kinds below cfg.enroll.min_enroll are omitted and reported; if none
// survives, throws ChasError(kEnrollInsufficient).
UserTemplate enroll(const std::vector<ProcessedGesture>& gestures,
                    const Config& cfg, uint64_t seed,
                    EnrollReport* report = nullptr);

// Combined similarity of one gesture against the template: per channel,
// a logistic-mapped z-scored per-frame log-likelihood blended with the
// L1 occupancy similarity, then averaged over the channels present in
// both gesture and template.
GestureScore similarity(const UserTemplate& tpl, const ProcessedGesture& g,
                        const ScoreConfig& cfg);

nlohmann::json template_to_json(const UserTemplate& tpl);
UserTemplate template_from_json(const nlohmann::json& j);
void save_template(const UserTemplate& tpl, const std::string& path);
UserTemplate load_template(const std::string& path);

}  // namespace chas

#endif  // CHAS_ENROLLMENT_HPP_
