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

#ifndef CHAS_EVALUATION_HPP_
#define CHAS_EVALUATION_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chas/config.hpp"
#include "chas/enrollment.hpp"
#include "chas/types.hpp"

namespace chas {

// Scores every gesture against the template and emits the sliding mean
// over each window of k consecutive scores. Gestures of un-enrolled
// kinds are skipped and counted.
std::vector<double> window_scores(const UserTemplate& tpl,
                                  const std::vector<ProcessedGesture>& gestures,
                                  size_t k, const ScoreConfig& cfg,
                                  size_t* skipped = nullptr);

// FAR = fraction of impostor means >= threshold;
// FRR = fraction of genuine means < threshold.
std::pair<double, double> far_frr(const std::vector<double>& genuine,
                                  const std::vector<double>& impostor,
                                  double threshold);

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

// Sweeps thresholds over the pooled score values plus endpoints and
// returns (FAR + FRR) / 2 at the threshold minimizing |FAR - FRR|,
// ties broken toward the lower threshold.
EerResult eer(const std::vector<double>& genuine,
              const std::vector<double>& impostor);

enum class FixedRateMode { kFarAtZeroFrr, kFrrAtZeroFar };

// kFarAtZeroFrr: FAR at the largest threshold with FRR = 0.
// kFrrAtZeroFar: FRR at the smallest threshold with FAR = 0.
double fixed_rate(const std::vector<double>& genuine,
                  const std::vector<double>& impostor, FixedRateMode mode);

struct UserCurvePoint {
  int k = 0;
  double eer = 0.0;
  double eer_threshold = 0.0;
  double far_at_zero_frr = 0.0;
  double frr_at_zero_far = 0.0;
  size_t genuine_windows = 0;
  size_t impostor_windows = 0;
};

struct BoxStats {
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;
};

BoxStats box_stats(std::vector<double> values);

struct PopulationPoint {
  int k = 0;
  size_t users = 0;
  BoxStats eer;
};

// One user's labeled test material, segmented and preprocessed.
struct CorpusUser {
  std::string id;
  std::vector<ProcessedGesture> gestures;
};

struct ProtocolResult {
  std::vector<std::pair<std::string, std::vector<UserCurvePoint>>> per_user;
  std::vector<PopulationPoint> population;
  std::vector<std::string> excluded_users;
  // Impostor window means are pooled across attackers; windows never mix
  // gestures of different impostors.
  std::string impostor_pooling = "pooled";
};

// Per user: enroll on the train sessions, score own test gestures as
// genuine and every other user's test gestures as impostor attempts,
// then compute EER/FAR/FRR per window size and the population box
// statistics of per-user EER.
ProtocolResult protocol_run(const std::vector<CorpusUser>& corpus,
                            const Config& cfg);

// CSV columns: user,k,eer,eer_threshold,far_at_zero_frr,frr_at_zero_far
void write_per_user_csv(const ProtocolResult& result, std::ostream& out);
// CSV columns: k,users,median_eer,q1_eer,q3_eer,whisker_low,whisker_high,outliers
void write_population_csv(const ProtocolResult& result, std::ostream& out);

std::string median_eer_svg(const ProtocolResult& result);
std::string eer_box_svg(const ProtocolResult& result);

}  // namespace chas

#endif  // CHAS_EVALUATION_HPP_
