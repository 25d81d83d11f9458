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

#ifndef CHAS_CONFIG_HPP_
#define CHAS_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chas/types.hpp"

namespace chas {

// Preprocessing parameters. These feed the config hash that templates
// pin; scoring refuses gestures preprocessed under a different hash.
struct PreprocessConfig {
  double rate_hz = 50.0;
  int64_t pad_ms = 50;
  double tap_max_ms = 300.0;
  double tap_max_px = 20.0;
  bool scale_normalize = true;  // also normalize slide chord length to 1
  int64_t reorder_ms = 10;      // accepted timestamp jitter in the log
};

struct HmmConfig {
  std::vector<int> tap_states = {2, 3, 4};
  std::vector<int> slide_states = {3, 4, 5, 6, 7, 8};
  std::vector<int> mixtures = {1, 2, 3};
  double var_floor = 1e-4;
  double em_tol = 1e-4;  // relative total log-likelihood improvement
  int em_max_iter = 100;
  int cv_folds = 5;
};

struct ScoreConfig {
  double logistic_slope = 1.0;     // slope on the z-scored log-likelihood
  double likelihood_weight = 0.5;  // weight of s_ll vs kin_score
  double ll_std_floor = 1e-3;
};

struct EnrollConfig {
  int min_enroll = 20;                 // per gesture kind
  double calibration_fraction = 0.25;  // tail of the stream held out for thresholds
};

struct EvalConfig {
  std::vector<int> k_grid;  // defaults to 1..25
  std::vector<int> train_sessions = {1, 2};
  std::vector<Channel> channels = {Channel::kTouch, Channel::kVibration,
                                   Channel::kRotation};
  int window_k = 10;  // default decision window for scoring

  bool channel_enabled(Channel channel) const;
};

struct Config {
  int version = 1;
  uint64_t seed = 1;
  PreprocessConfig preprocess;
  HmmConfig hmm;
  ScoreConfig score;
  EnrollConfig enroll;
  EvalConfig eval;

  static Config defaults();
  static Config from_json(const nlohmann::json& j);
  static Config load_file(const std::string& path);

  nlohmann::json to_json() const;
  void validate() const;  // throws ChasError(kConfig)

  // FNV-1a hex digest over the canonical preprocess block. Stored in
  // templates and checked before scoring.
  std::string preprocess_hash() const;
};

}  // namespace chas

#endif  // CHAS_CONFIG_HPP_
