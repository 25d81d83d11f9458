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

#ifndef CHAS_HMM_HPP_
#define CHAS_HMM_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chas/config.hpp"
#include "chas/types.hpp"

namespace chas {

// Diagonal-covariance Gaussian mixture attached to one state.
struct GaussianMixture {
  std::vector<double> weights;             // M, sums to 1
  std::vector<std::vector<double>> means;  // M x D
  std::vector<std::vector<double>> vars;   // M x D, floored

  double log_density(std::span<const double> frame) const;
};

// Left-right, no-skip HMM with M-mixture diagonal-Gaussian emissions.
// pi is pinned to (1, 0, ..., 0); row i of the transition matrix is
// supported on {i, i+1} and the last state self-loops with probability 1.
struct HmmModel {
  int num_states = 0;
  int num_mixtures = 0;
  int dim = 0;
  double var_floor = 1e-4;
  std::vector<double> initial;              // N
  std::vector<std::vector<double>> trans;   // N x N
  std::vector<GaussianMixture> states;      // N

  void validate() const;  // throws ChasError on any invariant breach
  double emission_log_density(int state, std::span<const double> frame) const {
    return states[state].log_density(frame);
  }
};

struct DecodeResult {
  double log_likelihood = 0.0;   // joint of observations and best path
  std::vector<int> path;         // state index per frame
  std::vector<double> occupancy; // fraction of frames per state, sums to 1
};

// Segmental initialization: each sequence is cut into num_states equal
// temporal chunks and state i's mixture is fit by seeded k-means on the
// pooled chunk-i frames. Sequences shorter than num_states are skipped.
HmmModel init_model(const std::vector<ObservationSequence>& sequences,
                    int num_states, int num_mixtures, double var_floor,
                    uint64_t seed);

// log P(seq | model), marginal over all state paths. Computed with
// per-frame shifted scaling; finite for any input given the variance floor.
double forward_log_likelihood(const HmmModel& model,
                              const ObservationSequence& seq);

// Most probable state path, its joint log-probability, and the
// state-occupancy profile of that path.
DecodeResult viterbi(const HmmModel& model, const ObservationSequence& seq);

struct TrainResult {
  HmmModel model;
  std::vector<double> loglik_history;  // total log-likelihood per iteration
};

// Multi-sequence Baum-Welch on the left-right structure. Stops when the
// relative improvement drops below cfg.em_tol or after cfg.em_max_iter
// iterations. The history is non-decreasing within 1e-8.
TrainResult baum_welch(const std::vector<ObservationSequence>& sequences,
                       int num_states, int num_mixtures, const HmmConfig& cfg,
                       uint64_t seed);

struct SelectionResult {
  int num_states = 0;
  int num_mixtures = 0;
  HmmModel model;
  double held_out_score = 0.0;  // mean held-out per-frame log-likelihood
  bool fallback = false;        // too few sequences for cross-validation
};

// 5-fold cross-validated (N, M) grid search scored by mean held-out
// per-frame log-likelihood; ties break toward smaller N, then smaller M.
// The winner is retrained on all sequences.
SelectionResult select_model(const std::vector<ObservationSequence>& sequences,
                             const std::vector<int>& state_grid,
                             const std::vector<int>& mixture_grid,
                             const HmmConfig& cfg, uint64_t seed);

nlohmann::json model_to_json(const HmmModel& model);
HmmModel model_from_json(const nlohmann::json& j);

}  // namespace chas

#endif  // CHAS_HMM_HPP_
