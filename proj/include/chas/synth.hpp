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

#ifndef CHAS_SYNTH_HPP_
#define CHAS_SYNTH_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chas/config.hpp"
#include "chas/hmm.hpp"
#include "chas/types.hpp"

namespace chas {

// Ground-truth generative models for one gesture kind.
struct KindSpec {
  std::map<Channel, HmmModel> models;  // touch required
  int min_frames = 0;
  int max_frames = 0;
};

struct SyntheticUserSpec {
  std::string id;
  std::map<GestureKind, KindSpec> kinds;
  std::map<Channel, double> availability;  // per inertial channel, in [0,1]
};

struct PopulationSpec {
  int version = 1;
  double rate_hz = 50.0;
  int screen_width = 768;
  int screen_height = 1280;
  int sessions = 5;
  int gestures_per_session = 30;
  double tap_fraction = 0.5;
  std::vector<SyntheticUserSpec> users;

  static PopulationSpec from_json(const nlohmann::json& j);
  static PopulationSpec load_file(const std::string& path);
  nlohmann::json to_json() const;
};

struct SynthStats {
  uint64_t clamped_values = 0;  // pressure/size samples clipped into [0,1]
  uint64_t touch_values = 0;
  uint64_t gestures = 0;

  double clamp_rate() const {
    return touch_values == 0
               ? 0.0
               : static_cast<double>(clamped_values) / static_cast<double>(touch_values);
  }
};

// Samples a state path from pi and the transition matrix, then one
// mixture component and Gaussian draw per frame. Deterministic given
// the seed.
ObservationSequence sample_sequence(const HmmModel& model, size_t num_frames,
                                    uint64_t seed,
                                    Channel channel = Channel::kTouch,
                                    double rate_hz = 50.0);

// Renders one user's gesture stream back to timestamped raw events in
// the ingest format: canonicalized touch trajectories are placed on
// screen under a random rigid transform, inertial frames become sensor
// records within the touch interval, session markers split the stream
// into spec.sessions parts. When truth is non-null it receives the
// canonical sequences each gesture was generated from.
RawEventLog render_user_log(const SyntheticUserSpec& user,
                            const PopulationSpec& spec, uint64_t seed,
                            SynthStats* stats = nullptr,
                            std::vector<ProcessedGesture>* truth = nullptr);

// Writes one JSONL log per user into out_dir (<user id>.jsonl) and
// returns the file names.
std::vector<std::string> sample_population(const PopulationSpec& spec,
                                           const std::string& out_dir,
                                           uint64_t seed,
                                           SynthStats* stats = nullptr);

// Options for the procedural population builder used by tests and by
// "generate" spec files: users get deterministically spread model means
// so pairwise separation is guaranteed.
struct PopulationOptions {
  int num_users = 10;
  double separation = 3.0;        // mean spacing in units of feature stddev
  double touch_noise = 0.04;      // pressure/size stddev
  double inertial_noise = 0.5;    // axis stddev
  bool inertial_channels = true;  // emit vibration/rotation models
  double inertial_separation = 3.0;
  int sessions = 5;
  int gestures_per_session = 30;
  double tap_fraction = 0.5;
  int tap_states = 2;
  int slide_states = 4;
};

PopulationSpec make_separated_population(const PopulationOptions& options,
                                         uint64_t seed);

}  // namespace chas

#endif  // CHAS_SYNTH_HPP_
