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

#include "chas/config.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "chas/error.hpp"
#include "internal.hpp"

namespace chas {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw ChasError(Errc::kConfig, "config: " + what);
}

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) bad(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) bad("unknown key '" + it.key() + "' in " + where);
  }
}

template <class T>
void get(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

std::vector<Channel> channels_from_json(const json& j) {
  std::vector<Channel> out;
  for (const auto& name : j) out.push_back(channel_from_string(name.get<std::string>()));
  return out;
}

}  // namespace

bool EvalConfig::channel_enabled(Channel channel) const {
  return std::find(channels.begin(), channels.end(), channel) != channels.end();
}

Config Config::defaults() {
  Config cfg;
  for (int k = 1; k <= 25; ++k) cfg.eval.k_grid.push_back(k);
  return cfg;
}

Config Config::from_json(const json& j) {
  Config cfg = defaults();
  check_keys(j, "config",
             {"version", "seed", "preprocess", "hmm", "score", "enroll", "eval"});
  get(j, "version", cfg.version);
  if (cfg.version != 1) bad("unsupported version");
  get(j, "seed", cfg.seed);

  if (j.contains("preprocess")) {
    const json& p = j.at("preprocess");
    check_keys(p, "preprocess",
               {"rate_hz", "pad_ms", "tap_max_ms", "tap_max_px",
                "scale_normalize", "reorder_ms"});
    get(p, "rate_hz", cfg.preprocess.rate_hz);
    get(p, "pad_ms", cfg.preprocess.pad_ms);
    get(p, "tap_max_ms", cfg.preprocess.tap_max_ms);
    get(p, "tap_max_px", cfg.preprocess.tap_max_px);
    get(p, "scale_normalize", cfg.preprocess.scale_normalize);
    get(p, "reorder_ms", cfg.preprocess.reorder_ms);
  }
  if (j.contains("hmm")) {
    const json& h = j.at("hmm");
    check_keys(h, "hmm",
               {"tap_states", "slide_states", "mixtures", "var_floor", "em_tol",
                "em_max_iter", "cv_folds"});
    get(h, "tap_states", cfg.hmm.tap_states);
    get(h, "slide_states", cfg.hmm.slide_states);
    get(h, "mixtures", cfg.hmm.mixtures);
    get(h, "var_floor", cfg.hmm.var_floor);
    get(h, "em_tol", cfg.hmm.em_tol);
    get(h, "em_max_iter", cfg.hmm.em_max_iter);
    get(h, "cv_folds", cfg.hmm.cv_folds);
  }
  if (j.contains("score")) {
    const json& s = j.at("score");
    check_keys(s, "score", {"logistic_slope", "likelihood_weight", "ll_std_floor"});
    get(s, "logistic_slope", cfg.score.logistic_slope);
    get(s, "likelihood_weight", cfg.score.likelihood_weight);
    get(s, "ll_std_floor", cfg.score.ll_std_floor);
  }
  if (j.contains("enroll")) {
    const json& e = j.at("enroll");
    check_keys(e, "enroll", {"min_enroll", "calibration_fraction"});
    get(e, "min_enroll", cfg.enroll.min_enroll);
    get(e, "calibration_fraction", cfg.enroll.calibration_fraction);
  }
  if (j.contains("eval")) {
    const json& e = j.at("eval");
    check_keys(e, "eval", {"k_grid", "train_sessions", "channels", "window_k"});
    get(e, "k_grid", cfg.eval.k_grid);
    get(e, "train_sessions", cfg.eval.train_sessions);
    if (e.contains("channels")) cfg.eval.channels = channels_from_json(e.at("channels"));
    get(e, "window_k", cfg.eval.window_k);
  }
  cfg.validate();
  return cfg;
}

Config Config::load_file(const std::string& path) {
  json j;
  try {
    j = json::parse(internal::read_file(path));
  } catch (const json::exception& e) {
    throw ChasError(Errc::kConfig, "config " + path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json Config::to_json() const {
  json channels = json::array();
  for (Channel c : eval.channels) channels.push_back(to_string(c));
  return json{
      {"version", version},
      {"seed", seed},
      {"preprocess",
       {{"rate_hz", preprocess.rate_hz},
        {"pad_ms", preprocess.pad_ms},
        {"tap_max_ms", preprocess.tap_max_ms},
        {"tap_max_px", preprocess.tap_max_px},
        {"scale_normalize", preprocess.scale_normalize},
        {"reorder_ms", preprocess.reorder_ms}}},
      {"hmm",
       {{"tap_states", hmm.tap_states},
        {"slide_states", hmm.slide_states},
        {"mixtures", hmm.mixtures},
        {"var_floor", hmm.var_floor},
        {"em_tol", hmm.em_tol},
        {"em_max_iter", hmm.em_max_iter},
        {"cv_folds", hmm.cv_folds}}},
      {"score",
       {{"logistic_slope", score.logistic_slope},
        {"likelihood_weight", score.likelihood_weight},
        {"ll_std_floor", score.ll_std_floor}}},
      {"enroll",
       {{"min_enroll", enroll.min_enroll},
        {"calibration_fraction", enroll.calibration_fraction}}},
      {"eval",
       {{"k_grid", eval.k_grid},
        {"train_sessions", eval.train_sessions},
        {"channels", channels},
        {"window_k", eval.window_k}}}};
}

void Config::validate() const {
  if (preprocess.rate_hz <= 0) bad("rate_hz must be > 0");
  if (preprocess.pad_ms < 0) bad("pad_ms must be >= 0");
  if (preprocess.tap_max_ms < 0 || preprocess.tap_max_px < 0)
    bad("tap thresholds must be >= 0");
  if (preprocess.reorder_ms < 0) bad("reorder_ms must be >= 0");
  auto positive_grid = [](const std::vector<int>& g) {
    return !g.empty() && std::all_of(g.begin(), g.end(), [](int v) { return v >= 1; });
  };
  if (!positive_grid(hmm.tap_states) || !positive_grid(hmm.slide_states) ||
      !positive_grid(hmm.mixtures))
    bad("state/mixture grids must be non-empty lists of positive integers");
  if (hmm.var_floor <= 0) bad("var_floor must be > 0");
  if (hmm.em_tol < 0 || hmm.em_max_iter < 1) bad("invalid EM settings");
  if (hmm.cv_folds < 2) bad("cv_folds must be >= 2");
  if (score.likelihood_weight < 0 || score.likelihood_weight > 1)
    bad("likelihood_weight must be in [0,1]");
  if (score.ll_std_floor <= 0) bad("ll_std_floor must be > 0");
  if (enroll.min_enroll < 1) bad("min_enroll must be >= 1");
  if (enroll.calibration_fraction < 0 || enroll.calibration_fraction >= 1)
    bad("calibration_fraction must be in [0,1)");
  if (!positive_grid(eval.k_grid)) bad("k_grid must be non-empty and positive");
  if (eval.train_sessions.empty()) bad("train_sessions must be non-empty");
  if (eval.channels.empty() || !eval.channel_enabled(Channel::kTouch))
    bad("eval channels must include touch");
  if (eval.window_k < 1) bad("window_k must be >= 1");
}

std::string Config::preprocess_hash() const {
  json p{{"rate_hz", preprocess.rate_hz},
         {"pad_ms", preprocess.pad_ms},
         {"tap_max_ms", preprocess.tap_max_ms},
         {"tap_max_px", preprocess.tap_max_px},
         {"scale_normalize", preprocess.scale_normalize}};
  uint64_t h = internal::fnv1a(p.dump());
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace chas
