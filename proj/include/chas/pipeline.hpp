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

#ifndef CHAS_PIPELINE_HPP_
#define CHAS_PIPELINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "chas/config.hpp"
#include "chas/ingest.hpp"

namespace chas {

// Command-level entry points shared by the C API and (through it) the
// CLI. All throw ChasError; summaries are machine-readable JSON.

// Reserves the calibration tail of the stream, enrolls on the rest,
// scores the holdout, and writes the template.
nlohmann::json run_enroll(const Config& cfg, const std::string& log_path,
                          LogFormat format, const std::string& template_out);

// Streams one decision JSON line per scored gesture to decisions_out
// (when non-null) and returns a summary with verdict counts.
// threshold_spec is "balanced", "zero-frr", "zero-far", or a number.
nlohmann::json run_score(const Config& cfg, const std::string& template_path,
                         const std::string& log_path, LogFormat format,
                         size_t k, const std::string& threshold_spec,
                         std::ostream* decisions_out);

// Runs the full protocol over every *.jsonl log under corpus_dir and
// writes per-user CSV, population CSV, and SVG plots into out_dir.
nlohmann::json run_evaluate(const Config& cfg, const std::string& corpus_dir,
                            const std::string& out_dir);

// Renders a synthetic corpus from a population spec file.
nlohmann::json run_synth(const std::string& spec_path,
                         const std::string& out_dir, uint64_t seed);

}  // namespace chas

#endif  // CHAS_PIPELINE_HPP_
