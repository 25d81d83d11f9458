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

#ifndef CHAS_INGEST_HPP_
#define CHAS_INGEST_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chas/types.hpp"

namespace chas {

enum class LogFormat { kJsonl, kCsv };

LogFormat log_format_from_string(const std::string& s);

// Parses a device log. The first line must be the meta record. Records
// out of order by more than reorder_ms are rejected with their line
// number; smaller jitter is absorbed by a stable sort.
RawEventLog parse_log(std::istream& in, LogFormat format,
                      int64_t reorder_ms = 10);
RawEventLog parse_log_file(const std::string& path, LogFormat format,
                           int64_t reorder_ms = 10);

// Re-serializes a log in the given format. parse(write(log)) == log.
void write_log(const RawEventLog& log, std::ostream& out, LogFormat format);
void write_log_file(const RawEventLog& log, const std::string& path,
                    LogFormat format);

// Splits the log into one segment per down..up pointer span. Spans with
// overlapping pointers are dropped (counted); inertial samples are
// attached within [t_down - pad, t_up + pad].
std::vector<GestureSegment> segment(const RawEventLog& log, int64_t pad_ms,
                                    SegmentDiagnostics* diag = nullptr);

}  // namespace chas

#endif  // CHAS_INGEST_HPP_
