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

#ifndef CHAS_ERROR_HPP_
#define CHAS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace chas {

// Error classes; values match the CHAS_E_* codes of the C API and the
// CLI exit codes.
enum class Errc : int {
  kOk = 0,
  kIo = 1,
  kParse = 2,
  kConfig = 3,
  kEnrollInsufficient = 4,
  kConfigMismatch = 5,
  kEvalNeedsImpostors = 6,
  kInvalidSpec = 7,
  kInvalidArgument = 8,
  kNumeric = 9,
  kInternal = 10,
};

const char* errc_name(Errc code);

class ChasError : public std::runtime_error {
 public:
  ChasError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace chas

#endif  // CHAS_ERROR_HPP_
