// Copyright 2026 The gwlkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GWLKIT_DIAGNOSTICS_H_
#define GWLKIT_DIAGNOSTICS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace gwl {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kModeMismatch,
  kCapExceeded,
  kParse,
  kDegenerate,
  kNotOrthogonal,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the library. The code lets callers (notably the
// CLI) map failures onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Warning channel. Non-fatal conditions (coincident points, float coercion,
// tolerance fragility) are reported here instead of being thrown.
//
// While a WarningCapture is alive on the current thread, warnings are
// appended to it; otherwise each distinct message is printed once to stderr.
void Warn(const std::string& message);

class WarningCapture {
 public:
  WarningCapture();
  ~WarningCapture();
  WarningCapture(const WarningCapture&) = delete;
  WarningCapture& operator=(const WarningCapture&) = delete;

  const std::vector<std::string>& warnings() const { return warnings_; }
  bool Contains(const std::string& needle) const;

 private:
  friend void Warn(const std::string& message);
  std::vector<std::string> warnings_;
  WarningCapture* previous_;
};

}  // namespace gwl

#endif  // GWLKIT_DIAGNOSTICS_H_
