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

#include "gwlkit/diagnostics.h"

#include <iostream>
#include <mutex>
#include <set>

namespace gwl {
namespace {

thread_local WarningCapture* current_capture = nullptr;

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorCode::kModeMismatch:
      return "numeric mode mismatch";
    case ErrorCode::kCapExceeded:
      return "size cap exceeded";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kDegenerate:
      return "degenerate geometry";
    case ErrorCode::kNotOrthogonal:
      return "not orthogonal";
    case ErrorCode::kIo:
      return "i/o error";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void Warn(const std::string& message) {
  if (current_capture != nullptr) {
    current_capture->warnings_.push_back(message);
    return;
  }
  static std::mutex mu;
  static std::set<std::string> seen;
  std::lock_guard<std::mutex> lock(mu);
  if (seen.insert(message).second) {
    std::cerr << "gwlkit: warning: " << message << "\n";
  }
}

WarningCapture::WarningCapture() : previous_(current_capture) {
  current_capture = this;
}

WarningCapture::~WarningCapture() { current_capture = previous_; }

bool WarningCapture::Contains(const std::string& needle) const {
  for (const auto& w : warnings_) {
    if (w.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace gwl
