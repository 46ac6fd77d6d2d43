// Copyright 2026 The swclab Authors
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

#ifndef SWCLAB_ERROR_HPP_
#define SWCLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace swclab {

// Failure categories. The CLI maps each one onto a fixed exit code.
enum class ErrorKind {
  kInput,            // malformed descriptor, violated precondition
  kGuardExceeded,    // enumeration would exceed a configured limit
  kHypothesisUnmet,  // a checked claim's hypotheses do not hold for the input
  kUnsupported,      // no verified construction available within limits
  kInternal,         // cross-check disagreement; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error InputError(const std::string& what) {
  return Error(ErrorKind::kInput, what);
}
inline Error GuardExceeded(const std::string& what) {
  return Error(ErrorKind::kGuardExceeded, what);
}
inline Error HypothesisUnmet(const std::string& what) {
  return Error(ErrorKind::kHypothesisUnmet, what);
}
inline Error Unsupported(const std::string& what) {
  return Error(ErrorKind::kUnsupported, what);
}
inline Error InternalError(const std::string& what) {
  return Error(ErrorKind::kInternal, what);
}

}  // namespace swclab

#endif  // SWCLAB_ERROR_HPP_
