// Copyright 2026 The parapref Authors.
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

#ifndef PARAPREF_ERRORS_HPP_
#define PARAPREF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace parapref {

// Bad flags, bad argument combinations. CLI exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent inputs: vocab mismatches, short files,
// separator tokens inside documents, ... CLI exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Remote completion endpoint failures. CLI exit code 3.
struct RemoteError : std::runtime_error {
  enum class Kind { transport, http_status, protocol, capability };

  RemoteError(Kind kind, const std::string& what, int status = 0,
              std::string body_excerpt = {}, int attempts = 1)
      : std::runtime_error(what),
        kind(kind),
        status(status),
        body_excerpt(std::move(body_excerpt)),
        attempts(attempts) {}

  Kind kind;
  int status;                // HTTP status, 0 for transport failures
  std::string body_excerpt;  // first bytes of the response body, if any
  int attempts;              // how many tries were made before giving up
};

}  // namespace parapref

#endif  // PARAPREF_ERRORS_HPP_
