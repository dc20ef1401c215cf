// Copyright 2026 The Shapely Authors
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

#include "shapely/error.hpp"

namespace shapely {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPolygraph: return "invalid-polygraph";
    case ErrorCode::kInvalidMorphism: return "invalid-morphism";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kArityMismatch: return "arity-mismatch";
    case ErrorCode::kNotMonic: return "not-monic";
    case ErrorCode::kNotAutomorphism: return "not-automorphism";
    case ErrorCode::kModeMismatch: return "mode-mismatch";
    case ErrorCode::kBoundsMismatch: return "bounds-mismatch";
    case ErrorCode::kBoundsExceeded: return "bounds-exceeded";
    case ErrorCode::kIllLabelled: return "ill-labelled";
    case ErrorCode::kTypeMismatch: return "type-mismatch";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kDuplicateName: return "duplicate-name";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kUsage: return "usage";
  }
  return "unknown";
}

}  // namespace shapely
