// Copyright 2026 The CLRing Authors.
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

#include "clring/errors.hpp"

namespace clring {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidElement: return "invalid-element";
    case ErrorCode::kZeroScalar: return "zero-scalar";
    case ErrorCode::kUnsupportedParameter: return "unsupported-parameter";
    case ErrorCode::kEntropyUnavailable: return "entropy-unavailable";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kKeyMismatch: return "key-mismatch";
    case ErrorCode::kRingInvariant: return "ring-invariant";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kInvalidSignature: return "invalid-signature";
    case ErrorCode::kMalformedEnvelope: return "malformed-envelope";
    case ErrorCode::kWrongKind: return "wrong-kind";
    case ErrorCode::kOffCurvePoint: return "off-curve-point";
    case ErrorCode::kNonCanonicalEncoding: return "non-canonical-encoding";
    case ErrorCode::kInvalidCharacter: return "invalid-character";
    case ErrorCode::kOracleCollision: return "oracle-collision";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace clring
