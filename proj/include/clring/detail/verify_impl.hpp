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

#pragma once

#include "clring/kernels.hpp"
#include "clring/scheme.hpp"

namespace clring::detail {

// Verification with the transcript hash supplied by the caller. The
// production verify() passes hash_to_scalar; only the proof-simulation
// harness routes it through a programmable oracle.
bool verify_with_hash(const SystemParams& params, ByteView message, const Ring& ring,
                      const RingSignature& sig, const ScalarHash& transcript_hash,
                      ExecutionPolicy policy);

}  // namespace clring::detail
