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

// Hooks for tests and the attack harness. Not part of the production API.

#include "clring/scheme.hpp"

namespace clring::testing {

// ring_sign without the key-binding precondition checks, so that mismatched
// key halves can be fed to the signing equations.
RingSignature ring_sign_unchecked(const SystemParams& params, ByteView message,
                                  const Ring& ring, size_t signer, const PrivateKey& key,
                                  RandomSource& rng,
                                  ExecutionPolicy policy = ExecutionPolicy::kParallel);

// Redo rule for the signer commitment: the signer's commitment must not be 1_GT nor equal any
// other member's commitment.
bool commitment_needs_redo(const GTElement& candidate, std::span<const GTElement> commitments,
                           size_t signer);

}  // namespace clring::testing
