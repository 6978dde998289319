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

// Signing-oracle simulation from the unforgeability proofs: answer a ring
// signing query without any private key by programming the transcript hash.

#include <cstddef>
#include <map>

#include <json.hpp>

#include "clring/bytes.hpp"
#include "clring/rng.hpp"
#include "clring/scheme.hpp"

namespace clring::simulation {

// Lazily sampled random oracle for the transcript hash. Unprogrammed points
// fall back to hash_to_scalar and are remembered, so a later attempt to
// program them is detected.
class ProgrammableOracle {
 public:
  Scalar query(ByteView input);
  // Throws kOracleCollision if `input` already has a value.
  void program(ByteView input, const Scalar& value);
  bool is_defined(ByteView input) const;
  size_t programmed_points() const { return programmed_; }

 private:
  std::map<Bytes, Scalar> table_;
  size_t programmed_ = 0;
};

struct SimulationResult {
  RingSignature signature;
  size_t simulated_signer = 0;
  size_t retries = 0;
};

// Verification with every transcript hash answered by `oracle`.
bool verify_with_oracle(const SystemParams& params, ByteView message, const Ring& ring,
                        const RingSignature& sig, ProgrammableOracle& oracle);

// Steps: random s; r_i, y_i = g^r_i and h_i = H2(.. || y_i) for i != s;
// random h_s and V; y_s = e(V - (sum_{i!=s} r_i)P, P) e(sum h_i Q_i, -P0)
// e(sum h_i P_i, -U); program H2(.. || y_s) = h_s. A y_s equal to 1_GT or to
// another y_i, or an already-defined oracle point, sends it back to drawing
// h_s and V. Throws kOracleCollision after `max_attempts` failed draws.
SimulationResult simulate_ring_sign_query(const SystemParams& params,
                                          ProgrammableOracle& oracle, ByteView message,
                                          const Ring& ring, RandomSource& rng,
                                          size_t max_attempts = 64);

nlohmann::json to_json(const SimulationResult& result);

}  // namespace clring::simulation
