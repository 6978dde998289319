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

#include <gtest/gtest.h>

#include "clring/simulation.hpp"
#include "fixtures.hpp"

namespace clring::simulation {
namespace {

struct Env {
  explicit Env(size_t n, uint64_t seed) : rng(seed) {
    std::tie(params, master) = setup(kDefaultSecurityBits, rng);
    std::vector<Identity> ids;
    std::vector<PublicKey> keys;
    for (size_t i = 0; i < n; ++i) {
      ids.emplace_back("sim-" + std::to_string(i));
      keys.push_back(set_public_key(params, set_secret_value(params, rng)));
    }
    ring.emplace(ids, keys);
  }
  SeededRng rng;
  SystemParams params;
  MasterKey master;
  std::optional<Ring> ring;
};

TEST(Oracle, LazyConsistentAndProgrammable) {
  ProgrammableOracle oracle;
  const Bytes a = to_bytes("a"), b = to_bytes("b");
  EXPECT_FALSE(oracle.is_defined(a));
  EXPECT_EQ(oracle.query(a), hash_to_scalar(a));
  EXPECT_TRUE(oracle.is_defined(a));
  EXPECT_THROW(oracle.program(a, Scalar::one()), Error);
  oracle.program(b, Scalar::from_u64(7));
  EXPECT_EQ(oracle.query(b), Scalar::from_u64(7));
  EXPECT_EQ(oracle.programmed_points(), 1u);
  try {
    oracle.program(b, Scalar::one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleCollision);
  }
}

TEST(Oracle, UnprogrammedMatchesRealVerify) {
  SeededRng rng(2);
  const auto w = test::make_world(3, rng);
  const Bytes msg = to_bytes("m");
  const RingSignature sig = ring_sign(w.params, msg, w.ring(), 1, w.secrets[1], rng);
  ProgrammableOracle oracle;
  EXPECT_TRUE(verify_with_oracle(w.params, msg, w.ring(), sig, oracle));
  EXPECT_EQ(oracle.programmed_points(), 0u);
}

class Simulate : public ::testing::TestWithParam<size_t> {};

TEST_P(Simulate, VerifiesOnlyUnderProgrammedOracle) {
  const size_t n = GetParam();
  Env env(n, 10 + n);
  ProgrammableOracle oracle;
  for (int t = 0; t < 10; ++t) {
    const Bytes msg = test::random_bytes(env.rng, 16);
    const auto result = simulate_ring_sign_query(env.params, oracle, msg, *env.ring, env.rng);
    EXPECT_LT(result.simulated_signer, n);
    EXPECT_TRUE(result.signature.commitments_well_formed());
    EXPECT_EQ(result.signature.commitments.size(), n);
    EXPECT_TRUE(verify_with_oracle(env.params, msg, *env.ring, result.signature, oracle));
    EXPECT_FALSE(verify(env.params, msg, *env.ring, result.signature));
  }
  EXPECT_EQ(oracle.programmed_points(), 10u);
}

INSTANTIATE_TEST_SUITE_P(Sizes, Simulate, ::testing::Values(1, 2, 3, 5));

TEST(Simulate, FreshOracleRejects) {
  Env env(3, 20);
  ProgrammableOracle programmed, fresh;
  const Bytes msg = to_bytes("m");
  const auto result = simulate_ring_sign_query(env.params, programmed, msg, *env.ring, env.rng);
  EXPECT_FALSE(verify_with_oracle(env.params, msg, *env.ring, result.signature, fresh));
}

// Replaying the same random stream against the same oracle reproduces the
// same y_s, whose oracle point is already set: the simulation must go back
// and draw a new (h_s, V).
TEST(Simulate, CollisionForcesRetry) {
  Env env(3, 30);
  ProgrammableOracle oracle;
  const Bytes msg = to_bytes("replay");
  SeededRng first(77), second(77);
  const auto a = simulate_ring_sign_query(env.params, oracle, msg, *env.ring, first);
  EXPECT_EQ(a.retries, 0u);
  const auto b = simulate_ring_sign_query(env.params, oracle, msg, *env.ring, second);
  EXPECT_EQ(b.retries, 1u);
  EXPECT_EQ(a.simulated_signer, b.simulated_signer);
  EXPECT_FALSE(a.signature.response == b.signature.response);
  EXPECT_TRUE(verify_with_oracle(env.params, msg, *env.ring, a.signature, oracle));
  EXPECT_TRUE(verify_with_oracle(env.params, msg, *env.ring, b.signature, oracle));
}

TEST(Simulate, ExhaustedBudgetIsOracleCollision) {
  Env env(2, 40);
  ProgrammableOracle oracle;
  const Bytes msg = to_bytes("x");
  SeededRng first(5), second(5);
  simulate_ring_sign_query(env.params, oracle, msg, *env.ring, first);
  try {
    simulate_ring_sign_query(env.params, oracle, msg, *env.ring, second, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleCollision);
  }
}

TEST(Simulate, ReportJson) {
  Env env(2, 50);
  ProgrammableOracle oracle;
  const auto r = simulate_ring_sign_query(env.params, oracle, to_bytes("m"), *env.ring, env.rng);
  const auto doc = to_json(r);
  EXPECT_EQ(doc["ring_size"], 2);
  EXPECT_EQ(doc["retries"], 0);
  EXPECT_TRUE(doc["signature"].is_string());
}

}  // namespace
}  // namespace clring::simulation
