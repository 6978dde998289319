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

#include <algorithm>

#include "clring/codec.hpp"
#include "clring/op_counter.hpp"
#include "clring/testing.hpp"
#include "fixtures.hpp"

namespace clring {
namespace {

using test::make_world;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

TEST(Setup, OnlyDefaultSecurityLevel) {
  SeededRng rng(1);
  EXPECT_EQ(code_of([&] { setup(80, rng); }), ErrorCode::kUnsupportedParameter);
  const auto [params, master] = setup(128, rng);
  EXPECT_FALSE(master.kappa.is_zero());
  EXPECT_EQ(params.master_public, g1_mul(master.kappa, params.generator));
  EXPECT_EQ(params.gt_generator, pair(params.generator, params.generator));
  EXPECT_TRUE(params.master_public.has_image());
}

TEST(Setup, SeededIsDeterministic) {
  SeededRng a(3), b(3);
  EXPECT_EQ(codec::encode(setup(128, a).first), codec::encode(setup(128, b).first));
}

TEST(Keys, PartialKeyValidity) {
  SeededRng rng(2);
  auto w = make_world(2, rng);
  const auto d0 = extract_partial_private_key(w.params, w.master, w.ids[0]);
  EXPECT_TRUE(partial_key_is_valid(w.params, w.ids[0], d0));
  EXPECT_FALSE(partial_key_is_valid(w.params, w.ids[1], d0));
  EXPECT_EQ(d0.point, g1_mul(w.master.kappa, hash_to_g1(kIdentityHashTag, w.ids[0].bytes())));
  EXPECT_EQ(code_of([&] { set_public_key(w.params, SecretValue{Scalar::zero()}); }),
            ErrorCode::kZeroScalar);
  EXPECT_EQ(code_of([] { Identity(""); }), ErrorCode::kPrecondition);
}

TEST(RingInvariants, RejectsBadRings) {
  SeededRng rng(4);
  auto w = make_world(3, rng);
  EXPECT_EQ(code_of([&] { Ring({}, {}); }), ErrorCode::kRingInvariant);
  EXPECT_EQ(code_of([&] { Ring(w.ids, {w.keys[0], w.keys[1]}); }), ErrorCode::kRingInvariant);
  EXPECT_EQ(code_of([&] { Ring({w.ids[0], w.ids[0]}, {w.keys[0], w.keys[1]}); }),
            ErrorCode::kRingInvariant);
  EXPECT_EQ(code_of([&] { Ring({w.ids[0]}, {PublicKey{G1Element::identity()}}); }),
            ErrorCode::kRingInvariant);
  const PublicKey hashed{hash_to_g1(kIdentityHashTag, as_bytes("no image"))};
  EXPECT_EQ(code_of([&] { Ring({w.ids[0]}, {hashed}); }), ErrorCode::kRingInvariant);
  EXPECT_TRUE(Ring({w.ids[0]}, {w.keys[0]}).anonymity_is_vacuous());
  EXPECT_FALSE(w.ring().anonymity_is_vacuous());
}

class Completeness : public ::testing::TestWithParam<size_t> {};

TEST_P(Completeness, EverySignerVerifies) {
  const size_t n = GetParam();
  SeededRng rng(100 + n);
  auto w = make_world(n, rng);
  const Ring ring = w.ring();
  for (size_t s = 0; s < n; ++s) {
    const Bytes msg = test::random_bytes(rng, 1 + s);
    const RingSignature sig = ring_sign(w.params, msg, ring, s, w.secrets[s], rng);
    EXPECT_TRUE(sig.commitments_well_formed());
    EXPECT_TRUE(verify(w.params, msg, ring, sig));
    EXPECT_TRUE(verify(w.params, msg, ring, sig, ExecutionPolicy::kSerial));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, Completeness, ::testing::Values(1, 2, 3, 5, 8));

TEST(Sign, EmptyMessageIsSignable) {
  SeededRng rng(5);
  auto w = make_world(2, rng);
  const RingSignature sig = ring_sign(w.params, {}, w.ring(), 1, w.secrets[1], rng);
  EXPECT_TRUE(verify(w.params, {}, w.ring(), sig));
}

TEST(Sign, Preconditions) {
  SeededRng rng(6);
  auto w = make_world(3, rng);
  const Ring ring = w.ring();
  const Bytes msg = to_bytes("m");
  EXPECT_EQ(code_of([&] { ring_sign(w.params, msg, ring, 3, w.secrets[0], rng); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([&] { ring_sign(w.params, msg, ring, 1, w.secrets[0], rng); }),
            ErrorCode::kKeyMismatch);
  // Secret of one member combined with the partial key of another.
  const PrivateKey mixed = set_private_key(w.secrets[0].secret, w.secrets[1].partial);
  EXPECT_EQ(code_of([&] { ring_sign(w.params, msg, ring, 0, mixed, rng); }),
            ErrorCode::kKeyMismatch);
  EXPECT_EQ(code_of([&] { ring_sign(w.params, msg, ring, 1, mixed, rng); }),
            ErrorCode::kKeyMismatch);
}

TEST(Sign, DeterministicUnderSeedAndPolicyIndependent) {
  SeededRng setup_rng(7);
  auto w = make_world(4, setup_rng);
  const Bytes msg = to_bytes("same");
  SeededRng a(99), b(99);
  const RingSignature serial =
      ring_sign(w.params, msg, w.ring(), 2, w.secrets[2], a, ExecutionPolicy::kSerial);
  const RingSignature parallel =
      ring_sign(w.params, msg, w.ring(), 2, w.secrets[2], b, ExecutionPolicy::kParallel);
  EXPECT_EQ(codec::encode(serial), codec::encode(parallel));
}

TEST(Sign, RedoPredicate) {
  const GTElement g = pair(G1Element::generator(), G1Element::generator());
  const GTElement y1 = gt_exp(g, Scalar::from_u64(2));
  const GTElement y2 = gt_exp(g, Scalar::from_u64(3));
  std::vector<GTElement> ys = {y1, GTElement::one(), y2};
  EXPECT_TRUE(testing::commitment_needs_redo(GTElement::one(), ys, 1));
  EXPECT_TRUE(testing::commitment_needs_redo(y1, ys, 1));
  EXPECT_TRUE(testing::commitment_needs_redo(y2, ys, 1));
  EXPECT_FALSE(testing::commitment_needs_redo(gt_exp(g, Scalar::from_u64(4)), ys, 1));
  // The signer's own slot is not a collision.
  EXPECT_FALSE(testing::commitment_needs_redo(y1, ys, 0));
}

class OpCounts : public ::testing::TestWithParam<size_t> {};

TEST_P(OpCounts, MatchReferenceTable) {
  const size_t n = GetParam();
  SeededRng rng(200 + n);
  auto w = make_world(n, rng);
  const Ring ring = w.ring();
  const Bytes msg = to_bytes("count me");
  for (auto policy : {ExecutionPolicy::kSerial, ExecutionPolicy::kParallel}) {
    counter_reset();
    const RingSignature sig = ring_sign(w.params, msg, ring, n - 1, w.secrets[n - 1], rng, policy);
    const OpCounter sign = counter_report();
    counter_reset();
    ASSERT_TRUE(verify(w.params, msg, ring, sig, policy));
    const OpCounter ver = counter_report();
    EXPECT_EQ(sign, (OpCounter{2, 2 * n + 3, n, n + 1}));
    EXPECT_EQ(ver, (OpCounter{3, 2 * n, 0, n + 1}));
    EXPECT_EQ(sign + ver, (OpCounter{5, 4 * n + 3, n, 2 * n + 2}));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, OpCounts, ::testing::Values(1, 2, 5, 10));

class Tamper : public ::testing::Test {
 protected:
  void SetUp() override {
    world_ = make_world(4, rng_);
    msg_ = to_bytes("tamper target");
    sig_ = ring_sign(world_.params, msg_, world_.ring(), 1, world_.secrets[1], rng_);
    ASSERT_TRUE(verify(world_.params, msg_, world_.ring(), sig_));
  }
  SeededRng rng_{300};
  test::World world_;
  Bytes msg_;
  RingSignature sig_;
};

TEST_F(Tamper, FlippedMessageBit) {
  for (size_t bit = 0; bit < msg_.size() * 8; bit += 13) {
    Bytes m = msg_;
    m[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    EXPECT_FALSE(verify(world_.params, m, world_.ring(), sig_));
  }
}

TEST_F(Tamper, SwappedRingOrder) {
  auto ids = world_.ids;
  auto keys = world_.keys;
  std::swap(ids[0], ids[2]);
  std::swap(keys[0], keys[2]);
  EXPECT_FALSE(verify(world_.params, msg_, Ring(ids, keys), sig_));
}

TEST_F(Tamper, SwappedKeysOnly) {
  auto keys = world_.keys;
  std::swap(keys[0], keys[1]);
  EXPECT_FALSE(verify(world_.params, msg_, Ring(world_.ids, keys), sig_));
}

TEST_F(Tamper, AddedOrRemovedMember) {
  auto ids = world_.ids;
  auto keys = world_.keys;
  ids.emplace_back("extra");
  keys.push_back(set_public_key(world_.params, set_secret_value(world_.params, rng_)));
  EXPECT_EQ(code_of([&] { verify(world_.params, msg_, Ring(ids, keys), sig_); }),
            ErrorCode::kLengthMismatch);
  RingSignature grown = sig_;
  grown.commitments.push_back(gt_exp(world_.params.gt_generator, Scalar::from_u64(77)));
  EXPECT_FALSE(verify(world_.params, msg_, Ring(ids, keys), grown));

  ids.resize(3, ids[0]);
  keys.resize(3);
  RingSignature shrunk = sig_;
  shrunk.commitments.pop_back();
  EXPECT_FALSE(verify(world_.params, msg_, Ring(ids, keys), shrunk));
}

TEST_F(Tamper, PerturbedResponse) {
  RingSignature bad = sig_;
  bad.response = bad.response + G1Element::generator();
  EXPECT_FALSE(verify(world_.params, msg_, world_.ring(), bad));
  bad.response = -sig_.response;
  EXPECT_FALSE(verify(world_.params, msg_, world_.ring(), bad));
}

TEST_F(Tamper, PerturbedCommitment) {
  for (size_t i = 0; i < sig_.commitments.size(); ++i) {
    RingSignature bad = sig_;
    bad.commitments[i] *= world_.params.gt_generator;
    EXPECT_FALSE(verify(world_.params, msg_, world_.ring(), bad)) << "slot " << i;
  }
}

TEST_F(Tamper, ReplayedAgainstOtherRing) {
  SeededRng other_rng(301);
  auto other = make_world(4, other_rng, "other-");
  // Same params, different membership.
  std::vector<PublicKey> keys;
  for (size_t i = 0; i < 4; ++i) {
    keys.push_back(set_public_key(world_.params, set_secret_value(world_.params, other_rng)));
  }
  EXPECT_FALSE(verify(world_.params, msg_, Ring(other.ids, keys), sig_));
  EXPECT_FALSE(verify(world_.params, msg_, Ring(world_.ids, keys), sig_));
}

TEST_F(Tamper, OtherParams) {
  SeededRng other_rng(302);
  const auto [params, master] = setup(128, other_rng);
  EXPECT_FALSE(verify(params, msg_, world_.ring(), sig_));
}

class Anonymity : public ::testing::TestWithParam<size_t> {};

TEST_P(Anonymity, IdentityHoldsForEveryMember) {
  const size_t n = GetParam();
  SeededRng rng(400 + n);
  auto w = make_world(n, rng);
  const Ring ring = w.ring();
  for (size_t s = 0; s < n; ++s) {
    const Bytes msg = test::random_bytes(rng, 8);
    const RingSignature sig = ring_sign(w.params, msg, ring, s, w.secrets[s], rng);
    for (size_t j = 0; j < n; ++j) {
      EXPECT_TRUE(anonymity_identity_check(w.params, msg, ring, sig, j)) << s << "," << j;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, Anonymity, ::testing::Values(2, 3, 6));

TEST(AnonymityCheck, Errors) {
  SeededRng rng(500);
  auto w = make_world(2, rng);
  const Bytes msg = to_bytes("x");
  const RingSignature sig = ring_sign(w.params, msg, w.ring(), 0, w.secrets[0], rng);
  EXPECT_EQ(code_of([&] { anonymity_identity_check(w.params, msg, w.ring(), sig, 2); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([&] { anonymity_identity_check(w.params, to_bytes("y"), w.ring(), sig, 0); }),
            ErrorCode::kInvalidSignature);
}

TEST(Context, BindsEveryField) {
  SeededRng rng(600);
  auto w = make_world(3, rng);
  const Bytes base = encode_context(to_bytes("m"), w.ring());
  EXPECT_NE(base, encode_context(to_bytes("n"), w.ring()));
  auto keys = w.keys;
  std::swap(keys[1], keys[2]);
  EXPECT_NE(base, encode_context(to_bytes("m"), Ring(w.ids, keys)));
  // Length prefixes keep identity boundaries unambiguous.
  const Ring a({Identity("ab"), Identity("c")}, {w.keys[0], w.keys[1]});
  const Ring b({Identity("a"), Identity("bc")}, {w.keys[0], w.keys[1]});
  EXPECT_NE(encode_context({}, a), encode_context({}, b));
}

TEST(Unchecked, MixedKeysFailVerification) {
  SeededRng rng(700);
  auto w = make_world(3, rng);
  const Bytes msg = to_bytes("mixed");
  const PrivateKey mixed = set_private_key(w.secrets[0].secret, w.secrets[2].partial);
  for (size_t s : {0u, 2u}) {
    const RingSignature sig =
        testing::ring_sign_unchecked(w.params, msg, w.ring(), s, mixed, rng);
    EXPECT_FALSE(verify(w.params, msg, w.ring(), sig));
  }
  const RingSignature honest =
      testing::ring_sign_unchecked(w.params, msg, w.ring(), 1, w.secrets[1], rng);
  EXPECT_TRUE(verify(w.params, msg, w.ring(), honest));
}

}  // namespace
}  // namespace clring
