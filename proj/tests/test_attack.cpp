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

#include "clring/attack.hpp"
#include "clring/codec.hpp"
#include "fixtures.hpp"

namespace clring::attack {
namespace {

class Components : public ::testing::TestWithParam<size_t> {};

TEST_P(Components, PkInstanceComplete) {
  const size_t n = GetParam();
  SeededRng rng(10 + n);
  const auto pk = pk_ring_instance();
  std::vector<PkRingScheme::KeyPair> pairs;
  std::vector<PublicKey> keys;
  for (size_t i = 0; i < n; ++i) {
    pairs.push_back(pk->gen_pk(rng));
    keys.push_back(pairs.back().public_key);
  }
  for (size_t s = 0; s < n; ++s) {
    const Bytes msg = test::random_bytes(rng, 10);
    const Bytes sig = pk->ring_sign_pk(pairs[s].secret, s, keys, msg, rng);
    EXPECT_TRUE(pk->ver_pk(sig, keys, msg));
    Bytes other = msg;
    other[0] ^= 1;
    EXPECT_FALSE(pk->ver_pk(sig, keys, other));
    const Bytes wrong = pk->ring_sign_pk(pairs[(s + 1) % n].secret, s, keys, msg, rng);
    EXPECT_EQ(pk->ver_pk(wrong, keys, msg), n == 1);
  }
}

TEST_P(Components, IdInstanceComplete) {
  const size_t n = GetParam();
  SeededRng rng(20 + n);
  const auto id = id_ring_instance();
  const auto [params, master] = id->gen_id(rng);
  std::vector<Identity> ids;
  for (size_t i = 0; i < n; ++i) ids.emplace_back("id-" + std::to_string(i));
  for (size_t s = 0; s < n; ++s) {
    const Bytes msg = test::random_bytes(rng, 10);
    const Bytes sig =
        id->ring_sign_id(params, id->kgen_id(params, master, ids[s]), s, ids, msg, rng);
    EXPECT_TRUE(id->ver_id(params, sig, ids, msg));

    Bytes tampered = sig;
    tampered[tampered.size() - 5] ^= 1;
    EXPECT_FALSE(id->ver_id(params, tampered, ids, msg));
    Bytes other = msg;
    other[3] ^= 0x80;
    EXPECT_FALSE(id->ver_id(params, sig, ids, other));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, Components, ::testing::Values(1, 2, 4));

TEST(Components, RejectGarbageAndSizeMismatch) {
  SeededRng rng(30);
  const auto pk = pk_ring_instance();
  const auto kp = pk->gen_pk(rng);
  const std::vector<PublicKey> keys = {kp.public_key, pk->gen_pk(rng).public_key};
  EXPECT_FALSE(pk->ver_pk(to_bytes("garbage"), keys, to_bytes("m")));
  const Bytes sig = pk->ring_sign_pk(kp.secret, 0, keys, to_bytes("m"), rng);
  EXPECT_FALSE(pk->ver_pk(sig, std::vector<PublicKey>{keys[0]}, to_bytes("m")));
  EXPECT_THROW(pk->ring_sign_pk(kp.secret, 2, keys, to_bytes("m"), rng), Error);
}

class Generic : public ::testing::Test {
 protected:
  void SetUp() override {
    auto [composite, master] = GenericClRing::setup(rng_);
    composite_.emplace(composite);
    for (size_t i = 0; i < 3; ++i) {
      Identity id("g-" + std::to_string(i));
      const auto kp = composite_->pk_scheme().gen_pk(rng_);
      keys_.push_back(set_private_key(
          kp.secret, composite_->id_scheme().kgen_id(composite_->params(), master, id)));
      ids_.push_back(id);
      pubs_.push_back(kp.public_key);
    }
  }
  Ring ring() const { return Ring(ids_, pubs_); }

  SeededRng rng_{40};
  std::optional<GenericClRing> composite_;
  std::vector<Identity> ids_;
  std::vector<PublicKey> pubs_;
  std::vector<PrivateKey> keys_;
};

TEST_F(Generic, HonestSignatureVerifies) {
  for (size_t s = 0; s < 3; ++s) {
    const Bytes sig = composite_->ring_sign(to_bytes("hello"), ring(), s, keys_[s], rng_);
    EXPECT_TRUE(composite_->verify(to_bytes("hello"), ring(), sig));
  }
}

TEST_F(Generic, TamperedHalvesFail) {
  const Bytes msg = to_bytes("hello");
  const Bytes sig = composite_->ring_sign(msg, ring(), 1, keys_[1], rng_);
  auto [pk_sig, id_sig] = GenericClRing::split(sig);

  Bytes bad_pk = pk_sig;
  bad_pk[bad_pk.size() - 3] ^= 1;
  EXPECT_FALSE(composite_->verify(msg, ring(), GenericClRing::join(bad_pk, id_sig)));
  Bytes bad_id = id_sig;
  bad_id[bad_id.size() - 3] ^= 1;
  EXPECT_FALSE(composite_->verify(msg, ring(), GenericClRing::join(pk_sig, bad_id)));

  // sigma_PK lifted from a signature on another message.
  const Bytes other = composite_->ring_sign(to_bytes("other"), ring(), 1, keys_[1], rng_);
  EXPECT_FALSE(composite_->verify(
      msg, ring(), GenericClRing::join(GenericClRing::split(other).first, id_sig)));
}

TEST_F(Generic, WrongIdentityListFails) {
  const Bytes msg = to_bytes("hello");
  const Bytes sig = composite_->ring_sign(msg, ring(), 0, keys_[0], rng_);
  auto ids = ids_;
  ids[2] = Identity("somebody-else");
  EXPECT_FALSE(composite_->verify(msg, Ring(ids, pubs_), sig));
  // The ID half alone over a different list.
  const auto [pk_sig, id_sig] = GenericClRing::split(sig);
  const Bytes m2 = composite_->id_message(composite_->pk_message(msg, ring()), pk_sig);
  EXPECT_TRUE(composite_->id_scheme().ver_id(composite_->params(), id_sig, ids_, m2));
  EXPECT_FALSE(composite_->id_scheme().ver_id(composite_->params(), id_sig, ids, m2));
}

TEST_F(Generic, BrokenFramingIsStructural) {
  EXPECT_THROW(composite_->verify(to_bytes("m"), ring(), Bytes{0, 0, 0}), Error);
  Bytes extra = GenericClRing::join(to_bytes("a"), to_bytes("b"));
  extra.push_back(0);
  EXPECT_THROW(GenericClRing::split(extra), Error);
  const auto [a, b] = GenericClRing::split(GenericClRing::join(to_bytes("a"), to_bytes("bc")));
  EXPECT_EQ(a, to_bytes("a"));
  EXPECT_EQ(b, to_bytes("bc"));
}

struct AttackEnv {
  explicit AttackEnv(uint64_t seed) : rng(seed) {
    auto [c, master] = GenericClRing::setup(rng);
    composite.emplace(c);
    challenger.emplace(c.params(), master, rng);
  }
  SeededRng rng;
  std::optional<GenericClRing> composite;
  std::optional<Challenger> challenger;
};

void expect_clean_knowledge(const AttackResult& r) {
  EXPECT_FALSE(r.knowledge.holds_complete_private_key());
  EXPECT_EQ(r.knowledge.signing_oracle_queries, 0u);
  ASSERT_EQ(r.knowledge.items.size(), 2u);
  EXPECT_EQ(r.knowledge.items[0].kind, KnowledgeItem::Kind::kSecretValue);
  EXPECT_EQ(r.knowledge.items[0].slot, r.replaced_slot);
  EXPECT_EQ(r.knowledge.items[1].kind, KnowledgeItem::Kind::kPartialKey);
  EXPECT_EQ(r.knowledge.items[1].slot, r.partial_key_slot);
}

TEST(TypeOneAttack, SmallestRing) {
  AttackEnv env(50);
  const auto r = type1_attack(*env.composite, *env.challenger, 2, 0, 1, env.rng);
  EXPECT_TRUE(r.verified);
  ASSERT_TRUE(r.forged_ring.has_value());
  EXPECT_TRUE(env.composite->verify(r.forged_message, *r.forged_ring, r.forged_signature));
  expect_clean_knowledge(r);
  EXPECT_EQ(env.challenger->replacements(), 1u);
  EXPECT_EQ(env.challenger->partial_key_queries(), 1u);
  EXPECT_EQ(env.challenger->sign_queries(), 0u);
}

TEST(TypeOneAttack, AllPairsOfFive) {
  AttackEnv env(51);
  int successes = 0;
  for (size_t i = 0; i < 5; ++i) {
    for (size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const auto r = type1_attack(*env.composite, *env.challenger, 5, i, j, env.rng);
      EXPECT_TRUE(r.verified) << i << "," << j;
      expect_clean_knowledge(r);
      successes += r.verified;
    }
  }
  EXPECT_EQ(successes, 20);
}

TEST(TypeOneAttack, Preconditions) {
  AttackEnv env(52);
  auto code = [&](size_t n, size_t i, size_t j) {
    try {
      type1_attack(*env.composite, *env.challenger, n, i, j, env.rng);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code(3, 1, 1), ErrorCode::kPrecondition);
  EXPECT_EQ(code(1, 0, 0), ErrorCode::kPrecondition);
  EXPECT_EQ(code(3, 0, 3), ErrorCode::kPrecondition);
}

TEST(TypeOneAttack, ConcreteSchemeResists) {
  SeededRng rng(53);
  const auto [params, master] = setup(128, rng);
  Challenger challenger(params, master, rng);
  for (size_t n : {2u, 3u, 5u}) {
    const auto r = type1_attack_concrete(challenger, n, 0, n - 1, rng);
    EXPECT_FALSE(r.verified);
    expect_clean_knowledge(r);
    ASSERT_TRUE(r.forged_ring.has_value());
    const auto sig = codec::decode<RingSignature>(r.forged_signature);
    EXPECT_FALSE(verify(params, r.forged_message, *r.forged_ring, sig));
  }
}

TEST(TypeOneAttack, ReportJson) {
  AttackEnv env(54);
  const auto r = type1_attack(*env.composite, *env.challenger, 3, 2, 0, env.rng);
  const auto doc = to_json(r);
  EXPECT_EQ(doc["target"], "generic");
  EXPECT_EQ(doc["verified"], true);
  EXPECT_EQ(doc["signing_oracle_queries"], 0);
  EXPECT_EQ(doc["complete_private_key_used"], false);
  EXPECT_EQ(doc["adversary_knowledge"].size(), 2u);
  EXPECT_GE(doc["steps"].size(), 6u);
}

TEST(Knowledge, CompleteKeyDetection) {
  AdversaryKnowledge k;
  k.items.push_back({KnowledgeItem::Kind::kSecretValue, 1, "a", ""});
  k.items.push_back({KnowledgeItem::Kind::kPartialKey, 2, "b", ""});
  EXPECT_FALSE(k.holds_complete_private_key());
  k.items.push_back({KnowledgeItem::Kind::kPartialKey, 1, "a", ""});
  EXPECT_TRUE(k.holds_complete_private_key());
}

TEST(ChallengerOracles, SignQueryUsesRegisteredKey) {
  SeededRng rng(55);
  const auto [params, master] = setup(128, rng);
  Challenger challenger(params, master, rng);
  const std::vector<Identity> ids = {Identity("a"), Identity("b")};
  std::vector<PublicKey> keys;
  for (const auto& id : ids) keys.push_back(challenger.public_key_query(id));
  const Ring ring(ids, keys);
  const auto sig = challenger.sign_query(to_bytes("q"), ring, 1);
  EXPECT_TRUE(verify(params, to_bytes("q"), ring, sig));
  EXPECT_EQ(challenger.sign_queries(), 1u);
  EXPECT_EQ(challenger.public_key_queries(), 2u);
  EXPECT_TRUE(partial_key_is_valid(params, ids[0], challenger.partial_key_query(ids[0])));
}

}  // namespace
}  // namespace clring::attack
