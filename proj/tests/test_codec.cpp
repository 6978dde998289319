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

#include "clring/codec.hpp"
#include "fixtures.hpp"

namespace clring {
namespace {

using codec::Kind;

ErrorCode decode_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "decode accepted the input";
  return ErrorCode::kIo;
}

template <typename T>
void expect_round_trip(const T& object) {
  const Bytes enc = codec::encode(object);
  const T back = codec::decode<T>(enc);
  EXPECT_EQ(codec::encode(back), enc);
}

constexpr int kInstances = 100;

TEST(RoundTrip, Params) {
  SeededRng rng(1);
  for (int i = 0; i < kInstances; ++i) {
    const auto [params, master] = setup(128, rng);
    const auto back = codec::decode<SystemParams>(codec::encode(params));
    EXPECT_EQ(back.generator, params.generator);
    EXPECT_EQ(back.master_public, params.master_public);
    EXPECT_EQ(back.gt_generator, params.gt_generator);
    EXPECT_TRUE(back.master_public.has_image());
    expect_round_trip(params);
  }
}

TEST(RoundTrip, KeysOfEveryKind) {
  SeededRng rng(2);
  const auto [params, master] = setup(128, rng);
  for (int i = 0; i < kInstances; ++i) {
    const Identity id("user-" + std::to_string(i));
    const MasterKey mk{random_scalar(rng)};
    EXPECT_EQ(codec::decode<MasterKey>(codec::encode(mk)).kappa, mk.kappa);
    const SecretValue x = set_secret_value(params, rng);
    EXPECT_EQ(codec::decode<SecretValue>(codec::encode(x)).value, x.value);
    const PartialPrivateKey d = extract_partial_private_key(params, master, id);
    EXPECT_EQ(codec::decode<PartialPrivateKey>(codec::encode(d)).point, d.point);
    const PrivateKey sk = set_private_key(x, d);
    const auto sk_back = codec::decode<PrivateKey>(codec::encode(sk));
    EXPECT_EQ(sk_back.secret.value, x.value);
    EXPECT_EQ(sk_back.partial.point, d.point);
    const PublicKey pk = set_public_key(params, x);
    const auto pk_back = codec::decode<PublicKey>(codec::encode(pk));
    EXPECT_EQ(pk_back.point, pk.point);
    EXPECT_TRUE(pk_back.point.has_image());
    expect_round_trip(mk);
    expect_round_trip(x);
    expect_round_trip(d);
    expect_round_trip(sk);
    expect_round_trip(pk);
  }
}

TEST(RoundTrip, RingsAndSignatures) {
  SeededRng rng(3);
  const auto w = test::make_world(5, rng);
  for (int i = 0; i < kInstances; ++i) {
    const size_t n = 1 + static_cast<size_t>(i % 5);
    const Ring ring(std::vector<Identity>(w.ids.begin(), w.ids.begin() + n),
                    std::vector<PublicKey>(w.keys.begin(), w.keys.begin() + n));
    EXPECT_EQ(codec::decode<Ring>(codec::encode(ring)), ring);
    EXPECT_EQ(codec::ring_from_json(codec::ring_to_json(ring)), ring);
    expect_round_trip(ring);

    const size_t s = static_cast<size_t>(i) % n;
    const Bytes msg = test::random_bytes(rng, 12);
    const RingSignature sig = ring_sign(w.params, msg, ring, s, w.secrets[s], rng);
    const RingSignature back = codec::decode<RingSignature>(codec::encode(sig));
    EXPECT_EQ(back.commitments, sig.commitments);
    EXPECT_EQ(back.response, sig.response);
    EXPECT_TRUE(verify(w.params, msg, ring, back));
    expect_round_trip(sig);
  }
}

class Malformed : public ::testing::Test {
 protected:
  void SetUp() override {
    world_ = test::make_world(3, rng_);
    sig_bytes_ = codec::encode(
        ring_sign(world_.params, to_bytes("m"), world_.ring(), 0, world_.secrets[0], rng_));
  }
  SeededRng rng_{4};
  test::World world_;
  Bytes sig_bytes_;
};

TEST_F(Malformed, Truncated) {
  for (size_t len : {size_t{0}, size_t{3}, size_t{7}, size_t{8}, size_t{12}, sig_bytes_.size() - 1}) {
    const Bytes cut(sig_bytes_.begin(), sig_bytes_.begin() + static_cast<long>(len));
    EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(cut); }),
              ErrorCode::kMalformedEnvelope)
        << len;
  }
}

TEST_F(Malformed, TrailingBytes) {
  Bytes longer = sig_bytes_;
  longer.push_back(0);
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(longer); }),
            ErrorCode::kMalformedEnvelope);
}

TEST_F(Malformed, HeaderFields) {
  Bytes b = sig_bytes_;
  b[0] = 'X';
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(b); }), ErrorCode::kMalformedEnvelope);
  b = sig_bytes_;
  b[4] = 2;
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(b); }), ErrorCode::kMalformedEnvelope);
  b = sig_bytes_;
  b[5] = 9;
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(b); }), ErrorCode::kMalformedEnvelope);
  b[5] = 0;
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(b); }), ErrorCode::kMalformedEnvelope);
  b = sig_bytes_;
  b[7] = 2;
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(b); }), ErrorCode::kMalformedEnvelope);
}

TEST_F(Malformed, WrongKind) {
  EXPECT_EQ(decode_error([&] { codec::decode<Ring>(sig_bytes_); }), ErrorCode::kWrongKind);
  const Bytes secret = codec::encode(world_.secrets[0].secret);
  EXPECT_EQ(decode_error([&] { codec::decode<MasterKey>(secret); }), ErrorCode::kWrongKind);
  EXPECT_EQ(decode_error([&] { codec::decode<PublicKey>(secret); }), ErrorCode::kWrongKind);
}

TEST_F(Malformed, NonCanonicalScalar) {
  Bytes payload(group_order_bytes().begin(), group_order_bytes().end());
  const Bytes env = codec::encode_envelope({Kind::kSecretValue, CurveId::kBls12_381, payload});
  EXPECT_EQ(decode_error([&] { codec::decode<SecretValue>(env); }),
            ErrorCode::kNonCanonicalEncoding);
  const Bytes zero = codec::encode_envelope({Kind::kMasterKey, CurveId::kBls12_381, Bytes(32)});
  EXPECT_EQ(decode_error([&] { codec::decode<MasterKey>(zero); }), ErrorCode::kZeroScalar);
}

TEST_F(Malformed, PublicKeyImageMismatch) {
  Bytes pk = codec::encode(world_.keys[0]);
  const Bytes other = codec::encode(world_.keys[1]);
  std::copy(other.begin() + codec::kHeaderSize + 48, other.end(),
            pk.begin() + codec::kHeaderSize + 48);
  EXPECT_EQ(decode_error([&] { codec::decode<PublicKey>(pk); }), ErrorCode::kInvalidElement);
}

TEST_F(Malformed, SignatureWithOneOrDuplicateCommitment) {
  RingSignature sig = codec::decode<RingSignature>(sig_bytes_);
  sig.commitments[1] = sig.commitments[0];
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(codec::encode(sig)); }),
            ErrorCode::kInvalidElement);
  sig.commitments[1] = GTElement::one();
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(codec::encode(sig)); }),
            ErrorCode::kInvalidElement);
}

TEST_F(Malformed, HugeCountsAreBounded) {
  Bytes b = sig_bytes_;
  b[codec::kHeaderSize] = 0xff;
  EXPECT_EQ(decode_error([&] { codec::decode<RingSignature>(b); }), ErrorCode::kMalformedEnvelope);
  Bytes r = codec::encode(world_.ring());
  r[codec::kHeaderSize] = 0xff;
  EXPECT_EQ(decode_error([&] { codec::decode<Ring>(r); }), ErrorCode::kMalformedEnvelope);
}

TEST_F(Malformed, DuplicateRingMembers) {
  const Bytes single = codec::encode(Ring({world_.ids[0]}, {world_.keys[0]}));
  Bytes payload;
  append_u32_be(payload, 2);
  append_field(payload, world_.ids[0].bytes());
  append_field(payload, world_.ids[0].bytes());
  append(payload, world_.keys[0].point.to_bytes_with_image());
  append(payload, world_.keys[1].point.to_bytes_with_image());
  const Bytes env = codec::encode_envelope({Kind::kRing, CurveId::kBls12_381, payload});
  EXPECT_EQ(decode_error([&] { codec::decode<Ring>(env); }), ErrorCode::kRingInvariant);
  EXPECT_NO_THROW(codec::decode<Ring>(single));
}

TEST(Hex, StrictLowercase) {
  const Bytes b = {0x00, 0xab, 0xff};
  EXPECT_EQ(codec::to_hex(b), "00abff");
  EXPECT_EQ(codec::from_hex("00abff"), b);
  EXPECT_EQ(decode_error([] { codec::from_hex("zz"); }), ErrorCode::kInvalidCharacter);
  EXPECT_EQ(decode_error([] { codec::from_hex("00ABFF"); }), ErrorCode::kInvalidCharacter);
  EXPECT_EQ(decode_error([] { codec::from_hex("abc"); }), ErrorCode::kInvalidCharacter);
  EXPECT_EQ(decode_error([] { codec::from_hex("0x00"); }), ErrorCode::kInvalidCharacter);
  EXPECT_TRUE(codec::from_hex("").empty());
  SeededRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Bytes r = test::random_bytes(rng, static_cast<size_t>(i));
    EXPECT_EQ(codec::from_hex(codec::to_hex(r)), r);
  }
}

TEST(Hex, PointLengthFixed) {
  SeededRng rng(6);
  for (int i = 0; i < 10; ++i) {
    const auto p = g1_mul(random_scalar(rng), G1Element::generator()).to_bytes();
    EXPECT_EQ(codec::to_hex(p).size(), 2 * 48u);
  }
}

TEST(RingJson, TextAndHexIdentities) {
  SeededRng rng(7);
  const auto w = test::make_world(2, rng);
  const Ring ring({Identity("alice"), Identity(Bytes{0x00, 0xff})}, w.keys);
  const auto doc = codec::ring_to_json(ring);
  EXPECT_EQ(doc["members"][0]["identity"], "alice");
  EXPECT_EQ(doc["members"][1]["identity_hex"], "00ff");
  EXPECT_EQ(codec::ring_from_json(doc), ring);
  EXPECT_EQ(decode_error([] { codec::ring_from_json(nlohmann::json::object()); }),
            ErrorCode::kMalformedEnvelope);
  auto bad = doc;
  bad["members"][0]["public_key"] = "00";
  EXPECT_THROW(codec::ring_from_json(bad), Error);
}

TEST(Fuzz, RandomBytesAlwaysRejected) {
  SeededRng rng(8);
  for (int i = 0; i < 5000; ++i) {
    const Bytes b = test::random_bytes(rng, static_cast<size_t>(i % 700));
    EXPECT_THROW(codec::decode<RingSignature>(b), Error);
    EXPECT_THROW(codec::decode<Ring>(b), Error);
    EXPECT_THROW(codec::decode<SecretValue>(b), Error);
  }
}

// Valid headers with random payloads: either a typed error or a value that
// re-encodes to exactly the input.
TEST(Fuzz, ValidHeaderRandomPayload) {
  SeededRng rng(9);
  const size_t sizes[] = {0, 4, 32, 48, 80, 144, 580, 629, 1345};
  for (int i = 0; i < 3000; ++i) {
    const auto kind = static_cast<Kind>(1 + i % 8);
    Bytes payload = test::random_bytes(rng, sizes[static_cast<size_t>(i / 8) % std::size(sizes)]);
    if (payload.size() >= 4 && (kind == Kind::kRing || kind == Kind::kSignature)) {
      payload[0] = payload[1] = payload[2] = 0;
      payload[3] &= 3;
    }
    const Bytes env = codec::encode_envelope({kind, CurveId::kBls12_381, payload});
    auto check = [&](auto tag) {
      using T = decltype(tag);
      try {
        const T value = codec::decode<T>(env);
        EXPECT_EQ(codec::encode(value), env);
      } catch (const Error&) {
      }
    };
    switch (kind) {
      case Kind::kParams: check(SystemParams{}); break;
      case Kind::kMasterKey: check(MasterKey{}); break;
      case Kind::kPartialKey: check(PartialPrivateKey{}); break;
      case Kind::kSecretValue: check(SecretValue{}); break;
      case Kind::kPrivateKey: check(PrivateKey{}); break;
      case Kind::kPublicKey: check(PublicKey{}); break;
      case Kind::kRing: check(Ring({Identity("x")}, {PublicKey{G1Element::generator()}})); break;
      case Kind::kSignature: check(RingSignature{}); break;
    }
  }
}

TEST(Fuzz, MutatedSignaturesNeverCrash) {
  SeededRng rng(10);
  const auto w = test::make_world(2, rng);
  const Bytes msg = to_bytes("mutate");
  const Bytes good = codec::encode(ring_sign(w.params, msg, w.ring(), 0, w.secrets[0], rng));
  int accepted_decodes = 0;
  for (int i = 0; i < 300; ++i) {
    Bytes b = good;
    uint8_t pick[3];
    rng.fill(pick);
    const size_t pos = (size_t{pick[0]} << 8 | pick[1]) % b.size();
    b[pos] ^= static_cast<uint8_t>(pick[2] | 1);
    try {
      const RingSignature sig = codec::decode<RingSignature>(b);
      ++accepted_decodes;
      EXPECT_EQ(codec::encode(sig), b);
      EXPECT_FALSE(verify(w.params, msg, w.ring(), sig));
    } catch (const Error&) {
    }
  }
  EXPECT_LT(accepted_decodes, 300);
}

}  // namespace
}  // namespace clring
