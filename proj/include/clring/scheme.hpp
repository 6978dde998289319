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

// Certificateless ring signatures over a bilinear group.
//
// Key material: the KGC holds kappa and publishes P0 = kappa*P. A user with
// identity ID gets the partial key D = kappa*H1(ID) from the KGC, picks a
// secret value x, and publishes P_ID = x*P. The signing key is the pair (x, D).
//
// Indices in this API are 0-based explicit positions into the ring.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "clring/bytes.hpp"
#include "clring/group.hpp"
#include "clring/kernels.hpp"
#include "clring/rng.hpp"

namespace clring {

enum class HashSuite : uint8_t {
  // H1/H3: SSWU hash-to-G1 over SHA-256; H2: expand_message_xmd + reduce.
  kSha256V1 = 1,
};

struct SystemParams {
  CurveId curve = CurveId::kBls12_381;
  G1Element generator;     // P, carries its G2 image
  GTElement gt_generator;  // g = e(P, P)
  G1Element master_public; // P0 = kappa * P
  HashSuite hash_suite = HashSuite::kSha256V1;
};

struct MasterKey {
  Scalar kappa;
};

class Identity {
 public:
  // Throws kPrecondition for an empty identity.
  explicit Identity(Bytes id);
  explicit Identity(std::string_view id) : Identity(clring::to_bytes(id)) {}

  ByteView bytes() const { return bytes_; }
  friend bool operator==(const Identity&, const Identity&) = default;

 private:
  Bytes bytes_;
};

struct PartialPrivateKey {
  G1Element point;
  friend bool operator==(const PartialPrivateKey&, const PartialPrivateKey&) = default;
};

struct SecretValue {
  Scalar value;
  friend bool operator==(const SecretValue&, const SecretValue&) = default;
};

struct PrivateKey {
  SecretValue secret;
  PartialPrivateKey partial;
  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct PublicKey {
  G1Element point;  // non-identity, carries its G2 image
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

// Ordered identities with their aligned public keys. Order is significant.
// A one-member ring is accepted; it degenerates to an ordinary signature and
// offers no anonymity.
class Ring {
 public:
  // Throws kRingInvariant on empty rings, length mismatch, duplicate
  // identities, or public keys that are the identity / lack a G2 image.
  Ring(std::vector<Identity> identities, std::vector<PublicKey> public_keys);

  size_t size() const { return identities_.size(); }
  const std::vector<Identity>& identities() const { return identities_; }
  const std::vector<PublicKey>& public_keys() const { return public_keys_; }
  bool anonymity_is_vacuous() const { return size() == 1; }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<Identity> identities_;
  std::vector<PublicKey> public_keys_;
};

struct RingSignature {
  std::vector<GTElement> commitments;  // y_1..y_n
  G1Element response;                  // V

  // No commitment is 1_GT and all commitments are pairwise distinct.
  bool commitments_well_formed() const;
  friend bool operator==(const RingSignature&, const RingSignature&) = default;
};

inline constexpr unsigned kDefaultSecurityBits = 128;

// Throws kUnsupportedParameter for any level other than 128 bits.
std::pair<SystemParams, MasterKey> setup(unsigned security_bits, RandomSource& rng);

PartialPrivateKey extract_partial_private_key(const SystemParams& params,
                                              const MasterKey& master, const Identity& id);

// Public validity check e(D, P) == e(H1(ID), P0).
bool partial_key_is_valid(const SystemParams& params, const Identity& id,
                          const PartialPrivateKey& partial);

SecretValue set_secret_value(const SystemParams& params, RandomSource& rng);

PrivateKey set_private_key(const SecretValue& secret, const PartialPrivateKey& partial);

// Throws kZeroScalar for a zero secret.
PublicKey set_public_key(const SystemParams& params, const SecretValue& secret);

// Canonical transcript prefix for the hashes: tag, length-prefixed message,
// member count, length-prefixed identities, then fixed-width public keys.
Bytes encode_context(ByteView message, const Ring& ring);

// Throws kIndexOutOfRange for a bad signer index and kKeyMismatch when the
// key does not belong to ring member `signer`.
RingSignature ring_sign(const SystemParams& params, ByteView message, const Ring& ring,
                        size_t signer, const PrivateKey& key, RandomSource& rng,
                        ExecutionPolicy policy = ExecutionPolicy::kParallel);

// False when the verification equation fails; throws kLengthMismatch when
// the signature does not have one commitment per ring member.
bool verify(const SystemParams& params, ByteView message, const Ring& ring,
            const RingSignature& sig, ExecutionPolicy policy = ExecutionPolicy::kParallel);

// Evaluates the candidate de-anonymisation test for member j: strips the
// other members' terms from e(V, P), raises the remainder to 1/h_j and
// compares with e(Q_j, P0) e(P_j, U). On a valid signature it holds for every
// j, so it carries no information about the signer. Throws kInvalidSignature
// when `sig` does not verify and kIndexOutOfRange for a bad j.
bool anonymity_identity_check(const SystemParams& params, ByteView message, const Ring& ring,
                              const RingSignature& sig, size_t member);

}  // namespace clring
