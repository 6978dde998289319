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

// Generic certificateless ring signature built from a public-key ring scheme
// and an identity-based ring scheme, and the key-replacement forgery against
// it. The component schemes are restrictions of the concrete scheme: the
// identity-based one keeps only the (D, Q_i, P0) terms, the public-key one
// only the (x, P_i, U) terms.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "clring/bytes.hpp"
#include "clring/rng.hpp"
#include "clring/scheme.hpp"

namespace clring::attack {

class PkRingScheme {
 public:
  struct KeyPair {
    PublicKey public_key;
    SecretValue secret;
  };

  virtual ~PkRingScheme() = default;
  virtual KeyPair gen_pk(RandomSource& rng) const = 0;
  virtual Bytes ring_sign_pk(const SecretValue& sk, size_t signer,
                             std::span<const PublicKey> keys, ByteView msg,
                             RandomSource& rng) const = 0;
  // Undecodable signatures verify as false.
  virtual bool ver_pk(ByteView sig, std::span<const PublicKey> keys, ByteView msg) const = 0;
};

class IdRingScheme {
 public:
  virtual ~IdRingScheme() = default;
  virtual std::pair<SystemParams, MasterKey> gen_id(RandomSource& rng) const = 0;
  virtual PartialPrivateKey kgen_id(const SystemParams& params, const MasterKey& master,
                                    const Identity& id) const = 0;
  virtual Bytes ring_sign_id(const SystemParams& params, const PartialPrivateKey& key,
                             size_t signer, std::span<const Identity> ids, ByteView msg,
                             RandomSource& rng) const = 0;
  virtual bool ver_id(const SystemParams& params, ByteView sig, std::span<const Identity> ids,
                      ByteView msg) const = 0;
};

std::unique_ptr<PkRingScheme> pk_ring_instance();
std::unique_ptr<IdRingScheme> id_ring_instance();

class GenericClRing {
 public:
  GenericClRing(std::shared_ptr<const PkRingScheme> pk_scheme,
                std::shared_ptr<const IdRingScheme> id_scheme, SystemParams params);

  // Setup: runs Gen_ID with the default component instances.
  static std::pair<GenericClRing, MasterKey> setup(RandomSource& rng);

  const SystemParams& params() const { return params_; }
  const PkRingScheme& pk_scheme() const { return *pk_scheme_; }
  const IdRingScheme& id_scheme() const { return *id_scheme_; }

  // M' = M || param || L_ID || L_PK, each field length-prefixed.
  Bytes pk_message(ByteView message, const Ring& ring) const;
  // M'' = M' || sigma_PK.
  Bytes id_message(ByteView pk_message, ByteView pk_sig) const;

  // sigma = sigma_PK || sigma_ID (each length-prefixed). Both halves of `key`
  // are used at position `signer`.
  Bytes ring_sign(ByteView message, const Ring& ring, size_t signer, const PrivateKey& key,
                  RandomSource& rng) const;
  // Throws kMalformedEnvelope when the composite framing is broken.
  bool verify(ByteView message, const Ring& ring, ByteView sig) const;

  static Bytes join(ByteView pk_sig, ByteView id_sig);
  static std::pair<Bytes, Bytes> split(ByteView sig);

 private:
  std::shared_ptr<const PkRingScheme> pk_scheme_;
  std::shared_ptr<const IdRingScheme> id_scheme_;
  SystemParams params_;
};

// Challenger of the Type-I game, reduced to the queries the attack needs.
// Honest users are created on their first public-key query.
class Challenger {
 public:
  Challenger(SystemParams params, MasterKey master, RandomSource& rng);

  PublicKey public_key_query(const Identity& id);
  void replace_public_key(const Identity& id, const PublicKey& pk);
  PartialPrivateKey partial_key_query(const Identity& id);
  // Present for completeness of the game interface; the attack never calls it.
  RingSignature sign_query(ByteView message, const Ring& ring, size_t signer);

  const SystemParams& params() const { return params_; }
  size_t public_key_queries() const { return public_key_queries_; }
  size_t partial_key_queries() const { return partial_key_queries_; }
  size_t replacements() const { return replacements_; }
  size_t sign_queries() const { return sign_queries_; }

 private:
  struct User {
    PrivateKey key;
    PublicKey public_key;
  };
  User& user(const Identity& id);

  SystemParams params_;
  MasterKey master_;
  RandomSource& rng_;
  std::map<Bytes, User> users_;
  size_t public_key_queries_ = 0;
  size_t partial_key_queries_ = 0;
  size_t replacements_ = 0;
  size_t sign_queries_ = 0;
};

struct KnowledgeItem {
  enum class Kind { kSecretValue, kPartialKey };
  Kind kind;
  size_t slot;
  std::string identity;
  std::string origin;
};

struct AdversaryKnowledge {
  std::vector<KnowledgeItem> items;
  size_t signing_oracle_queries = 0;

  // True iff some ring slot has both a secret value matching its listed
  // public key and its partial private key.
  bool holds_complete_private_key() const;
};

enum class AttackTarget { kGeneric, kConcrete };

struct AttackResult {
  AttackTarget target;
  Bytes forged_message;
  std::optional<Ring> forged_ring;
  Bytes forged_signature;
  bool verified = false;
  size_t replaced_slot = 0;
  size_t partial_key_slot = 0;
  AdversaryKnowledge knowledge;
  std::vector<std::string> steps;
};

// Key-replacement forgery against the generic construction: replace the
// public key of slot `replaced`, obtain the partial key of slot
// `partial_slot` (must differ), sign each component with the half the
// adversary holds. Throws kPrecondition unless n >= 2, both slots are in
// range and distinct.
AttackResult type1_attack(const GenericClRing& composite, Challenger& challenger, size_t n,
                          size_t replaced, size_t partial_slot, RandomSource& rng);

// The same adversary strategy against the concrete scheme: the adversary
// combines x' (slot `replaced`) with D (slot `partial_slot`) and signs at
// either position. `verified` is true if any attempt verifies.
AttackResult type1_attack_concrete(Challenger& challenger, size_t n, size_t replaced,
                                   size_t partial_slot, RandomSource& rng);

nlohmann::json to_json(const AttackResult& result);

}  // namespace clring::attack
