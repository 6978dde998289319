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

#include "clring/attack.hpp"

#include <set>
#include <utility>

#include "clring/codec.hpp"
#include "clring/op_counter.hpp"
#include "clring/testing.hpp"

namespace clring::attack {
namespace {

constexpr char kPkContextTag[] = "CLRING-V01-GENERIC-PK-RING";
constexpr char kIdContextTag[] = "CLRING-V01-GENERIC-ID-RING";
constexpr char kPkMessageTag[] = "CLRING-V01-GENERIC-M1";
constexpr char kIdMessageTag[] = "CLRING-V01-GENERIC-M2";

const GTElement& base_gt() {
  static const GTElement g = [] {
    CounterPause pause;
    return pair(G1Element::generator(), G1Element::generator());
  }();
  return g;
}

Bytes with_suffix(ByteView prefix, const GTElement& y) {
  Bytes out(prefix.begin(), prefix.end());
  append(out, y.to_bytes());
  return out;
}

// Signing equation shared by both component schemes:
//   y_s = g^r_s e(-W, sum_{i != s} h_i B_i),   V = (sum r_i) P + h_s K,
// where the signer's key point K satisfies e(K, P) = e(B_s, W).
RingSignature restricted_sign(const std::vector<G1Element>& bases, const G1Element& partner,
                              const G1Element& key_point, size_t signer, ByteView context,
                              RandomSource& rng) {
  const size_t n = bases.size();
  std::vector<GTElement> ys(n);
  std::vector<Scalar> others_h;
  std::vector<G1Element> others_b;
  Scalar r_sum = Scalar::zero();
  for (size_t i = 0; i < n; ++i) {
    if (i == signer) continue;
    const Scalar r = random_scalar(rng);
    r_sum = r_sum + r;
    ys[i] = gt_exp(base_gt(), r);
    others_h.push_back(hash_to_scalar(with_suffix(context, ys[i])));
    others_b.push_back(bases[i]);
  }
  const G1Element sum =
      kernels::weighted_sum(others_h, others_b, ExecutionPolicy::kSerial);
  const GTElement offset = pair(-partner, sum);
  Scalar signer_r;
  do {
    signer_r = random_scalar(rng);
    ys[signer] = gt_exp(base_gt(), signer_r) * offset;
  } while (testing::commitment_needs_redo(ys[signer], ys, signer));
  const Scalar signer_h = hash_to_scalar(with_suffix(context, ys[signer]));
  const G1Element v =
      g1_mul(r_sum + signer_r, G1Element::generator()) + g1_mul(signer_h, key_point);
  return RingSignature{std::move(ys), v.without_image()};
}

bool restricted_verify(const std::vector<G1Element>& bases, const G1Element& partner,
                       ByteView context, ByteView encoded) {
  RingSignature sig;
  try {
    sig = codec::decode<RingSignature>(encoded);
  } catch (const Error&) {
    return false;
  }
  if (sig.commitments.size() != bases.size()) return false;
  const std::vector<Scalar> h = kernels::transcript_hashes(
      context, sig.commitments, hash_to_scalar, ExecutionPolicy::kSerial);
  const G1Element sum = kernels::weighted_sum(h, bases, ExecutionPolicy::kSerial);
  GTElement rhs = pair(sum, partner);
  for (const auto& y : sig.commitments) rhs *= y;
  return pair(sig.response, G1Element::generator()) == rhs;
}

Bytes pk_context(ByteView msg, std::span<const PublicKey> keys) {
  Bytes out;
  append_field(out, as_bytes(kPkContextTag));
  append_field(out, msg);
  append_u32_be(out, static_cast<uint32_t>(keys.size()));
  for (const auto& k : keys) append(out, k.point.to_bytes_with_image());
  return out;
}

Bytes id_context(ByteView msg, std::span<const Identity> ids) {
  Bytes out;
  append_field(out, as_bytes(kIdContextTag));
  append_field(out, msg);
  append_u32_be(out, static_cast<uint32_t>(ids.size()));
  for (const auto& id : ids) append_field(out, id.bytes());
  return out;
}

void check_signer(size_t signer, size_t n) {
  if (n == 0) throw Error(ErrorCode::kRingInvariant, "empty ring");
  if (signer >= n) throw Error(ErrorCode::kIndexOutOfRange, "signer index outside the ring");
}

class PkRingInstance final : public PkRingScheme {
 public:
  KeyPair gen_pk(RandomSource& rng) const override {
    const SecretValue x{random_scalar(rng)};
    return {PublicKey{g1_mul(x.value, G1Element::generator())}, x};
  }

  Bytes ring_sign_pk(const SecretValue& sk, size_t signer, std::span<const PublicKey> keys,
                     ByteView msg, RandomSource& rng) const override {
    check_signer(signer, keys.size());
    const Bytes context = pk_context(msg, keys);
    const G1Element u = hash_to_g1(kContextHashTag, context);
    std::vector<G1Element> bases;
    for (const auto& k : keys) bases.push_back(k.point);
    return codec::encode(restricted_sign(bases, u, g1_mul(sk.value, u), signer, context, rng));
  }

  bool ver_pk(ByteView sig, std::span<const PublicKey> keys, ByteView msg) const override {
    if (keys.empty()) return false;
    const Bytes context = pk_context(msg, keys);
    const G1Element u = hash_to_g1(kContextHashTag, context);
    std::vector<G1Element> bases;
    for (const auto& k : keys) bases.push_back(k.point);
    return restricted_verify(bases, u, context, sig);
  }
};

class IdRingInstance final : public IdRingScheme {
 public:
  std::pair<SystemParams, MasterKey> gen_id(RandomSource& rng) const override {
    return setup(kDefaultSecurityBits, rng);
  }

  PartialPrivateKey kgen_id(const SystemParams& params, const MasterKey& master,
                            const Identity& id) const override {
    return extract_partial_private_key(params, master, id);
  }

  Bytes ring_sign_id(const SystemParams& params, const PartialPrivateKey& key, size_t signer,
                     std::span<const Identity> ids, ByteView msg,
                     RandomSource& rng) const override {
    check_signer(signer, ids.size());
    const Bytes context = id_context(msg, ids);
    return codec::encode(
        restricted_sign(id_points(ids), params.master_public, key.point, signer, context, rng));
  }

  bool ver_id(const SystemParams& params, ByteView sig, std::span<const Identity> ids,
              ByteView msg) const override {
    if (ids.empty()) return false;
    return restricted_verify(id_points(ids), params.master_public, id_context(msg, ids), sig);
  }

 private:
  static std::vector<G1Element> id_points(std::span<const Identity> ids) {
    std::vector<G1Element> out;
    for (const auto& id : ids) out.push_back(hash_to_g1(kIdentityHashTag, id.bytes()));
    return out;
  }
};

Identity random_identity(RandomSource& rng) {
  uint8_t tail[8];
  rng.fill(tail);
  return Identity("user-" + codec::to_hex(tail));
}

Bytes random_message(RandomSource& rng) {
  Bytes m(32);
  rng.fill(m);
  return m;
}

void check_attack_slots(size_t n, size_t replaced, size_t partial_slot) {
  if (n < 2) throw Error(ErrorCode::kPrecondition, "attack needs a ring of at least 2");
  if (replaced >= n || partial_slot >= n) {
    throw Error(ErrorCode::kPrecondition, "attack slot outside the ring");
  }
  if (replaced == partial_slot) {
    throw Error(ErrorCode::kPrecondition,
                "replaced slot and partial-key slot must be different members");
  }
}

std::string text(const Identity& id) {
  return std::string(id.bytes().begin(), id.bytes().end());
}

// Steps shared by both targets: pick identities, query public keys, replace
// one key with an adversary-chosen one, query one partial key.
struct Preparation {
  std::vector<Identity> ids;
  std::vector<PublicKey> keys;
  SecretValue replacement_secret;
  PartialPrivateKey partial;
};

Preparation prepare(Challenger& challenger, size_t n, size_t replaced, size_t partial_slot,
                    RandomSource& rng, const PkRingScheme::KeyPair& replacement,
                    AttackResult& result) {
  Preparation prep;
  std::set<Bytes> used;
  while (prep.ids.size() < n) {
    Identity id = random_identity(rng);
    if (used.emplace(id.bytes().begin(), id.bytes().end()).second) prep.ids.push_back(id);
  }
  result.steps.push_back("chose " + std::to_string(n) + " identities for L_ID");

  for (const auto& id : prep.ids) prep.keys.push_back(challenger.public_key_query(id));
  result.steps.push_back("issued " + std::to_string(n) + " public-key queries for L_PK");

  prep.replacement_secret = replacement.secret;
  challenger.replace_public_key(prep.ids[replaced], replacement.public_key);
  prep.keys[replaced] = replacement.public_key;
  result.steps.push_back("ran Set-Secret-Value/Set-Public-Key and replaced the public key of " +
                         text(prep.ids[replaced]) + " (slot " + std::to_string(replaced) + ")");
  result.knowledge.items.push_back({KnowledgeItem::Kind::kSecretValue, replaced,
                                    text(prep.ids[replaced]),
                                    "self-generated for the replaced public key"});

  prep.partial = challenger.partial_key_query(prep.ids[partial_slot]);
  result.steps.push_back("obtained the partial private key of " + text(prep.ids[partial_slot]) +
                         " (slot " + std::to_string(partial_slot) + ")");
  result.knowledge.items.push_back({KnowledgeItem::Kind::kPartialKey, partial_slot,
                                    text(prep.ids[partial_slot]), "partial-private-key query"});
  return prep;
}

}  // namespace

std::unique_ptr<PkRingScheme> pk_ring_instance() { return std::make_unique<PkRingInstance>(); }
std::unique_ptr<IdRingScheme> id_ring_instance() { return std::make_unique<IdRingInstance>(); }

// ---------------------------------------------------------------- GenericClRing

GenericClRing::GenericClRing(std::shared_ptr<const PkRingScheme> pk_scheme,
                             std::shared_ptr<const IdRingScheme> id_scheme, SystemParams params)
    : pk_scheme_(std::move(pk_scheme)), id_scheme_(std::move(id_scheme)), params_(params) {}

std::pair<GenericClRing, MasterKey> GenericClRing::setup(RandomSource& rng) {
  std::shared_ptr<const IdRingScheme> id_scheme = id_ring_instance();
  auto [params, master] = id_scheme->gen_id(rng);
  return {GenericClRing(pk_ring_instance(), std::move(id_scheme), params), master};
}

Bytes GenericClRing::pk_message(ByteView message, const Ring& ring) const {
  Bytes out;
  append_field(out, as_bytes(kPkMessageTag));
  append_field(out, message);
  append_field(out, codec::encode(params_));
  append_u32_be(out, static_cast<uint32_t>(ring.size()));
  for (const auto& id : ring.identities()) append_field(out, id.bytes());
  for (const auto& pk : ring.public_keys()) append(out, pk.point.to_bytes_with_image());
  return out;
}

Bytes GenericClRing::id_message(ByteView pk_message, ByteView pk_sig) const {
  Bytes out;
  append_field(out, as_bytes(kIdMessageTag));
  append_field(out, pk_message);
  append_field(out, pk_sig);
  return out;
}

Bytes GenericClRing::join(ByteView pk_sig, ByteView id_sig) {
  Bytes out;
  append_field(out, pk_sig);
  append_field(out, id_sig);
  return out;
}

std::pair<Bytes, Bytes> GenericClRing::split(ByteView sig) {
  auto read = [&](size_t& pos) {
    if (sig.size() - pos < 4) throw Error(ErrorCode::kMalformedEnvelope, "composite truncated");
    const uint32_t len = (uint32_t{sig[pos]} << 24) | (uint32_t{sig[pos + 1]} << 16) |
                         (uint32_t{sig[pos + 2]} << 8) | sig[pos + 3];
    pos += 4;
    if (sig.size() - pos < len) {
      throw Error(ErrorCode::kMalformedEnvelope, "composite truncated");
    }
    Bytes part(sig.begin() + pos, sig.begin() + pos + len);
    pos += len;
    return part;
  };
  size_t pos = 0;
  Bytes pk_sig = read(pos);
  Bytes id_sig = read(pos);
  if (pos != sig.size()) throw Error(ErrorCode::kMalformedEnvelope, "composite has trailing bytes");
  return {std::move(pk_sig), std::move(id_sig)};
}

Bytes GenericClRing::ring_sign(ByteView message, const Ring& ring, size_t signer,
                               const PrivateKey& key, RandomSource& rng) const {
  const Bytes m1 = pk_message(message, ring);
  const Bytes pk_sig = pk_scheme_->ring_sign_pk(key.secret, signer, ring.public_keys(), m1, rng);
  const Bytes m2 = id_message(m1, pk_sig);
  const Bytes id_sig =
      id_scheme_->ring_sign_id(params_, key.partial, signer, ring.identities(), m2, rng);
  return join(pk_sig, id_sig);
}

bool GenericClRing::verify(ByteView message, const Ring& ring, ByteView sig) const {
  const auto [pk_sig, id_sig] = split(sig);
  const Bytes m1 = pk_message(message, ring);
  if (!pk_scheme_->ver_pk(pk_sig, ring.public_keys(), m1)) return false;
  return id_scheme_->ver_id(params_, id_sig, ring.identities(), id_message(m1, pk_sig));
}

// ---------------------------------------------------------------- Challenger

Challenger::Challenger(SystemParams params, MasterKey master, RandomSource& rng)
    : params_(params), master_(master), rng_(rng) {}

Challenger::User& Challenger::user(const Identity& id) {
  const Bytes key(id.bytes().begin(), id.bytes().end());
  auto it = users_.find(key);
  if (it == users_.end()) {
    const SecretValue x = set_secret_value(params_, rng_);
    const PartialPrivateKey d = extract_partial_private_key(params_, master_, id);
    it = users_.emplace(key, User{set_private_key(x, d), set_public_key(params_, x)}).first;
  }
  return it->second;
}

PublicKey Challenger::public_key_query(const Identity& id) {
  ++public_key_queries_;
  return user(id).public_key;
}

void Challenger::replace_public_key(const Identity& id, const PublicKey& pk) {
  ++replacements_;
  user(id).public_key = pk;
}

PartialPrivateKey Challenger::partial_key_query(const Identity& id) {
  ++partial_key_queries_;
  return user(id).key.partial;
}

RingSignature Challenger::sign_query(ByteView message, const Ring& ring, size_t signer) {
  ++sign_queries_;
  if (signer >= ring.size()) throw Error(ErrorCode::kIndexOutOfRange, "signer outside ring");
  return clring::ring_sign(params_, message, ring, signer,
                           user(ring.identities()[signer]).key, rng_);
}

// ---------------------------------------------------------------- attack

bool AdversaryKnowledge::holds_complete_private_key() const {
  std::set<size_t> secrets, partials;
  for (const auto& item : items) {
    (item.kind == KnowledgeItem::Kind::kSecretValue ? secrets : partials).insert(item.slot);
  }
  for (size_t slot : secrets) {
    if (partials.count(slot)) return true;
  }
  return false;
}

AttackResult type1_attack(const GenericClRing& composite, Challenger& challenger, size_t n,
                          size_t replaced, size_t partial_slot, RandomSource& rng) {
  check_attack_slots(n, replaced, partial_slot);
  const size_t sign_queries_before = challenger.sign_queries();

  AttackResult result;
  result.target = AttackTarget::kGeneric;
  result.replaced_slot = replaced;
  result.partial_key_slot = partial_slot;

  const Preparation prep = prepare(challenger, n, replaced, partial_slot, rng,
                                   composite.pk_scheme().gen_pk(rng), result);
  Ring ring(prep.ids, prep.keys);
  result.forged_message = random_message(rng);

  const Bytes m1 = composite.pk_message(result.forged_message, ring);
  const Bytes pk_sig =
      composite.pk_scheme().ring_sign_pk(prep.replacement_secret, replaced, ring.public_keys(), m1, rng);
  result.steps.push_back("signed M' with the PK ring scheme using the replacement secret value");

  const Bytes m2 = composite.id_message(m1, pk_sig);
  const Bytes id_sig = composite.id_scheme().ring_sign_id(composite.params(), prep.partial,
                                                          partial_slot, ring.identities(), m2, rng);
  result.steps.push_back("signed M'' with the ID ring scheme using the obtained partial key");

  result.forged_signature = GenericClRing::join(pk_sig, id_sig);
  result.steps.push_back("output sigma = sigma_PK || sigma_ID as the forgery");
  result.verified = composite.verify(result.forged_message, ring, result.forged_signature);
  result.knowledge.signing_oracle_queries = challenger.sign_queries() - sign_queries_before;
  result.forged_ring = std::move(ring);
  return result;
}

AttackResult type1_attack_concrete(Challenger& challenger, size_t n, size_t replaced,
                                   size_t partial_slot, RandomSource& rng) {
  check_attack_slots(n, replaced, partial_slot);
  const size_t sign_queries_before = challenger.sign_queries();

  AttackResult result;
  result.target = AttackTarget::kConcrete;
  result.replaced_slot = replaced;
  result.partial_key_slot = partial_slot;

  const SystemParams& params = challenger.params();
  const SecretValue x = set_secret_value(params, rng);
  const Preparation prep = prepare(challenger, n, replaced, partial_slot, rng,
                                   {set_public_key(params, x), x}, result);
  Ring ring(prep.ids, prep.keys);
  result.forged_message = random_message(rng);

  const PrivateKey mixed = set_private_key(prep.replacement_secret, prep.partial);
  result.verified = false;
  for (size_t slot : {replaced, partial_slot}) {
    const RingSignature sig = testing::ring_sign_unchecked(params, result.forged_message, ring,
                                                           slot, mixed, rng);
    const bool ok = verify(params, result.forged_message, ring, sig);
    result.steps.push_back("signed at slot " + std::to_string(slot) +
                           " with (x' of slot " + std::to_string(replaced) + ", D of slot " +
                           std::to_string(partial_slot) + "): " + (ok ? "verifies" : "rejected"));
    if (result.forged_signature.empty() || ok) result.forged_signature = codec::encode(sig);
    result.verified = result.verified || ok;
  }
  result.knowledge.signing_oracle_queries = challenger.sign_queries() - sign_queries_before;
  result.forged_ring = std::move(ring);
  return result;
}

nlohmann::json to_json(const AttackResult& result) {
  nlohmann::json knowledge = nlohmann::json::array();
  for (const auto& item : result.knowledge.items) {
    knowledge.push_back({
        {"kind", item.kind == KnowledgeItem::Kind::kSecretValue ? "secret_value" : "partial_key"},
        {"slot", item.slot},
        {"identity", item.identity},
        {"origin", item.origin},
    });
  }
  nlohmann::json out;
  out["target"] = result.target == AttackTarget::kGeneric ? "generic" : "concrete";
  out["ring_size"] = result.forged_ring ? result.forged_ring->size() : 0;
  out["replaced_slot"] = result.replaced_slot;
  out["partial_key_slot"] = result.partial_key_slot;
  out["message"] = codec::to_hex(result.forged_message);
  out["signature_bytes"] = result.forged_signature.size();
  out["verified"] = result.verified;
  out["steps"] = result.steps;
  out["adversary_knowledge"] = knowledge;
  out["signing_oracle_queries"] = result.knowledge.signing_oracle_queries;
  out["complete_private_key_used"] = result.knowledge.holds_complete_private_key();
  return out;
}

}  // namespace clring::attack
