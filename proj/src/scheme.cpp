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

#include "clring/scheme.hpp"

#include <algorithm>
#include <set>

#include "clring/detail/verify_impl.hpp"
#include "clring/op_counter.hpp"
#include "clring/testing.hpp"

namespace clring {
namespace {

constexpr char kContextTag[] = "CLRING-V01-CONTEXT";

std::vector<Bytes> identity_bytes(const Ring& ring) {
  std::vector<Bytes> out;
  out.reserve(ring.size());
  for (const auto& id : ring.identities()) out.emplace_back(id.bytes().begin(), id.bytes().end());
  return out;
}

std::vector<G1Element> public_points(const Ring& ring) {
  std::vector<G1Element> out;
  out.reserve(ring.size());
  for (const auto& pk : ring.public_keys()) out.push_back(pk.point);
  return out;
}

// Copies of `v` without position `skip`.
template <typename T>
std::vector<T> all_but(const std::vector<T>& v, size_t skip) {
  std::vector<T> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out.push_back(v[i]);
  }
  return out;
}

GTElement product(std::span<const GTElement> ys) {
  GTElement acc;
  for (const auto& y : ys) acc *= y;
  return acc;
}

RingSignature sign_impl(const SystemParams& params, ByteView message, const Ring& ring,
                        size_t signer, const PrivateKey& key, RandomSource& rng,
                        ExecutionPolicy policy, bool check_keys) {
  const size_t n = ring.size();
  if (signer >= n) {
    throw Error(ErrorCode::kIndexOutOfRange, "signer index outside the ring");
  }

  // Operation budget (n members, signer s): 2 pairings, n GT
  // exponentiations, n+1 map-to-point hashes, and 2n+3 G1 scalar
  // multiplications decomposed as
  //   (n-1) h_i*Q_i + (n-1) h_i*P_i     aggregates over i != s
  //   1   x_s*P                         binds x_s to the ring's P_s
  //   1   (sum r_i)*P
  //   3   h_s*D_s, x_s*U, h_s*(x_s*U)   one multiplication per term of V
  const Bytes context = encode_context(message, ring);
  const std::vector<G1Element> id_points =
      kernels::hash_points(kIdentityHashTag, identity_bytes(ring), policy);
  const G1Element context_point = hash_to_g1(kContextHashTag, context);

  const G1Element own_public = g1_mul(key.secret.value, params.generator);
  if (check_keys) {
    if (!(own_public == ring.public_keys()[signer].point)) {
      throw Error(ErrorCode::kKeyMismatch, "secret value does not match the ring's public key");
    }
    CounterPause pause;  // validation, outside the cost table
    if (!(pair(key.partial.point, params.generator) ==
          pair(id_points[signer], params.master_public))) {
      throw Error(ErrorCode::kKeyMismatch, "partial private key does not match the identity");
    }
  }

  // r_i and y_i = g^r_i for the non-signers.
  std::vector<Scalar> others_r(n - 1);
  for (auto& r : others_r) r = random_scalar(rng);
  const std::vector<GTElement> others_y =
      kernels::gt_powers(params.gt_generator, others_r, policy);

  // h_i for the non-signers.
  const std::vector<Scalar> others_h =
      kernels::transcript_hashes(context, others_y, hash_to_scalar, policy);

  // y_s = g^r_s e(-P0, sum h_i Q_i) e(-U, sum h_i P_i).
  const G1Element id_sum = kernels::weighted_sum(others_h, all_but(id_points, signer), policy);
  const G1Element key_sum =
      kernels::weighted_sum(others_h, all_but(public_points(ring), signer), policy);
  const GTElement offset =
      pair(-params.master_public, id_sum) * pair(-context_point, key_sum);

  std::vector<GTElement> commitments(n);
  for (size_t i = 0, k = 0; i < n; ++i) {
    if (i != signer) commitments[i] = others_y[k++];
  }
  Scalar signer_r;
  do {
    // Redo with a fresh r_s only; the other members' values stay fixed.
    signer_r = random_scalar(rng);
    commitments[signer] = gt_exp(params.gt_generator, signer_r) * offset;
  } while (testing::commitment_needs_redo(commitments[signer], commitments, signer));

  // h_s.
  Bytes signer_input = context;
  const auto ys = commitments[signer].to_bytes();
  signer_input.insert(signer_input.end(), ys.begin(), ys.end());
  const Scalar signer_h = hash_to_scalar(signer_input);

  // V = (sum r_i) P + h_s D_s + h_s (x_s U).
  Scalar r_sum = signer_r;
  for (const auto& r : others_r) r_sum = r_sum + r;
  const G1Element response = g1_mul(r_sum, params.generator) +
                             g1_mul(signer_h, key.partial.point) +
                             g1_mul(signer_h, g1_mul(key.secret.value, context_point));

  return RingSignature{std::move(commitments), response.without_image()};
}

}  // namespace

Identity::Identity(Bytes id) : bytes_(std::move(id)) {
  if (bytes_.empty()) throw Error(ErrorCode::kPrecondition, "identity must be nonempty");
}

Ring::Ring(std::vector<Identity> identities, std::vector<PublicKey> public_keys)
    : identities_(std::move(identities)), public_keys_(std::move(public_keys)) {
  if (identities_.empty()) throw Error(ErrorCode::kRingInvariant, "ring must not be empty");
  if (identities_.size() != public_keys_.size()) {
    throw Error(ErrorCode::kRingInvariant, "identity and public-key lists differ in length");
  }
  std::set<Bytes> seen;
  for (const auto& id : identities_) {
    if (!seen.emplace(id.bytes().begin(), id.bytes().end()).second) {
      throw Error(ErrorCode::kRingInvariant, "duplicate identity in ring");
    }
  }
  for (const auto& pk : public_keys_) {
    if (pk.point.is_identity() || !pk.point.has_image()) {
      throw Error(ErrorCode::kRingInvariant, "invalid public key in ring");
    }
  }
}

bool RingSignature::commitments_well_formed() const {
  for (size_t i = 0; i < commitments.size(); ++i) {
    if (commitments[i].is_one()) return false;
    for (size_t j = i + 1; j < commitments.size(); ++j) {
      if (commitments[i] == commitments[j]) return false;
    }
  }
  return true;
}

std::pair<SystemParams, MasterKey> setup(unsigned security_bits, RandomSource& rng) {
  if (security_bits != kDefaultSecurityBits) {
    throw Error(ErrorCode::kUnsupportedParameter,
                "only 128-bit security (BLS12-381) is supported");
  }
  SystemParams params;
  params.curve = CurveId::kBls12_381;
  params.generator = G1Element::generator();
  params.gt_generator = pair(params.generator, params.generator);
  MasterKey master{random_scalar(rng)};
  params.master_public = g1_mul(master.kappa, params.generator);
  params.hash_suite = HashSuite::kSha256V1;
  return {params, master};
}

PartialPrivateKey extract_partial_private_key(const SystemParams&, const MasterKey& master,
                                              const Identity& id) {
  return {g1_mul(master.kappa, hash_to_g1(kIdentityHashTag, id.bytes()))};
}

bool partial_key_is_valid(const SystemParams& params, const Identity& id,
                          const PartialPrivateKey& partial) {
  const G1Element q = hash_to_g1(kIdentityHashTag, id.bytes());
  return pair(partial.point, params.generator) == pair(q, params.master_public);
}

SecretValue set_secret_value(const SystemParams&, RandomSource& rng) {
  return {random_scalar(rng)};
}

PrivateKey set_private_key(const SecretValue& secret, const PartialPrivateKey& partial) {
  return {secret, partial};
}

PublicKey set_public_key(const SystemParams& params, const SecretValue& secret) {
  if (secret.value.is_zero()) throw Error(ErrorCode::kZeroScalar, "secret value is zero");
  return {g1_mul(secret.value, params.generator)};
}

Bytes encode_context(ByteView message, const Ring& ring) {
  Bytes out;
  append_field(out, as_bytes(kContextTag));
  append_field(out, message);
  append_u32_be(out, static_cast<uint32_t>(ring.size()));
  for (const auto& id : ring.identities()) append_field(out, id.bytes());
  for (const auto& pk : ring.public_keys()) append(out, pk.point.to_bytes_with_image());
  return out;
}

RingSignature ring_sign(const SystemParams& params, ByteView message, const Ring& ring,
                        size_t signer, const PrivateKey& key, RandomSource& rng,
                        ExecutionPolicy policy) {
  return sign_impl(params, message, ring, signer, key, rng, policy, /*check_keys=*/true);
}

bool verify(const SystemParams& params, ByteView message, const Ring& ring,
            const RingSignature& sig, ExecutionPolicy policy) {
  return detail::verify_with_hash(params, message, ring, sig, hash_to_scalar, policy);
}

bool detail::verify_with_hash(const SystemParams& params, ByteView message, const Ring& ring,
                              const RingSignature& sig, const ScalarHash& transcript_hash,
                              ExecutionPolicy policy) {
  if (sig.commitments.size() != ring.size()) {
    throw Error(ErrorCode::kLengthMismatch, "signature and ring sizes differ");
  }
  const Bytes context = encode_context(message, ring);
  const std::vector<Scalar> h =
      kernels::transcript_hashes(context, sig.commitments, transcript_hash, policy);
  const std::vector<G1Element> id_points =
      kernels::hash_points(kIdentityHashTag, identity_bytes(ring), policy);
  const G1Element context_point = hash_to_g1(kContextHashTag, context);

  const G1Element id_sum = kernels::weighted_sum(h, id_points, policy);
  const G1Element key_sum = kernels::weighted_sum(h, public_points(ring), policy);

  const GTElement lhs = pair(sig.response, params.generator);
  const GTElement rhs = product(sig.commitments) * pair(id_sum, params.master_public) *
                        pair(key_sum, context_point);
  return lhs == rhs;
}

bool anonymity_identity_check(const SystemParams& params, ByteView message, const Ring& ring,
                              const RingSignature& sig, size_t member) {
  if (member >= ring.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "member index outside the ring");
  }
  if (!verify(params, message, ring, sig)) {
    throw Error(ErrorCode::kInvalidSignature, "anonymity check needs a valid signature");
  }
  const Bytes context = encode_context(message, ring);
  const std::vector<Scalar> h = kernels::transcript_hashes(
      context, sig.commitments, hash_to_scalar, ExecutionPolicy::kSerial);
  const std::vector<G1Element> id_points = kernels::hash_points(
      kIdentityHashTag, identity_bytes(ring), ExecutionPolicy::kSerial);
  const std::vector<G1Element> keys = public_points(ring);
  const G1Element context_point = hash_to_g1(kContextHashTag, context);

  const std::vector<Scalar> h_rest = all_but(h, member);
  const G1Element id_rest =
      kernels::weighted_sum(h_rest, all_but(id_points, member), ExecutionPolicy::kSerial);
  const G1Element key_rest =
      kernels::weighted_sum(h_rest, all_but(keys, member), ExecutionPolicy::kSerial);

  const GTElement ratio = pair(sig.response, params.generator) /
                          (product(sig.commitments) * pair(params.master_public, id_rest) *
                           pair(context_point, key_rest));
  const GTElement candidate = gt_exp(ratio, h[member].inverse());
  const GTElement expected = pair(id_points[member], params.master_public) *
                             pair(keys[member], context_point);
  return candidate == expected;
}

namespace testing {

RingSignature ring_sign_unchecked(const SystemParams& params, ByteView message,
                                  const Ring& ring, size_t signer, const PrivateKey& key,
                                  RandomSource& rng, ExecutionPolicy policy) {
  return sign_impl(params, message, ring, signer, key, rng, policy, /*check_keys=*/false);
}

bool commitment_needs_redo(const GTElement& candidate, std::span<const GTElement> commitments,
                           size_t signer) {
  if (candidate.is_one()) return true;
  for (size_t i = 0; i < commitments.size(); ++i) {
    if (i != signer && commitments[i] == candidate) return true;
  }
  return false;
}

}  // namespace testing
}  // namespace clring
