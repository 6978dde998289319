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

#include "clring/simulation.hpp"

#include <algorithm>
#include <limits>

#include "clring/codec.hpp"
#include "clring/detail/verify_impl.hpp"
#include "clring/kernels.hpp"
#include "clring/testing.hpp"

namespace clring::simulation {
namespace {

size_t uniform_index(size_t n, RandomSource& rng) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % n;
  for (;;) {
    uint8_t buf[8];
    rng.fill(buf);
    uint64_t v = 0;
    for (uint8_t b : buf) v = (v << 8) | b;
    if (v < limit) return static_cast<size_t>(v % n);
  }
}

Bytes oracle_input(ByteView context, const GTElement& y) {
  Bytes out(context.begin(), context.end());
  append(out, y.to_bytes());
  return out;
}

}  // namespace

Scalar ProgrammableOracle::query(ByteView input) {
  Bytes key(input.begin(), input.end());
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  const Scalar value = hash_to_scalar(input);
  table_.emplace(std::move(key), value);
  return value;
}

void ProgrammableOracle::program(ByteView input, const Scalar& value) {
  Bytes key(input.begin(), input.end());
  if (!table_.emplace(std::move(key), value).second) {
    throw Error(ErrorCode::kOracleCollision, "oracle point already defined");
  }
  ++programmed_;
}

bool ProgrammableOracle::is_defined(ByteView input) const {
  return table_.count(Bytes(input.begin(), input.end())) != 0;
}

bool verify_with_oracle(const SystemParams& params, ByteView message, const Ring& ring,
                        const RingSignature& sig, ProgrammableOracle& oracle) {
  return detail::verify_with_hash(
      params, message, ring, sig, [&oracle](ByteView in) { return oracle.query(in); },
      ExecutionPolicy::kSerial);
}

SimulationResult simulate_ring_sign_query(const SystemParams& params,
                                          ProgrammableOracle& oracle, ByteView message,
                                          const Ring& ring, RandomSource& rng,
                                          size_t max_attempts) {
  const size_t n = ring.size();
  const Bytes context = encode_context(message, ring);
  const G1Element& base = params.generator;

  SimulationResult result;
  result.simulated_signer = uniform_index(n, rng);
  const size_t s = result.simulated_signer;

  std::vector<GTElement> ys(n);
  std::vector<Scalar> h(n);
  Scalar r_sum = Scalar::zero();
  for (size_t i = 0; i < n; ++i) {
    if (i == s) continue;
    const Scalar r = random_scalar(rng);
    r_sum = r_sum + r;
    ys[i] = gt_exp(params.gt_generator, r);
  }
  for (size_t i = 0; i < n; ++i) {
    if (i != s) h[i] = oracle.query(oracle_input(context, ys[i]));
  }

  std::vector<Bytes> ids;
  std::vector<G1Element> keys;
  for (const auto& id : ring.identities()) ids.emplace_back(id.bytes().begin(), id.bytes().end());
  for (const auto& pk : ring.public_keys()) keys.push_back(pk.point);
  const std::vector<G1Element> id_points =
      kernels::hash_points(kIdentityHashTag, ids, ExecutionPolicy::kSerial);
  const G1Element context_point = hash_to_g1(kContextHashTag, context);
  const G1Element r_point = g1_mul(r_sum, base);

  for (size_t attempt = 0; attempt < max_attempts; ++attempt) {
    h[s] = random_scalar(rng);
    const G1Element v = g1_mul(random_scalar(rng), base).without_image();
    const G1Element id_sum = kernels::weighted_sum(h, id_points, ExecutionPolicy::kSerial);
    const G1Element key_sum = kernels::weighted_sum(h, keys, ExecutionPolicy::kSerial);
    ys[s] = pair(v - r_point, base) * pair(id_sum, -params.master_public) *
            pair(key_sum, -context_point);
    const Bytes input = oracle_input(context, ys[s]);
    if (testing::commitment_needs_redo(ys[s], ys, s) || oracle.is_defined(input)) {
      ++result.retries;
      continue;
    }
    oracle.program(input, h[s]);
    result.signature = RingSignature{std::move(ys), v};
    return result;
  }
  throw Error(ErrorCode::kOracleCollision, "simulation exhausted its retry budget");
}

nlohmann::json to_json(const SimulationResult& result) {
  return {
      {"simulated_signer", result.simulated_signer},
      {"retries", result.retries},
      {"ring_size", result.signature.commitments.size()},
      {"signature", codec::to_hex(codec::encode(result.signature))},
  };
}

}  // namespace clring::simulation
