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

// Serial reference kernels against their OpenMP counterparts, plus the
// end-to-end sign/verify they feed.

#include <benchmark/benchmark.h>

#include <optional>

#include "clring/kernels.hpp"
#include "clring/scheme.hpp"

namespace {

using namespace clring;

ExecutionPolicy policy_of(const benchmark::State& state) {
  return state.range(1) ? ExecutionPolicy::kParallel : ExecutionPolicy::kSerial;
}

std::vector<Scalar> scalars(size_t n, RandomSource& rng) {
  std::vector<Scalar> out;
  for (size_t i = 0; i < n; ++i) out.push_back(random_scalar(rng));
  return out;
}

void BM_HashPoints(benchmark::State& state) {
  std::vector<Bytes> msgs;
  for (int64_t i = 0; i < state.range(0); ++i) msgs.push_back(to_bytes("id-" + std::to_string(i)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::hash_points(kIdentityHashTag, msgs, policy_of(state)));
  }
}

void BM_GtPowers(benchmark::State& state) {
  SeededRng rng(1);
  const auto exps = scalars(static_cast<size_t>(state.range(0)), rng);
  const GTElement g = pair(G1Element::generator(), G1Element::generator());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gt_powers(g, exps, policy_of(state)));
}

void BM_WeightedSum(benchmark::State& state) {
  SeededRng rng(2);
  const auto n = static_cast<size_t>(state.range(0));
  const auto weights = scalars(n, rng);
  std::vector<G1Element> points;
  for (const auto& w : scalars(n, rng)) points.push_back(g1_mul(w, G1Element::generator()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::weighted_sum(weights, points, policy_of(state)));
  }
}

struct Fixture {
  explicit Fixture(size_t n) : rng(3) {
    std::tie(params, master) = setup(kDefaultSecurityBits, rng);
    std::vector<Identity> ids;
    std::vector<PublicKey> keys;
    for (size_t i = 0; i < n; ++i) {
      Identity id("bench-" + std::to_string(i));
      const SecretValue x = set_secret_value(params, rng);
      if (i == 0) signer = set_private_key(x, extract_partial_private_key(params, master, id));
      keys.push_back(set_public_key(params, x));
      ids.push_back(std::move(id));
    }
    ring.emplace(ids, keys);
  }
  SeededRng rng;
  SystemParams params;
  MasterKey master;
  PrivateKey signer;
  std::optional<Ring> ring;
};

void BM_Sign(benchmark::State& state) {
  Fixture f(static_cast<size_t>(state.range(0)));
  const Bytes msg = to_bytes("benchmark");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring_sign(f.params, msg, *f.ring, 0, f.signer, f.rng, policy_of(state)));
  }
}

void BM_Verify(benchmark::State& state) {
  Fixture f(static_cast<size_t>(state.range(0)));
  const Bytes msg = to_bytes("benchmark");
  const auto sig = ring_sign(f.params, msg, *f.ring, 0, f.signer, f.rng);
  for (auto _ : state) benchmark::DoNotOptimize(verify(f.params, msg, *f.ring, sig, policy_of(state)));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int64_t n : {2, 8, 32}) {
    for (int64_t parallel : {0, 1}) b->Args({n, parallel});
  }
  b->ArgNames({"n", "parallel"});
}

BENCHMARK(BM_HashPoints)->Apply(sizes);
BENCHMARK(BM_GtPowers)->Apply(sizes);
BENCHMARK(BM_WeightedSum)->Apply(sizes);
BENCHMARK(BM_Sign)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Apply(sizes)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
