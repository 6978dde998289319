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

// Per-ring-member loops of signing and verification. Each kernel has a serial
// reference path and an OpenMP path; both produce identical values and
// identical operation tallies. Randomness is always drawn by the caller
// before a kernel runs, so seeded replays do not depend on thread count.

#include <functional>
#include <span>
#include <vector>

#include "clring/bytes.hpp"
#include "clring/group.hpp"

namespace clring {

enum class ExecutionPolicy {
  kSerial,
  kParallel,
};

using ScalarHash = std::function<Scalar(ByteView)>;

namespace kernels {

// hash_to_g1(tag, msgs[i]) for every i.
std::vector<G1Element> hash_points(uint8_t domain_tag, std::span<const Bytes> msgs,
                                   ExecutionPolicy policy);

// base^exps[i] for every i.
std::vector<GTElement> gt_powers(const GTElement& base, std::span<const Scalar> exps,
                                 ExecutionPolicy policy);

// sum_i weights[i] * points[i]; one counted scalar multiplication per term.
G1Element weighted_sum(std::span<const Scalar> weights, std::span<const G1Element> points,
                       ExecutionPolicy policy);

// hash(prefix || encode(ys[i])) for every i. A stateful hash (programmable
// oracle) must be run with kSerial.
std::vector<Scalar> transcript_hashes(ByteView prefix, std::span<const GTElement> ys,
                                      const ScalarHash& hash, ExecutionPolicy policy);

}  // namespace kernels
}  // namespace clring
