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

#include <cstdint>

namespace clring {

// Tallies of the costly operations, one column each: pairings, scalar
// multiplications in the source group, exponentiations in the target group
// and map-to-point hashes. Counters are thread-local; a measurement session
// is a single thread (parallel kernels fold worker tallies back into the
// calling thread before returning).
struct OpCounter {
  uint64_t pairings = 0;
  uint64_t g1_scalar_muls = 0;
  uint64_t gt_exps = 0;
  uint64_t map_to_point_hashes = 0;

  OpCounter& operator+=(const OpCounter& o) {
    pairings += o.pairings;
    g1_scalar_muls += o.g1_scalar_muls;
    gt_exps += o.gt_exps;
    map_to_point_hashes += o.map_to_point_hashes;
    return *this;
  }

  friend OpCounter operator+(OpCounter a, const OpCounter& b) { return a += b; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

void counter_reset();
OpCounter counter_report();

// Suspends counting on the current thread for its lifetime. Used for input
// validation that is not part of the measured algorithms.
class CounterPause {
 public:
  CounterPause();
  ~CounterPause();
  CounterPause(const CounterPause&) = delete;
  CounterPause& operator=(const CounterPause&) = delete;

 private:
  bool previous_;
};

namespace detail {

struct CounterState {
  OpCounter counts;
  bool paused = false;
};

CounterState& counter_state();

enum class Op { kPairing, kG1Mul, kGtExp, kMapToPoint };
void count(Op op);

}  // namespace detail

}  // namespace clring
