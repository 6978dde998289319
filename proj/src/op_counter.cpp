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

#include "clring/op_counter.hpp"

namespace clring {
namespace detail {

CounterState& counter_state() {
  thread_local CounterState state;
  return state;
}

void count(Op op) {
  CounterState& st = counter_state();
  if (st.paused) return;
  switch (op) {
    case Op::kPairing:
      ++st.counts.pairings;
      break;
    case Op::kG1Mul:
      ++st.counts.g1_scalar_muls;
      break;
    case Op::kGtExp:
      ++st.counts.gt_exps;
      break;
    case Op::kMapToPoint:
      ++st.counts.map_to_point_hashes;
      break;
  }
}

}  // namespace detail

void counter_reset() { detail::counter_state().counts = {}; }

OpCounter counter_report() { return detail::counter_state().counts; }

CounterPause::CounterPause() : previous_(detail::counter_state().paused) {
  detail::counter_state().paused = true;
}

CounterPause::~CounterPause() { detail::counter_state().paused = previous_; }

}  // namespace clring
