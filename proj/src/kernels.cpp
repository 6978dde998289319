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

#include "clring/kernels.hpp"

#include <cstddef>
#include <exception>

#include <omp.h>

#include "clring/op_counter.hpp"

namespace clring::kernels {
namespace {

// Runs body(i) for i in [0, n) across the OpenMP team. Worker tallies are
// folded into the calling thread's counter, and the caller's pause state is
// propagated to the workers.
template <typename Body>
void parallel_for_counted(size_t n, Body&& body) {
  detail::CounterState& caller = detail::counter_state();
  const bool paused = caller.paused;
  OpCounter total;
  std::exception_ptr failure;

#pragma omp parallel
  {
    detail::CounterState& st = detail::counter_state();
    const detail::CounterState saved = st;
    st.counts = {};
    st.paused = paused;

#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      try {
        body(static_cast<size_t>(i));
      } catch (...) {
#pragma omp critical(clring_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }

    const OpCounter mine = st.counts;
    st = saved;
#pragma omp critical(clring_kernel_counter)
    total += mine;
  }

  caller.counts += total;
  if (failure) std::rethrow_exception(failure);
}

template <typename Body>
void for_each_index(size_t n, ExecutionPolicy policy, Body&& body) {
  if (policy == ExecutionPolicy::kSerial || n < 2) {
    for (size_t i = 0; i < n; ++i) body(i);
  } else {
    parallel_for_counted(n, body);
  }
}

}  // namespace

std::vector<G1Element> hash_points(uint8_t domain_tag, std::span<const Bytes> msgs,
                                   ExecutionPolicy policy) {
  std::vector<G1Element> out(msgs.size());
  for_each_index(msgs.size(), policy,
                 [&](size_t i) { out[i] = hash_to_g1(domain_tag, msgs[i]); });
  return out;
}

std::vector<GTElement> gt_powers(const GTElement& base, std::span<const Scalar> exps,
                                 ExecutionPolicy policy) {
  std::vector<GTElement> out(exps.size());
  for_each_index(exps.size(), policy, [&](size_t i) { out[i] = gt_exp(base, exps[i]); });
  return out;
}

G1Element weighted_sum(std::span<const Scalar> weights, std::span<const G1Element> points,
                       ExecutionPolicy policy) {
  if (weights.size() != points.size()) {
    throw Error(ErrorCode::kLengthMismatch, "weighted_sum: weights and points differ in length");
  }
  std::vector<G1Element> terms(points.size());
  for_each_index(points.size(), policy,
                 [&](size_t i) { terms[i] = g1_mul(weights[i], points[i]); });
  G1Element sum;
  for (const auto& t : terms) sum = sum + t;
  return sum;
}

std::vector<Scalar> transcript_hashes(ByteView prefix, std::span<const GTElement> ys,
                                      const ScalarHash& hash, ExecutionPolicy policy) {
  std::vector<Scalar> out(ys.size());
  for_each_index(ys.size(), policy, [&](size_t i) {
    Bytes input(prefix.begin(), prefix.end());
    const auto y = ys[i].to_bytes();
    input.insert(input.end(), y.begin(), y.end());
    out[i] = hash(input);
  });
  return out;
}

}  // namespace clring::kernels
