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

#include <array>
#include <cstdint>
#include <span>

#include "clring/bytes.hpp"

namespace clring {

// Source of uniformly random bytes. Injected into every randomized
// operation so that tests can replay a fixed seed.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<uint8_t> out) = 0;
};

// Deterministic stream: SHA-256(seed || counter) blocks. Test mode only.
class SeededRng final : public RandomSource {
 public:
  explicit SeededRng(uint64_t seed);
  explicit SeededRng(ByteView seed);

  void fill(std::span<uint8_t> out) override;

 private:
  void refill();

  std::array<uint8_t, 32> key_{};
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t used_ = 32;
};

// Operating-system entropy (getrandom(2)). Throws kEntropyUnavailable when
// the kernel refuses to deliver bytes.
class SystemRng final : public RandomSource {
 public:
  void fill(std::span<uint8_t> out) override;
};

}  // namespace clring
