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

#include "clring/rng.hpp"

#include <sys/random.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include <blst.h>

#include "clring/errors.hpp"

namespace clring {

SeededRng::SeededRng(uint64_t seed) {
  uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<uint8_t>(seed >> (56 - 8 * i));
  blst_sha256(key_.data(), buf, sizeof(buf));
}

SeededRng::SeededRng(ByteView seed) { blst_sha256(key_.data(), seed.data(), seed.size()); }

void SeededRng::refill() {
  uint8_t input[40];
  std::memcpy(input, key_.data(), key_.size());
  for (int i = 0; i < 8; ++i) input[32 + i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
  ++counter_;
  blst_sha256(block_.data(), input, sizeof(input));
  used_ = 0;
}

void SeededRng::fill(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (used_ == block_.size()) refill();
    const size_t take = std::min(out.size() - done, block_.size() - used_);
    std::memcpy(out.data() + done, block_.data() + used_, take);
    used_ += take;
    done += take;
  }
}

void SystemRng::fill(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    const ssize_t got = getrandom(out.data() + done, out.size() - done, 0);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kEntropyUnavailable, std::strerror(errno));
    }
    done += static_cast<size_t>(got);
  }
}

}  // namespace clring
