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

#include <string>
#include <vector>

#include "clring/rng.hpp"
#include "clring/scheme.hpp"

namespace clring::test {

struct World {
  SystemParams params;
  MasterKey master;
  std::vector<Identity> ids;
  std::vector<PublicKey> keys;
  std::vector<PrivateKey> secrets;

  Ring ring() const { return Ring(ids, keys); }
};

inline World make_world(size_t n, RandomSource& rng, const std::string& prefix = "member-") {
  World w;
  std::tie(w.params, w.master) = setup(kDefaultSecurityBits, rng);
  for (size_t i = 0; i < n; ++i) {
    Identity id(prefix + std::to_string(i));
    const SecretValue x = set_secret_value(w.params, rng);
    w.secrets.push_back(
        set_private_key(x, extract_partial_private_key(w.params, w.master, id)));
    w.keys.push_back(set_public_key(w.params, x));
    w.ids.push_back(std::move(id));
  }
  return w;
}

inline Bytes random_bytes(RandomSource& rng, size_t len) {
  Bytes out(len);
  rng.fill(out);
  return out;
}

}  // namespace clring::test
