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

// Versioned binary envelopes for every key, parameter, ring and signature
// object:
//
//   magic "CLRG" | version u8 | kind u8 | curve id u16 (big-endian) | payload
//
// There is exactly one accepted encoding per object. Decoding checks group
// membership, scalar ranges and object invariants before returning.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "clring/bytes.hpp"
#include "clring/scheme.hpp"

namespace clring::codec {

enum class Kind : uint8_t {
  kParams = 1,
  kMasterKey = 2,
  kPartialKey = 3,
  kSecretValue = 4,
  kPrivateKey = 5,
  kPublicKey = 6,
  kRing = 7,
  kSignature = 8,
};

inline constexpr std::array<uint8_t, 4> kMagic = {'C', 'L', 'R', 'G'};
inline constexpr uint8_t kVersion = 1;
inline constexpr size_t kHeaderSize = 8;

std::string_view kind_name(Kind kind);

struct Envelope {
  Kind kind;
  CurveId curve = CurveId::kBls12_381;
  Bytes payload;
};

Bytes encode_envelope(const Envelope& env);
// Throws kMalformedEnvelope for truncation, bad magic, unknown version, kind
// or curve.
Envelope decode_envelope(ByteView bytes);

Bytes encode(const SystemParams& params);
Bytes encode(const MasterKey& key);
Bytes encode(const PartialPrivateKey& key);
Bytes encode(const SecretValue& key);
Bytes encode(const PrivateKey& key);
Bytes encode(const PublicKey& key);
Bytes encode(const Ring& ring);
Bytes encode(const RingSignature& sig);

// decode<T> throws kWrongKind when the envelope holds another kind.
template <typename T>
T decode(ByteView bytes);

template <> SystemParams decode<SystemParams>(ByteView bytes);
template <> MasterKey decode<MasterKey>(ByteView bytes);
template <> PartialPrivateKey decode<PartialPrivateKey>(ByteView bytes);
template <> SecretValue decode<SecretValue>(ByteView bytes);
template <> PrivateKey decode<PrivateKey>(ByteView bytes);
template <> PublicKey decode<PublicKey>(ByteView bytes);
template <> Ring decode<Ring>(ByteView bytes);
template <> RingSignature decode<RingSignature>(ByteView bytes);

// Lowercase hex; from_hex rejects uppercase, odd lengths and non-hex
// characters with kInvalidCharacter.
std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view text);

// Human-auditable ring file:
//   {"members": [{"identity": "<utf-8 text>", "public_key": "<hex>"}, ...]}
// Identities that are not printable text use "identity_hex" instead.
nlohmann::json ring_to_json(const Ring& ring);
Ring ring_from_json(const nlohmann::json& doc);

}  // namespace clring::codec
