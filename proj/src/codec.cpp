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

#include "clring/codec.hpp"

#include <algorithm>

#include "clring/op_counter.hpp"

namespace clring::codec {
namespace {

constexpr uint32_t kMaxIdentityBytes = 1u << 16;

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  ByteView take(size_t n) {
    if (n > data_.size() - pos_) {
      throw Error(ErrorCode::kMalformedEnvelope, "payload truncated");
    }
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  uint8_t u8() { return take(1)[0]; }

  uint32_t u32() {
    ByteView b = take(4);
    return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) | (uint32_t{b[2]} << 8) | b[3];
  }

  size_t remaining() const { return data_.size() - pos_; }

  void finish() const {
    if (pos_ != data_.size()) {
      throw Error(ErrorCode::kMalformedEnvelope, "trailing bytes after payload");
    }
  }

 private:
  ByteView data_;
  size_t pos_ = 0;
};

Bytes wrap(Kind kind, Bytes payload) {
  return encode_envelope(Envelope{kind, CurveId::kBls12_381, std::move(payload)});
}

Reader open(ByteView bytes, Kind expected, Envelope& holder) {
  holder = decode_envelope(bytes);
  if (holder.kind != expected) {
    throw Error(ErrorCode::kWrongKind, "expected " + std::string(kind_name(expected)) +
                                           ", found " + std::string(kind_name(holder.kind)));
  }
  return Reader(holder.payload);
}

Scalar read_nonzero_scalar(Reader& r) {
  Scalar s = Scalar::from_bytes(r.take(Scalar::kEncodedSize));
  if (s.is_zero()) throw Error(ErrorCode::kZeroScalar, "scalar must be nonzero");
  return s;
}

G1Element read_point(Reader& r) { return G1Element::from_bytes(r.take(G1Element::kEncodedSize)); }

G1Element read_point_with_image(Reader& r) {
  return G1Element::from_bytes_with_image(r.take(G1Element::kWithImageEncodedSize));
}

PublicKey read_public_key(Reader& r) {
  G1Element p = read_point_with_image(r);
  if (p.is_identity()) throw Error(ErrorCode::kInvalidElement, "public key is the identity");
  return {p};
}

void put(Bytes& out, const Scalar& s) { append(out, s.to_bytes()); }
void put(Bytes& out, const G1Element& p) { append(out, p.to_bytes()); }

bool printable(ByteView b) {
  return std::all_of(b.begin(), b.end(), [](uint8_t c) { return c >= 0x20 && c < 0x7f; });
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kParams: return "params";
    case Kind::kMasterKey: return "masterkey";
    case Kind::kPartialKey: return "partialkey";
    case Kind::kSecretValue: return "secretvalue";
    case Kind::kPrivateKey: return "privatekey";
    case Kind::kPublicKey: return "publickey";
    case Kind::kRing: return "ring";
    case Kind::kSignature: return "signature";
  }
  return "unknown";
}

Bytes encode_envelope(const Envelope& env) {
  Bytes out(kMagic.begin(), kMagic.end());
  append_u8(out, kVersion);
  append_u8(out, static_cast<uint8_t>(env.kind));
  append_u16_be(out, static_cast<uint16_t>(env.curve));
  append(out, env.payload);
  return out;
}

Envelope decode_envelope(ByteView bytes) {
  if (bytes.size() < kHeaderSize) {
    throw Error(ErrorCode::kMalformedEnvelope, "envelope shorter than its header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::kMalformedEnvelope, "bad magic");
  }
  if (bytes[4] != kVersion) {
    throw Error(ErrorCode::kMalformedEnvelope, "unsupported envelope version");
  }
  const uint8_t kind = bytes[5];
  if (kind < static_cast<uint8_t>(Kind::kParams) || kind > static_cast<uint8_t>(Kind::kSignature)) {
    throw Error(ErrorCode::kMalformedEnvelope, "unknown object kind");
  }
  const uint16_t curve = static_cast<uint16_t>((bytes[6] << 8) | bytes[7]);
  if (curve != static_cast<uint16_t>(CurveId::kBls12_381)) {
    throw Error(ErrorCode::kMalformedEnvelope, "unknown curve id");
  }
  return Envelope{static_cast<Kind>(kind), CurveId::kBls12_381,
                  Bytes(bytes.begin() + kHeaderSize, bytes.end())};
}

// ---------------------------------------------------------------- encode

Bytes encode(const SystemParams& params) {
  Bytes p;
  append(p, params.generator.to_bytes_with_image());
  append(p, params.gt_generator.to_bytes());
  append(p, params.master_public.to_bytes_with_image());
  append_u8(p, static_cast<uint8_t>(params.hash_suite));
  return wrap(Kind::kParams, std::move(p));
}

Bytes encode(const MasterKey& key) {
  Bytes p;
  put(p, key.kappa);
  return wrap(Kind::kMasterKey, std::move(p));
}

Bytes encode(const PartialPrivateKey& key) {
  Bytes p;
  put(p, key.point);
  return wrap(Kind::kPartialKey, std::move(p));
}

Bytes encode(const SecretValue& key) {
  Bytes p;
  put(p, key.value);
  return wrap(Kind::kSecretValue, std::move(p));
}

Bytes encode(const PrivateKey& key) {
  Bytes p;
  put(p, key.secret.value);
  put(p, key.partial.point);
  return wrap(Kind::kPrivateKey, std::move(p));
}

Bytes encode(const PublicKey& key) {
  return wrap(Kind::kPublicKey, key.point.to_bytes_with_image());
}

Bytes encode(const Ring& ring) {
  Bytes p;
  append_u32_be(p, static_cast<uint32_t>(ring.size()));
  for (const auto& id : ring.identities()) append_field(p, id.bytes());
  for (const auto& pk : ring.public_keys()) append(p, pk.point.to_bytes_with_image());
  return wrap(Kind::kRing, std::move(p));
}

Bytes encode(const RingSignature& sig) {
  Bytes p;
  append_u32_be(p, static_cast<uint32_t>(sig.commitments.size()));
  for (const auto& y : sig.commitments) append(p, y.to_bytes());
  put(p, sig.response);
  return wrap(Kind::kSignature, std::move(p));
}

// ---------------------------------------------------------------- decode

template <>
SystemParams decode<SystemParams>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kParams, env);
  SystemParams params;
  params.curve = env.curve;
  params.generator = read_point_with_image(r);
  params.gt_generator = GTElement::from_bytes(r.take(GTElement::kEncodedSize));
  params.master_public = read_point_with_image(r);
  const uint8_t suite = r.u8();
  r.finish();
  if (suite != static_cast<uint8_t>(HashSuite::kSha256V1)) {
    throw Error(ErrorCode::kMalformedEnvelope, "unknown hash suite");
  }
  params.hash_suite = HashSuite::kSha256V1;
  if (params.generator.is_identity() || params.master_public.is_identity()) {
    throw Error(ErrorCode::kInvalidElement, "P and P0 must not be the identity");
  }
  CounterPause pause;
  if (!(pair(params.generator, params.generator) == params.gt_generator)) {
    throw Error(ErrorCode::kInvalidElement, "g does not equal e(P, P)");
  }
  return params;
}

template <>
MasterKey decode<MasterKey>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kMasterKey, env);
  MasterKey key{read_nonzero_scalar(r)};
  r.finish();
  return key;
}

template <>
PartialPrivateKey decode<PartialPrivateKey>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kPartialKey, env);
  PartialPrivateKey key{read_point(r)};
  r.finish();
  if (key.point.is_identity()) {
    throw Error(ErrorCode::kInvalidElement, "partial key is the identity");
  }
  return key;
}

template <>
SecretValue decode<SecretValue>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kSecretValue, env);
  SecretValue key{read_nonzero_scalar(r)};
  r.finish();
  return key;
}

template <>
PrivateKey decode<PrivateKey>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kPrivateKey, env);
  PrivateKey key;
  key.secret.value = read_nonzero_scalar(r);
  key.partial.point = read_point(r);
  r.finish();
  if (key.partial.point.is_identity()) {
    throw Error(ErrorCode::kInvalidElement, "partial key is the identity");
  }
  return key;
}

template <>
PublicKey decode<PublicKey>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kPublicKey, env);
  PublicKey key = read_public_key(r);
  r.finish();
  return key;
}

template <>
Ring decode<Ring>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kRing, env);
  const uint32_t n = r.u32();
  // Each member needs at least 4 + 1 + 144 bytes.
  if (n == 0 || n > r.remaining() / (5 + G1Element::kWithImageEncodedSize)) {
    throw Error(ErrorCode::kMalformedEnvelope, "implausible ring size");
  }
  std::vector<Identity> ids;
  ids.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t len = r.u32();
    if (len == 0 || len > kMaxIdentityBytes) {
      throw Error(ErrorCode::kMalformedEnvelope, "bad identity length");
    }
    ByteView id = r.take(len);
    ids.emplace_back(Bytes(id.begin(), id.end()));
  }
  std::vector<PublicKey> keys;
  keys.reserve(n);
  for (uint32_t i = 0; i < n; ++i) keys.push_back(read_public_key(r));
  r.finish();
  return Ring(std::move(ids), std::move(keys));
}

template <>
RingSignature decode<RingSignature>(ByteView bytes) {
  Envelope env;
  Reader r = open(bytes, Kind::kSignature, env);
  const uint32_t n = r.u32();
  if (n == 0 || n > r.remaining() / GTElement::kEncodedSize) {
    throw Error(ErrorCode::kMalformedEnvelope, "implausible signature size");
  }
  RingSignature sig;
  sig.commitments.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    sig.commitments.push_back(GTElement::from_bytes(r.take(GTElement::kEncodedSize)));
  }
  sig.response = read_point(r);
  r.finish();
  if (!sig.commitments_well_formed()) {
    throw Error(ErrorCode::kInvalidElement, "commitments contain 1_GT or duplicates");
  }
  return sig;
}

// ---------------------------------------------------------------- hex

std::string to_hex(ByteView bytes) {
  static const char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xf];
  }
  return out;
}

Bytes from_hex(std::string_view text) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error(ErrorCode::kInvalidCharacter, std::string("not a lowercase hex digit: '") + c + "'");
  };
  if (text.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidCharacter, "hex string has odd length");
  }
  Bytes out(text.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<uint8_t>((nibble(text[2 * i]) << 4) | nibble(text[2 * i + 1]));
  }
  return out;
}

// ---------------------------------------------------------------- ring JSON

nlohmann::json ring_to_json(const Ring& ring) {
  nlohmann::json members = nlohmann::json::array();
  for (size_t i = 0; i < ring.size(); ++i) {
    const ByteView id = ring.identities()[i].bytes();
    nlohmann::json m;
    if (printable(id)) {
      m["identity"] = std::string(id.begin(), id.end());
    } else {
      m["identity_hex"] = to_hex(id);
    }
    m["public_key"] = to_hex(ring.public_keys()[i].point.to_bytes_with_image());
    members.push_back(std::move(m));
  }
  return nlohmann::json{{"members", std::move(members)}};
}

Ring ring_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("members") || !doc["members"].is_array()) {
    throw Error(ErrorCode::kMalformedEnvelope, "ring JSON needs a \"members\" array");
  }
  std::vector<Identity> ids;
  std::vector<PublicKey> keys;
  for (const auto& m : doc["members"]) {
    if (!m.is_object() || !m.contains("public_key") || !m["public_key"].is_string()) {
      throw Error(ErrorCode::kMalformedEnvelope, "ring member needs a public_key string");
    }
    if (m.contains("identity") && m["identity"].is_string()) {
      ids.emplace_back(m["identity"].get<std::string>());
    } else if (m.contains("identity_hex") && m["identity_hex"].is_string()) {
      ids.emplace_back(from_hex(m["identity_hex"].get<std::string>()));
    } else {
      throw Error(ErrorCode::kMalformedEnvelope, "ring member needs an identity");
    }
    const Bytes pk = from_hex(m["public_key"].get<std::string>());
    G1Element point = G1Element::from_bytes_with_image(pk);
    if (point.is_identity()) {
      throw Error(ErrorCode::kInvalidElement, "public key is the identity");
    }
    keys.push_back({point});
  }
  return Ring(std::move(ids), std::move(keys));
}

}  // namespace clring::codec
