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

// Bilinear-group engine over BLS12-381.
//
// The scheme is written for a symmetric map e: G1 x G1 -> GT, which BLS12-381
// (a Type-3 curve) does not provide. Convention used throughout:
//
//   * Every scheme element (P, P0, Q_i, D_i, P_i, U, V) is a point of the
//     curve's first group G1.
//   * Elements derived from the generator P by scalar multiplication carry
//     their "G2 image": the point of the second group with the same discrete
//     logarithm with respect to the fixed G2 generator. The image follows the
//     element through g1_mul, addition and negation, and is dropped as soon as
//     an operand without one is involved (e.g. a hashed point).
//   * pair(a, b) evaluates the Type-3 pairing on (a, image(b)), or on
//     (b, image(a)) when only a carries an image. Both choices give
//     e(P1, P2)^(log a * log b), so pair() is symmetric and bilinear exactly
//     like the symmetric map it stands in for. Pairing two elements that both
//     lack an image is an invalid-element error; the scheme never needs it.
//
// Canonical encodings: G1 compressed (48 bytes), G2 image compressed
// (96 bytes), GT as twelve big-endian base-field coordinates (576 bytes),
// scalars big-endian (32 bytes).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include <blst.h>

#include "clring/bytes.hpp"
#include "clring/errors.hpp"
#include "clring/rng.hpp"

namespace clring {

enum class CurveId : uint16_t {
  kBls12_381 = 1,
};

// Domain tags for the two map-to-point hashes.
inline constexpr uint8_t kIdentityHashTag = 0x01;  // H1
inline constexpr uint8_t kContextHashTag = 0x03;   // H3

class Scalar {
 public:
  static constexpr size_t kEncodedSize = 32;
  using Encoding = std::array<uint8_t, kEncodedSize>;

  Scalar();

  static Scalar zero() { return Scalar(); }
  static Scalar one();
  static Scalar from_u64(uint64_t v);
  // Strict: the input must be exactly 32 bytes and below the group order.
  static Scalar from_bytes(ByteView be);
  // Reduces an arbitrary-length big-endian integer modulo the group order.
  static Scalar reduce(ByteView be);

  Encoding to_bytes() const;
  bool is_zero() const;
  // Multiplicative inverse modulo q; throws kZeroScalar for 0.
  Scalar inverse() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  const blst_fr& raw() const { return v_; }

 private:
  blst_fr v_;
};

// Big-endian encoding of the prime group order q.
const Scalar::Encoding& group_order_bytes();

class G1Element {
 public:
  static constexpr size_t kEncodedSize = 48;
  static constexpr size_t kImageEncodedSize = 96;
  static constexpr size_t kWithImageEncodedSize = kEncodedSize + kImageEncodedSize;
  using Encoding = std::array<uint8_t, kEncodedSize>;

  // The identity O; it carries the (identity) G2 image.
  G1Element();

  static G1Element identity() { return G1Element(); }
  static G1Element generator();

  bool is_identity() const;
  bool has_image() const { return image_.has_value(); }
  G1Element without_image() const;

  G1Element operator-() const;
  friend G1Element operator+(const G1Element& a, const G1Element& b);
  friend G1Element operator-(const G1Element& a, const G1Element& b);
  // Compares the G1 points. Images are consistent by construction or
  // validated on decode, so they never disagree for equal points.
  friend bool operator==(const G1Element& a, const G1Element& b);

  Encoding to_bytes() const;
  // Strict decode of a compressed G1 point (no image attached).
  static G1Element from_bytes(ByteView in);

  // 144 bytes: compressed G1 point followed by its compressed G2 image.
  // Throws kInvalidElement if the element has no image.
  Bytes to_bytes_with_image() const;
  // Strict decode; also checks e(a, P2) == e(P1, image), kInvalidElement if not.
  static G1Element from_bytes_with_image(ByteView in);

  const blst_p1& raw() const { return point_; }
  const std::optional<blst_p2>& image() const { return image_; }

 private:
  friend G1Element g1_mul(const Scalar& k, const G1Element& a);
  friend G1Element hash_to_g1(uint8_t domain_tag, ByteView msg);

  G1Element(const blst_p1& p, std::optional<blst_p2> image)
      : point_(p), image_(image) {}

  blst_p1 point_;
  std::optional<blst_p2> image_;
};

class GTElement {
 public:
  static constexpr size_t kEncodedSize = 576;
  using Encoding = std::array<uint8_t, kEncodedSize>;

  // The multiplicative identity 1_GT.
  GTElement();

  static GTElement one() { return GTElement(); }
  bool is_one() const;

  GTElement inverse() const;
  friend GTElement operator*(const GTElement& a, const GTElement& b);
  friend GTElement operator/(const GTElement& a, const GTElement& b);
  GTElement& operator*=(const GTElement& b);
  friend bool operator==(const GTElement& a, const GTElement& b);

  Encoding to_bytes() const;
  // Strict decode: canonical coordinates, member of the order-q subgroup.
  static GTElement from_bytes(ByteView in);

 private:
  friend GTElement pair(const G1Element& a, const G1Element& b);
  friend GTElement gt_exp(const GTElement& b, const Scalar& k);

  explicit GTElement(const blst_fp12& v) : v_(v) {}

  blst_fp12 v_;
};

// Bilinear map; counted as one pairing.
GTElement pair(const G1Element& a, const G1Element& b);

// k * a; counted as one G1 scalar multiplication (the G2 image, when present,
// is carried along inside the same call).
G1Element g1_mul(const Scalar& k, const G1Element& a);

// b^k; counted as one GT exponentiation.
GTElement gt_exp(const GTElement& b, const Scalar& k);

// Map-to-point hash into G1 (RFC 9380 SSWU, SHA-256), never the identity.
// Distinct tags give independent functions. Counted as one MapToPoint hash.
G1Element hash_to_g1(uint8_t domain_tag, ByteView msg);

// Hash onto Z_q^* by expand-and-reduce; never zero. Not a MapToPoint hash, so
// it is not counted.
Scalar hash_to_scalar(ByteView msg);

// Uniform element of Z_q^*.
Scalar random_scalar(RandomSource& rng);

}  // namespace clring
