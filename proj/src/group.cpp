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

#include "clring/group.hpp"

#include <cstring>
#include <string>

#include "clring/op_counter.hpp"

namespace clring {
namespace {

constexpr char kG1HashDstPrefix[] = "CLRING-V01-BLS12381G1_XMD:SHA-256_SSWU_RO_TAG";
constexpr char kScalarHashDst[] = "CLRING-V01-BLS12381FR_XMD:SHA-256_EXPAND_REDUCE_H2_";

// 48 bytes = 384 bits reduced modulo a 255-bit order: statistical distance
// from uniform below 2^-128.
constexpr size_t kWideScalarBytes = 48;

blst_scalar scalar_of(const Scalar& k) {
  blst_scalar s;
  blst_scalar_from_fr(&s, &k.raw());
  return s;
}

blst_p1_affine to_affine(const blst_p1& p) {
  blst_p1_affine a;
  blst_p1_to_affine(&a, &p);
  return a;
}

blst_p2_affine to_affine(const blst_p2& p) {
  blst_p2_affine a;
  blst_p2_to_affine(&a, &p);
  return a;
}

blst_fp12 raw_pairing(const blst_p1& p, const blst_p2& q) {
  if (blst_p1_is_inf(&p) || blst_p2_is_inf(&q)) return *blst_fp12_one();
  const blst_p1_affine pa = to_affine(p);
  const blst_p2_affine qa = to_affine(q);
  blst_fp12 miller;
  blst_miller_loop(&miller, &qa, &pa);
  blst_fp12 out;
  blst_final_exp(&out, &miller);
  return out;
}

blst_p1 decode_g1_point(ByteView in) {
  if (in.size() != G1Element::kEncodedSize) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "G1 encoding must be 48 bytes");
  }
  blst_p1_affine affine;
  switch (blst_p1_uncompress(&affine, in.data())) {
    case BLST_SUCCESS:
      break;
    case BLST_POINT_NOT_ON_CURVE:
      throw Error(ErrorCode::kOffCurvePoint, "G1 point not on curve");
    default:
      throw Error(ErrorCode::kNonCanonicalEncoding, "bad G1 encoding");
  }
  if (!blst_p1_affine_in_g1(&affine)) {
    throw Error(ErrorCode::kOffCurvePoint, "G1 point outside the prime-order subgroup");
  }
  blst_p1 p;
  blst_p1_from_affine(&p, &affine);
  G1Element::Encoding again;
  blst_p1_compress(again.data(), &p);
  if (std::memcmp(again.data(), in.data(), again.size()) != 0) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "G1 encoding is not canonical");
  }
  return p;
}

blst_p2 decode_g2_point(ByteView in) {
  if (in.size() != G1Element::kImageEncodedSize) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "G2 encoding must be 96 bytes");
  }
  blst_p2_affine affine;
  switch (blst_p2_uncompress(&affine, in.data())) {
    case BLST_SUCCESS:
      break;
    case BLST_POINT_NOT_ON_CURVE:
      throw Error(ErrorCode::kOffCurvePoint, "G2 point not on curve");
    default:
      throw Error(ErrorCode::kNonCanonicalEncoding, "bad G2 encoding");
  }
  if (!blst_p2_affine_in_g2(&affine)) {
    throw Error(ErrorCode::kOffCurvePoint, "G2 point outside the prime-order subgroup");
  }
  blst_p2 p;
  blst_p2_from_affine(&p, &affine);
  std::array<uint8_t, G1Element::kImageEncodedSize> again;
  blst_p2_compress(again.data(), &p);
  if (std::memcmp(again.data(), in.data(), again.size()) != 0) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "G2 encoding is not canonical");
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() { std::memset(&v_, 0, sizeof(v_)); }

Scalar Scalar::one() { return from_u64(1); }

Scalar Scalar::from_u64(uint64_t v) {
  const uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.v_, limbs);
  return s;
}

Scalar Scalar::from_bytes(ByteView be) {
  if (be.size() != kEncodedSize) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "scalar encoding must be 32 bytes");
  }
  blst_scalar s;
  blst_scalar_from_bendian(&s, be.data());
  if (!blst_scalar_fr_check(&s)) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "scalar not below the group order");
  }
  Scalar out;
  blst_fr_from_scalar(&out.v_, &s);
  return out;
}

Scalar Scalar::reduce(ByteView be) {
  blst_scalar s;
  blst_scalar_from_be_bytes(&s, be.data(), be.size());
  Scalar out;
  blst_fr_from_scalar(&out.v_, &s);
  return out;
}

Scalar::Encoding Scalar::to_bytes() const {
  Encoding out;
  const blst_scalar s = scalar_of(*this);
  blst_bendian_from_scalar(out.data(), &s);
  return out;
}

bool Scalar::is_zero() const { return *this == Scalar(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kZeroScalar, "zero has no inverse");
  Scalar out;
  blst_fr_eucl_inverse(&out.v_, &v_);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  blst_fr_cneg(&out.v_, &v_, true);
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_add(&out.v_, &a.v_, &b.v_);
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_sub(&out.v_, &a.v_, &b.v_);
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_mul(&out.v_, &a.v_, &b.v_);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return std::memcmp(&a.v_, &b.v_, sizeof(a.v_)) == 0;
}

const Scalar::Encoding& group_order_bytes() {
  static const Scalar::Encoding kOrder = {
      0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
      0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
      0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};
  return kOrder;
}

// ---------------------------------------------------------------- G1Element

G1Element::G1Element() : image_(blst_p2{}) { std::memset(&point_, 0, sizeof(point_)); }

G1Element G1Element::generator() {
  return G1Element(*blst_p1_generator(), *blst_p2_generator());
}

bool G1Element::is_identity() const { return blst_p1_is_inf(&point_); }

G1Element G1Element::without_image() const { return G1Element(point_, std::nullopt); }

G1Element G1Element::operator-() const {
  G1Element out = *this;
  blst_p1_cneg(&out.point_, true);
  if (out.image_) blst_p2_cneg(&*out.image_, true);
  return out;
}

G1Element operator+(const G1Element& a, const G1Element& b) {
  blst_p1 sum;
  blst_p1_add_or_double(&sum, &a.point_, &b.point_);
  std::optional<blst_p2> image;
  if (a.image_ && b.image_) {
    blst_p2 s2;
    blst_p2_add_or_double(&s2, &*a.image_, &*b.image_);
    image = s2;
  }
  return G1Element(sum, image);
}

G1Element operator-(const G1Element& a, const G1Element& b) { return a + (-b); }

bool operator==(const G1Element& a, const G1Element& b) {
  return blst_p1_is_equal(&a.point_, &b.point_);
}

G1Element::Encoding G1Element::to_bytes() const {
  Encoding out;
  blst_p1_compress(out.data(), &point_);
  return out;
}

G1Element G1Element::from_bytes(ByteView in) {
  return G1Element(decode_g1_point(in), std::nullopt);
}

Bytes G1Element::to_bytes_with_image() const {
  if (!image_) {
    throw Error(ErrorCode::kInvalidElement, "element has no G2 image");
  }
  Bytes out(kWithImageEncodedSize);
  blst_p1_compress(out.data(), &point_);
  blst_p2_compress(out.data() + kEncodedSize, &*image_);
  return out;
}

G1Element G1Element::from_bytes_with_image(ByteView in) {
  if (in.size() != kWithImageEncodedSize) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "element with image must be 144 bytes");
  }
  const blst_p1 p = decode_g1_point(in.first(kEncodedSize));
  const blst_p2 q = decode_g2_point(in.subspan(kEncodedSize));
  const blst_fp12 lhs = raw_pairing(p, *blst_p2_generator());
  const blst_fp12 rhs = raw_pairing(*blst_p1_generator(), q);
  if (!blst_fp12_is_equal(&lhs, &rhs)) {
    throw Error(ErrorCode::kInvalidElement, "G2 image does not match the G1 point");
  }
  return G1Element(p, q);
}

// ---------------------------------------------------------------- GTElement

GTElement::GTElement() : v_(*blst_fp12_one()) {}

bool GTElement::is_one() const { return blst_fp12_is_one(&v_); }

// Target-group elements are unitary, so the inverse is the conjugate.
GTElement GTElement::inverse() const {
  GTElement out = *this;
  blst_fp12_conjugate(&out.v_);
  return out;
}

GTElement operator*(const GTElement& a, const GTElement& b) {
  GTElement out;
  blst_fp12_mul(&out.v_, &a.v_, &b.v_);
  return out;
}

GTElement operator/(const GTElement& a, const GTElement& b) { return a * b.inverse(); }

GTElement& GTElement::operator*=(const GTElement& b) {
  blst_fp12_mul(&v_, &v_, &b.v_);
  return *this;
}

bool operator==(const GTElement& a, const GTElement& b) {
  return blst_fp12_is_equal(&a.v_, &b.v_);
}

GTElement::Encoding GTElement::to_bytes() const {
  Encoding out;
  blst_bendian_from_fp12(out.data(), &v_);
  return out;
}

GTElement GTElement::from_bytes(ByteView in) {
  if (in.size() != kEncodedSize) {
    throw Error(ErrorCode::kNonCanonicalEncoding, "GT encoding must be 576 bytes");
  }
  blst_fp12 v;
  const uint8_t* cursor = in.data();
  // Coordinate order matches blst_bendian_from_fp12.
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 2; ++j) {
      for (size_t k = 0; k < 2; ++k) {
        blst_fp& fp = v.fp6[j].fp2[i].fp[k];
        blst_fp_from_bendian(&fp, cursor);
        uint8_t again[48];
        blst_bendian_from_fp(again, &fp);
        if (std::memcmp(again, cursor, sizeof(again)) != 0) {
          throw Error(ErrorCode::kNonCanonicalEncoding, "GT coordinate not below p");
        }
        cursor += 48;
      }
    }
  }
  if (!blst_fp12_in_group(&v)) {
    throw Error(ErrorCode::kOffCurvePoint, "not a member of the order-q target group");
  }
  return GTElement(v);
}

// ---------------------------------------------------------------- operations

GTElement pair(const G1Element& a, const G1Element& b) {
  const G1Element* left = nullptr;
  const blst_p2* right = nullptr;
  if (b.image()) {
    left = &a;
    right = &*b.image();
  } else if (a.image()) {
    left = &b;
    right = &*a.image();
  } else {
    throw Error(ErrorCode::kInvalidElement,
                "pair() needs one argument derived from the generator");
  }
  detail::count(detail::Op::kPairing);
  return GTElement(raw_pairing(left->raw(), *right));
}

G1Element g1_mul(const Scalar& k, const G1Element& a) {
  detail::count(detail::Op::kG1Mul);
  const blst_scalar s = scalar_of(k);
  blst_p1 p;
  blst_p1_mult(&p, &a.point_, s.b, 255);
  std::optional<blst_p2> image;
  if (a.image_) {
    blst_p2 q;
    blst_p2_mult(&q, &*a.image_, s.b, 255);
    image = q;
  }
  return G1Element(p, image);
}

GTElement gt_exp(const GTElement& b, const Scalar& k) {
  detail::count(detail::Op::kGtExp);
  const blst_scalar s = scalar_of(k);  // little-endian bytes
  blst_fp12 acc = *blst_fp12_one();
  bool started = false;
  for (int bit = 255; bit >= 0; --bit) {
    if (started) blst_fp12_cyclotomic_sqr(&acc, &acc);
    if ((s.b[bit / 8] >> (bit % 8)) & 1) {
      blst_fp12_mul(&acc, &acc, &b.v_);
      started = true;
    }
  }
  return GTElement(acc);
}

G1Element hash_to_g1(uint8_t domain_tag, ByteView msg) {
  detail::count(detail::Op::kMapToPoint);
  static const char kHex[] = "0123456789ABCDEF";
  std::string dst = kG1HashDstPrefix;
  dst += kHex[domain_tag >> 4];
  dst += kHex[domain_tag & 0xf];
  dst += '_';

  Bytes input(msg.begin(), msg.end());
  for (unsigned counter = 0;; ++counter) {
    if (counter > 0) input.push_back(static_cast<uint8_t>(counter));
    blst_p1 p;
    blst_hash_to_g1(&p, input.data(), input.size(),
                    reinterpret_cast<const uint8_t*>(dst.data()), dst.size(), nullptr, 0);
    if (!blst_p1_is_inf(&p)) return G1Element(p, std::nullopt);
  }
}

Scalar hash_to_scalar(ByteView msg) {
  Bytes input(msg.begin(), msg.end());
  for (unsigned counter = 0;; ++counter) {
    if (counter > 0) input.push_back(static_cast<uint8_t>(counter));
    uint8_t wide[kWideScalarBytes];
    blst_expand_message_xmd(wide, sizeof(wide), input.data(), input.size(),
                            reinterpret_cast<const uint8_t*>(kScalarHashDst),
                            sizeof(kScalarHashDst) - 1);
    Scalar s = Scalar::reduce(wide);
    if (!s.is_zero()) return s;
  }
}

Scalar random_scalar(RandomSource& rng) {
  for (;;) {
    uint8_t wide[kWideScalarBytes];
    rng.fill(wide);
    Scalar s = Scalar::reduce(wide);
    if (!s.is_zero()) return s;
  }
}

}  // namespace clring
