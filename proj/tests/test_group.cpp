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

#include <gtest/gtest.h>
#include <gmpxx.h>

#include <array>
#include <map>
#include <set>
#include <thread>

#include "clring/codec.hpp"
#include "clring/group.hpp"
#include "clring/kernels.hpp"
#include "clring/op_counter.hpp"
#include "clring/rng.hpp"
#include "fixtures.hpp"

namespace clring {
namespace {

// BLS12-381 subgroup order, written out independently of the backend.
const mpz_class kOrder(
    "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);

mpz_class to_mpz(const Scalar& s) {
  const auto bytes = s.to_bytes();
  mpz_class out;
  mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return out;
}

Scalar from_mpz(const mpz_class& v) {
  std::array<uint8_t, 32> buf{};
  size_t count = 0;
  std::array<uint8_t, 32> tmp{};
  mpz_export(tmp.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  std::copy(tmp.begin(), tmp.begin() + count, buf.end() - count);
  return Scalar::from_bytes(buf);
}

TEST(Scalar, OrderMatchesReference) {
  EXPECT_EQ(to_mpz(Scalar::zero()), 0);
  const auto& order = group_order_bytes();
  mpz_class backend;
  mpz_import(backend.get_mpz_t(), order.size(), 1, 1, 1, 0, order.data());
  EXPECT_EQ(backend, kOrder);
}

TEST(Scalar, ArithmeticAgreesWithBigIntegers) {
  SeededRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    const mpz_class ma = to_mpz(a), mb = to_mpz(b);
    EXPECT_EQ(to_mpz(a + b), mpz_class((ma + mb) % kOrder));
    EXPECT_EQ(to_mpz(a * b), mpz_class((ma * mb) % kOrder));
    EXPECT_EQ(to_mpz(a - b), mpz_class(((ma - mb) % kOrder + kOrder) % kOrder));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), ma.get_mpz_t(), kOrder.get_mpz_t());
    EXPECT_EQ(to_mpz(a.inverse()), inv);
  }
}

TEST(Scalar, StrictDecoding) {
  EXPECT_THROW(Scalar::from_bytes(group_order_bytes()), Error);
  std::array<uint8_t, 31> short_buf{};
  try {
    Scalar::from_bytes(short_buf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonCanonicalEncoding);
  }
  EXPECT_THROW(Scalar::zero().inverse(), Error);
  const Scalar s = Scalar::from_u64(12345);
  EXPECT_EQ(Scalar::from_bytes(s.to_bytes()), s);
}

TEST(Pairing, BilinearAgainstExponentOracle) {
  SeededRng rng(1);
  const G1Element p = G1Element::generator();
  const GTElement g = pair(p, p);
  EXPECT_FALSE(g.is_one());
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    const Scalar ab = from_mpz(to_mpz(a) * to_mpz(b) % kOrder);
    const GTElement lhs = pair(g1_mul(a, p), g1_mul(b, p));
    ASSERT_EQ(lhs, gt_exp(g, ab)) << "sample " << i;
    ASSERT_EQ(pair(g1_mul(b, p), g1_mul(a, p)), lhs);
  }
}

TEST(Pairing, AdditiveInEachArgument) {
  SeededRng rng(2);
  const G1Element p = G1Element::generator();
  const G1Element h = hash_to_g1(kIdentityHashTag, as_bytes("alice"));
  for (int i = 0; i < 20; ++i) {
    const G1Element a = g1_mul(random_scalar(rng), p);
    const G1Element b = g1_mul(random_scalar(rng), p);
    EXPECT_EQ(pair(a + b, h), pair(a, h) * pair(b, h));
    EXPECT_EQ(pair(h, a + b), pair(h, a) * pair(h, b));
    EXPECT_EQ(pair(-a, h), pair(a, h).inverse());
  }
}

TEST(Pairing, RequiresAnImage) {
  const G1Element h1 = hash_to_g1(kIdentityHashTag, as_bytes("a"));
  const G1Element h2 = hash_to_g1(kIdentityHashTag, as_bytes("b"));
  EXPECT_FALSE(h1.has_image());
  try {
    pair(h1, h2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidElement);
  }
  EXPECT_FALSE((G1Element::generator() + h1).has_image());
  EXPECT_TRUE(g1_mul(Scalar::from_u64(5), G1Element::generator()).has_image());
}

TEST(Pairing, IdentityGivesOne) {
  const G1Element p = G1Element::generator();
  EXPECT_TRUE(pair(G1Element::identity(), p).is_one());
  EXPECT_TRUE(pair(p, G1Element::identity()).is_one());
  EXPECT_TRUE(g1_mul(Scalar::zero(), p).is_identity());
}

TEST(GtExp, MatchesRepeatedMultiplication) {
  const G1Element p = G1Element::generator();
  const GTElement g = pair(p, p);
  GTElement acc = GTElement::one();
  for (uint64_t k = 0; k < 20; ++k) {
    EXPECT_EQ(gt_exp(g, Scalar::from_u64(k)), acc);
    acc *= g;
  }
  EXPECT_TRUE(gt_exp(g, Scalar::zero() - Scalar::one()) * g == GTElement::one());
}

TEST(Counter, CountsEachOperation) {
  const G1Element p = G1Element::generator();
  counter_reset();
  const GTElement g = pair(p, p);
  const G1Element q = g1_mul(Scalar::from_u64(3), p);
  gt_exp(g, Scalar::from_u64(3));
  hash_to_g1(kIdentityHashTag, as_bytes("x"));
  hash_to_scalar(as_bytes("not a map-to-point"));
  (void)(q + p);
  EXPECT_EQ(counter_report(), (OpCounter{1, 1, 1, 1}));
  {
    CounterPause pause;
    pair(p, p);
    g1_mul(Scalar::one(), p);
  }
  EXPECT_EQ(counter_report(), (OpCounter{1, 1, 1, 1}));
  counter_reset();
  EXPECT_EQ(counter_report(), OpCounter{});
}

TEST(Counter, IsPerThread) {
  counter_reset();
  std::thread t([] { pair(G1Element::generator(), G1Element::generator()); });
  t.join();
  EXPECT_EQ(counter_report().pairings, 0u);
}

TEST(HashToG1, DeterministicAndDomainSeparated) {
  const G1Element a = hash_to_g1(kIdentityHashTag, as_bytes("alice"));
  EXPECT_EQ(a, hash_to_g1(kIdentityHashTag, as_bytes("alice")));
  EXPECT_FALSE(a == hash_to_g1(kContextHashTag, as_bytes("alice")));
  EXPECT_FALSE(a == hash_to_g1(kIdentityHashTag, as_bytes("bob")));
  EXPECT_FALSE(a.is_identity());
  EXPECT_EQ(G1Element::from_bytes(a.to_bytes()), a);
}

TEST(HashToScalar, LowByteUniform) {
  std::array<int, 256> bins{};
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    Bytes in;
    append_u32_be(in, static_cast<uint32_t>(i));
    ++bins[hash_to_scalar(in).to_bytes().back()];
  }
  const double expected = samples / 256.0;
  double chi2 = 0;
  for (int b : bins) chi2 += (b - expected) * (b - expected) / expected;
  // 255 degrees of freedom; mean + 5 standard deviations.
  EXPECT_LT(chi2, 255 + 5 * std::sqrt(2 * 255.0));
}

TEST(Rng, SeededIsReproducible) {
  SeededRng a(42), b(42), c(43);
  const Bytes x = test::random_bytes(a, 100), y = test::random_bytes(b, 100);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, test::random_bytes(c, 100));
  SeededRng d(42);
  Bytes pieces = test::random_bytes(d, 7);
  append(pieces, test::random_bytes(d, 93));
  EXPECT_EQ(pieces, x);
}

TEST(Rng, SystemProducesDistinctScalars) {
  SystemRng rng;
  std::set<Bytes> seen;
  for (int i = 0; i < 50; ++i) {
    const auto bytes = random_scalar(rng).to_bytes();
    seen.emplace(bytes.begin(), bytes.end());
  }
  EXPECT_EQ(seen.size(), 50u);
}

TEST(Encoding, G1FixedLengthAndStrict) {
  SeededRng rng(5);
  const G1Element a = g1_mul(random_scalar(rng), G1Element::generator());
  const auto bytes = a.to_bytes();
  EXPECT_EQ(bytes.size(), 48u);
  EXPECT_EQ(codec::to_hex(bytes).size(), 96u);
  EXPECT_EQ(G1Element::from_bytes(bytes), a);

  auto no_compress = bytes;
  no_compress[0] &= 0x7f;
  EXPECT_THROW(G1Element::from_bytes(no_compress), Error);

  // x coordinate >= field modulus is non-canonical.
  std::array<uint8_t, 48> big{};
  big.fill(0xff);
  big[0] = 0x9f;
  EXPECT_THROW(G1Element::from_bytes(big), Error);

  std::array<uint8_t, 48> infinity{};
  infinity[0] = 0xc0;
  EXPECT_TRUE(G1Element::from_bytes(infinity).is_identity());
  infinity[47] = 1;
  EXPECT_THROW(G1Element::from_bytes(infinity), Error);
}

TEST(Encoding, G1RejectsOffCurve) {
  int rejected = 0;
  SeededRng rng(6);
  for (int i = 0; i < 100; ++i) {
    Bytes raw = test::random_bytes(rng, 48);
    raw[0] = static_cast<uint8_t>((raw[0] & 0x1f) | 0x80);
    try {
      const G1Element p = G1Element::from_bytes(raw);
      EXPECT_EQ(Bytes(p.to_bytes().begin(), p.to_bytes().end()), raw);
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kOffCurvePoint ||
                  e.code() == ErrorCode::kNonCanonicalEncoding);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 90);
}

TEST(Encoding, ImageRoundTripAndConsistency) {
  SeededRng rng(7);
  const G1Element a = g1_mul(random_scalar(rng), G1Element::generator());
  const G1Element b = g1_mul(random_scalar(rng), G1Element::generator());
  const Bytes enc = a.to_bytes_with_image();
  EXPECT_EQ(enc.size(), 144u);
  const G1Element back = G1Element::from_bytes_with_image(enc);
  EXPECT_EQ(back, a);
  EXPECT_TRUE(back.has_image());
  EXPECT_EQ(pair(back, hash_to_g1(1, as_bytes("z"))), pair(a, hash_to_g1(1, as_bytes("z"))));

  Bytes mixed(enc.begin(), enc.begin() + 48);
  const Bytes other = b.to_bytes_with_image();
  mixed.insert(mixed.end(), other.begin() + 48, other.end());
  EXPECT_THROW(G1Element::from_bytes_with_image(mixed), Error);
  EXPECT_THROW(hash_to_g1(1, as_bytes("z")).to_bytes_with_image(), Error);
}

TEST(Encoding, GtRoundTripAndMembership) {
  SeededRng rng(8);
  const GTElement g = pair(G1Element::generator(), G1Element::generator());
  const GTElement y = gt_exp(g, random_scalar(rng));
  const auto bytes = y.to_bytes();
  EXPECT_EQ(bytes.size(), 576u);
  EXPECT_EQ(GTElement::from_bytes(bytes), y);
  EXPECT_THROW(GTElement::from_bytes(test::random_bytes(rng, 576)), Error);
  Bytes tweaked(bytes.begin(), bytes.end());
  tweaked[575] ^= 1;
  EXPECT_THROW(GTElement::from_bytes(tweaked), Error);
}

class KernelPolicy : public ::testing::TestWithParam<size_t> {};

TEST_P(KernelPolicy, SerialAndParallelAgree) {
  const size_t n = GetParam();
  SeededRng rng(9);
  std::vector<Bytes> msgs;
  std::vector<Scalar> weights;
  for (size_t i = 0; i < n; ++i) {
    msgs.push_back(test::random_bytes(rng, 16));
    weights.push_back(random_scalar(rng));
  }
  const GTElement g = pair(G1Element::generator(), G1Element::generator());

  counter_reset();
  const auto serial_points = kernels::hash_points(kIdentityHashTag, msgs, ExecutionPolicy::kSerial);
  const auto serial_powers = kernels::gt_powers(g, weights, ExecutionPolicy::kSerial);
  const auto serial_sum = kernels::weighted_sum(weights, serial_points, ExecutionPolicy::kSerial);
  const auto serial_h =
      kernels::transcript_hashes(as_bytes("ctx"), serial_powers, hash_to_scalar,
                                 ExecutionPolicy::kSerial);
  const OpCounter serial_counts = counter_report();

  counter_reset();
  const auto par_points = kernels::hash_points(kIdentityHashTag, msgs, ExecutionPolicy::kParallel);
  const auto par_powers = kernels::gt_powers(g, weights, ExecutionPolicy::kParallel);
  const auto par_sum = kernels::weighted_sum(weights, par_points, ExecutionPolicy::kParallel);
  const auto par_h = kernels::transcript_hashes(as_bytes("ctx"), par_powers, hash_to_scalar,
                                                ExecutionPolicy::kParallel);
  const OpCounter par_counts = counter_report();

  EXPECT_EQ(serial_points, par_points);
  EXPECT_EQ(serial_powers, par_powers);
  EXPECT_EQ(serial_sum, par_sum);
  EXPECT_EQ(serial_h, par_h);
  EXPECT_EQ(serial_counts, par_counts);
  EXPECT_EQ(serial_counts, (OpCounter{0, n, n, n}));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelPolicy, ::testing::Values(0, 1, 2, 7, 33));

TEST(Kernels, ParallelPropagatesErrors) {
  std::vector<Scalar> weights(4, Scalar::one());
  std::vector<G1Element> points(3, G1Element::generator());
  EXPECT_THROW(kernels::weighted_sum(weights, points, ExecutionPolicy::kParallel), Error);
  std::vector<Bytes> msgs(8, Bytes{1});
  EXPECT_THROW(kernels::transcript_hashes(
                   as_bytes("p"), std::vector<GTElement>(8),
                   [](ByteView) -> Scalar { throw Error(ErrorCode::kPrecondition, "boom"); },
                   ExecutionPolicy::kParallel),
               Error);
}

TEST(Kernels, PauseHoldsInsideParallelRegion) {
  std::vector<Bytes> msgs(16, Bytes{1, 2});
  counter_reset();
  {
    CounterPause pause;
    kernels::hash_points(kIdentityHashTag, msgs, ExecutionPolicy::kParallel);
  }
  EXPECT_EQ(counter_report(), OpCounter{});
}

}  // namespace
}  // namespace clring
