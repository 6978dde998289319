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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// measurable criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clring/attack.hpp"
#include "clring/codec.hpp"
#include "clring/op_counter.hpp"
#include "clring/simulation.hpp"
#include "fixtures.hpp"

namespace {

using namespace clring;
using clock_type = std::chrono::steady_clock;

bool report(int id, const std::string& title, bool pass, const std::string& detail,
            clock_type::time_point start) {
  const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
  std::printf("criterion %d %-28s %s  %s (%.1fs)\n", id, title.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str(), secs);
  std::fflush(stdout);
  return pass;
}

bool completeness() {
  const auto start = clock_type::now();
  SeededRng rng(1001);
  size_t trials = 0, ok = 0;
  for (size_t n : {1, 2, 3, 5, 8}) {
    const auto w = test::make_world(n, rng);
    const Ring ring = w.ring();
    for (size_t s = 0; s < n; ++s) {
      for (int t = 0; t < 50; ++t) {
        const Bytes msg = test::random_bytes(rng, 24);
        ok += verify(w.params, msg, ring, ring_sign(w.params, msg, ring, s, w.secrets[s], rng));
        ++trials;
      }
    }
  }
  return report(1, "completeness", ok == trials,
                std::to_string(ok) + "/" + std::to_string(trials) + " verified", start);
}

bool operation_counts() {
  const auto start = clock_type::now();
  SeededRng rng(1002);
  bool pass = true;
  std::string detail;
  std::vector<uint64_t> pairings;
  for (size_t n : {1, 2, 5, 10}) {
    const auto w = test::make_world(n, rng);
    const Ring ring = w.ring();
    const Bytes msg = to_bytes("count");
    counter_reset();
    const auto sig = ring_sign(w.params, msg, ring, n / 2, w.secrets[n / 2], rng);
    const OpCounter sign = counter_report();
    counter_reset();
    const bool valid = verify(w.params, msg, ring, sig);
    const OpCounter ver = counter_report();
    const OpCounter total = sign + ver;
    const bool row = valid && sign == OpCounter{2, 2 * n + 3, n, n + 1} &&
                     ver == OpCounter{3, 2 * n, 0, n + 1} &&
                     total == OpCounter{5, 4 * n + 3, n, 2 * n + 2};
    pass = pass && row;
    pairings.push_back(total.pairings);
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%zu total=(%llu,%llu,%llu,%llu)%s ", n,
                  static_cast<unsigned long long>(total.pairings),
                  static_cast<unsigned long long>(total.g1_scalar_muls),
                  static_cast<unsigned long long>(total.gt_exps),
                  static_cast<unsigned long long>(total.map_to_point_hashes), row ? "" : "!");
    detail += buf;
  }
  const bool constant =
      std::all_of(pairings.begin(), pairings.end(), [&](uint64_t p) { return p == pairings[0]; });
  detail += constant ? "pairings constant" : "pairings vary";
  return report(2, "operation counts", pass && constant, detail, start);
}

// Two-sample chi-square over 16 bins of the low nibble of each commitment's
// last encoded byte.
double two_sample_chi2(const std::array<int, 16>& a, const std::array<int, 16>& b) {
  double stat = 0;
  for (size_t k = 0; k < 16; ++k) {
    if (a[k] + b[k] > 0) stat += std::pow(a[k] - b[k], 2) / (a[k] + b[k]);
  }
  return stat;
}

bool anonymity() {
  const auto start = clock_type::now();
  SeededRng rng(1003);
  size_t checks = 0, held = 0;
  std::vector<test::World> worlds;
  for (size_t n = 2; n <= 6; ++n) worlds.push_back(test::make_world(n, rng));
  for (int t = 0; t < 100; ++t) {
    const auto& w = worlds[static_cast<size_t>(t % 5)];
    const size_t n = w.ids.size();
    const Ring ring = w.ring();
    const size_t s = static_cast<size_t>(t / 5) % n;
    const Bytes msg = test::random_bytes(rng, 16);
    const auto sig = ring_sign(w.params, msg, ring, s, w.secrets[s], rng);
    for (size_t j = 0; j < n; ++j) {
      held += anonymity_identity_check(w.params, msg, ring, sig, j);
      ++checks;
    }
  }

  constexpr size_t kRing = 3;
  constexpr int kSamples = 500;
  // 15 degrees of freedom: mean 15, variance 30, threshold at 5 sigma.
  const double threshold = 15 + 5 * std::sqrt(30.0);
  const auto w = test::make_world(kRing, rng);
  const Ring ring = w.ring();
  std::array<std::array<std::array<int, 16>, kRing>, 2> hist{};
  for (size_t who = 0; who < 2; ++who) {
    for (int t = 0; t < kSamples; ++t) {
      const Bytes msg = test::random_bytes(rng, 16);
      const auto sig = ring_sign(w.params, msg, ring, who, w.secrets[who], rng);
      for (size_t slot = 0; slot < kRing; ++slot) {
        ++hist[who][slot][sig.commitments[slot].to_bytes().back() & 0x0f];
      }
    }
  }
  double worst = 0;
  for (size_t slot = 0; slot < kRing; ++slot) {
    worst = std::max(worst, two_sample_chi2(hist[0][slot], hist[1][slot]));
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "identity %zu/%zu; max chi2 %.1f < %.1f", held, checks, worst,
                threshold);
  return report(3, "anonymity", held == checks && worst < threshold, buf, start);
}

bool tamper_suite() {
  const auto start = clock_type::now();
  SeededRng rng(1004);
  const auto w = test::make_world(4, rng);
  const auto other = test::make_world(4, rng, "stranger-");
  const Ring ring = w.ring();
  const Ring other_ring(other.ids, [&] {
    std::vector<PublicKey> keys;
    for (int i = 0; i < 4; ++i) keys.push_back(set_public_key(w.params, set_secret_value(w.params, rng)));
    return keys;
  }());

  std::array<int, 6> rejected{};
  const std::array<const char*, 6> names = {"msg-bit", "ring-order", "add/remove",
                                            "V",       "y_i",        "other-ring"};
  const int trials = 20;
  auto rejects = [&](const std::function<bool()>& fn) {
    try {
      return !fn();
    } catch (const Error&) {
      return true;
    }
  };
  for (int t = 0; t < trials; ++t) {
    const size_t s = static_cast<size_t>(t) % 4;
    const Bytes msg = test::random_bytes(rng, 20);
    const auto sig = ring_sign(w.params, msg, ring, s, w.secrets[s], rng);

    Bytes flipped = msg;
    flipped[static_cast<size_t>(t) % msg.size()] ^= static_cast<uint8_t>(1u << (t % 8));
    rejected[0] += rejects([&] { return verify(w.params, flipped, ring, sig); });

    auto ids = w.ids;
    auto keys = w.keys;
    std::swap(ids[s], ids[(s + 1) % 4]);
    std::swap(keys[s], keys[(s + 1) % 4]);
    rejected[1] += rejects([&] { return verify(w.params, msg, Ring(ids, keys), sig); });

    bool add_remove = true;
    {
      auto more_ids = w.ids;
      auto more_keys = w.keys;
      more_ids.push_back(other.ids[0]);
      more_keys.push_back(other_ring.public_keys()[0]);
      auto grown = sig;
      grown.commitments.push_back(gt_exp(w.params.gt_generator, random_scalar(rng)));
      add_remove &= rejects([&] { return verify(w.params, msg, Ring(more_ids, more_keys), grown); });
      add_remove &= rejects([&] { return verify(w.params, msg, Ring(more_ids, more_keys), sig); });
      auto fewer_ids = w.ids;
      auto fewer_keys = w.keys;
      fewer_ids.erase(fewer_ids.begin() + static_cast<long>(s));
      fewer_keys.erase(fewer_keys.begin() + static_cast<long>(s));
      auto shrunk = sig;
      shrunk.commitments.erase(shrunk.commitments.begin() + static_cast<long>(s));
      add_remove &= rejects([&] { return verify(w.params, msg, Ring(fewer_ids, fewer_keys), shrunk); });
    }
    rejected[2] += add_remove;

    auto bad_v = sig;
    bad_v.response = bad_v.response + g1_mul(random_scalar(rng), w.params.generator);
    rejected[3] += rejects([&] { return verify(w.params, msg, ring, bad_v); });

    bool every_y = true;
    for (size_t i = 0; i < 4; ++i) {
      auto bad_y = sig;
      bad_y.commitments[i] *= gt_exp(w.params.gt_generator, random_scalar(rng));
      every_y &= rejects([&] { return verify(w.params, msg, ring, bad_y); });
    }
    rejected[4] += every_y;

    rejected[5] += rejects([&] { return verify(w.params, msg, other_ring, sig); });
  }
  bool pass = true;
  std::string detail;
  for (size_t k = 0; k < names.size(); ++k) {
    pass = pass && rejected[k] == trials;
    detail += std::string(names[k]) + " " + std::to_string(rejected[k]) + "/" +
              std::to_string(trials) + (k + 1 < names.size() ? ", " : "");
  }
  return report(4, "tamper rejection", pass, detail, start);
}

bool key_replacement_attack() {
  const auto start = clock_type::now();
  SeededRng rng(1005);
  auto [composite, generic_master] = attack::GenericClRing::setup(rng);
  attack::Challenger generic_challenger(composite.params(), generic_master, rng);
  const auto [params, master] = setup(kDefaultSecurityBits, rng);
  attack::Challenger concrete_challenger(params, master, rng);

  int forged = 0, clean = 0, control_failed = 0;
  const int runs = 100;
  for (int t = 0; t < runs; ++t) {
    uint8_t pick[3];
    rng.fill(pick);
    const size_t n = 2 + pick[0] % 5;
    const size_t i = pick[1] % n;
    const size_t j = (i + 1 + pick[2] % (n - 1)) % n;
    const auto r = attack::type1_attack(composite, generic_challenger, n, i, j, rng);
    forged += r.verified;
    clean += !r.knowledge.holds_complete_private_key() && r.knowledge.signing_oracle_queries == 0;
    const auto c = attack::type1_attack_concrete(concrete_challenger, n, i, j, rng);
    control_failed += !c.verified;
  }
  const bool pass = forged == runs && clean == runs && control_failed == runs &&
                    generic_challenger.sign_queries() == 0;
  return report(5, "key-replacement attack", pass,
                "generic forged " + std::to_string(forged) + "/100, clean knowledge " +
                    std::to_string(clean) + "/100, concrete control failed " +
                    std::to_string(control_failed) + "/100",
                start);
}

bool simulation_harness() {
  const auto start = clock_type::now();
  SeededRng rng(1006);
  int under_oracle = 0, under_real = 0;
  size_t retries = 0;
  simulation::ProgrammableOracle oracle;
  for (int t = 0; t < 100; ++t) {
    const size_t n = 1 + static_cast<size_t>(t % 6);
    const auto [params, master] = setup(kDefaultSecurityBits, rng);
    std::vector<Identity> ids;
    std::vector<PublicKey> keys;
    for (size_t i = 0; i < n; ++i) {
      ids.emplace_back("sim-" + std::to_string(t) + "-" + std::to_string(i));
      keys.push_back(set_public_key(params, set_secret_value(params, rng)));
    }
    const Ring ring(ids, keys);
    const Bytes msg = test::random_bytes(rng, 16);
    const auto r = simulation::simulate_ring_sign_query(params, oracle, msg, ring, rng);
    retries += r.retries;
    under_oracle += simulation::verify_with_oracle(params, msg, ring, r.signature, oracle);
    under_real += verify(params, msg, ring, r.signature);
  }
  return report(6, "simulated signing queries", under_oracle == 100 && under_real == 0,
                "programmed oracle " + std::to_string(under_oracle) + "/100, real hash " +
                    std::to_string(under_real) + "/100, retries " + std::to_string(retries),
                start);
}

void substituted_bounds() {
  std::printf(
      "criterion 7 %-28s SUBSTITUTED  reduction time/probability bounds are asymptotic and not "
      "measurable here; covered by criteria 3-6 and the unit suites\n",
      "security bounds");
}

template <typename T>
bool round_trips(const T& value) {
  const Bytes enc = codec::encode(value);
  return codec::encode(codec::decode<T>(enc)) == enc;
}

bool codec_fuzz() {
  const auto start = clock_type::now();
  SeededRng rng(1008);
  const int samples = 100000;
  int typed = 0, untyped = 0, accepted = 0;
  std::array<std::function<void(ByteView)>, 8> decoders = {
      [](ByteView b) { codec::decode<SystemParams>(b); },
      [](ByteView b) { codec::decode<MasterKey>(b); },
      [](ByteView b) { codec::decode<PartialPrivateKey>(b); },
      [](ByteView b) { codec::decode<SecretValue>(b); },
      [](ByteView b) { codec::decode<PrivateKey>(b); },
      [](ByteView b) { codec::decode<PublicKey>(b); },
      [](ByteView b) { codec::decode<Ring>(b); },
      [](ByteView b) { codec::decode<RingSignature>(b); },
  };
  for (int t = 0; t < samples; ++t) {
    uint8_t len_bytes[2];
    rng.fill(len_bytes);
    const Bytes input = test::random_bytes(rng, (size_t{len_bytes[0]} << 8 | len_bytes[1]) % 1600);
    try {
      decoders[static_cast<size_t>(t) % decoders.size()](input);
      ++accepted;
    } catch (const Error&) {
      ++typed;
    } catch (...) {
      ++untyped;
    }
  }

  int round_trip_ok = 0, round_trip_total = 0;
  const auto w = test::make_world(5, rng);
  for (int t = 0; t < 100; ++t) {
    const auto [params, master] = setup(kDefaultSecurityBits, rng);
    const Identity id("rt-" + std::to_string(t));
    const SecretValue x = set_secret_value(params, rng);
    const PartialPrivateKey d = extract_partial_private_key(params, master, id);
    const size_t n = 1 + static_cast<size_t>(t % 5);
    const Ring ring(std::vector<Identity>(w.ids.begin(), w.ids.begin() + static_cast<long>(n)),
                    std::vector<PublicKey>(w.keys.begin(), w.keys.begin() + static_cast<long>(n)));
    const size_t s = static_cast<size_t>(t) % n;
    const auto sig = ring_sign(w.params, test::random_bytes(rng, 8), ring, s, w.secrets[s], rng);
    const bool results[] = {round_trips(params),
                            round_trips(master),
                            round_trips(d),
                            round_trips(x),
                            round_trips(set_private_key(x, d)),
                            round_trips(set_public_key(params, x)),
                            round_trips(ring),
                            round_trips(sig)};
    for (bool r : results) {
      round_trip_ok += r;
      ++round_trip_total;
    }
  }
  const bool pass = typed == samples && untyped == 0 && accepted == 0 &&
                    round_trip_ok == round_trip_total;
  return report(8, "codec fuzz and round trip", pass,
                std::to_string(typed) + "/" + std::to_string(samples) +
                    " rejected with typed errors, " + std::to_string(untyped) + " untyped, " +
                    std::to_string(round_trip_ok) + "/" + std::to_string(round_trip_total) +
                    " round trips",
                start);
}

}  // namespace

int main() {
  bool pass = true;
  auto guarded = [&](int id, const char* title, bool (*fn)()) {
    try {
      pass = fn() && pass;
    } catch (const std::exception& e) {
      std::printf("criterion %d %-28s FAIL  unexpected exception: %s\n", id, title, e.what());
      pass = false;
    }
  };
  guarded(1, "completeness", completeness);
  guarded(2, "operation counts", operation_counts);
  guarded(3, "anonymity", anonymity);
  guarded(4, "tamper rejection", tamper_suite);
  guarded(5, "key-replacement attack", key_replacement_attack);
  guarded(6, "simulated signing queries", simulation_harness);
  substituted_bounds();
  guarded(8, "codec fuzz and round trip", codec_fuzz);
  std::printf("acceptance %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}
