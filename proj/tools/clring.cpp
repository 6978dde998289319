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

// Command-line front end. Exit codes: 0 success / valid, 1 invalid
// signature (or failed demo), 2 malformed input, 3 I/O or entropy failure,
// 4 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clring/attack.hpp"
#include "clring/codec.hpp"
#include "clring/op_counter.hpp"
#include "clring/scheme.hpp"
#include "clring/simulation.hpp"

namespace {

using namespace clring;
using nlohmann::json;

enum Exit : int { kOk = 0, kInvalid = 1, kMalformed = 2, kIoFailure = 3, kUsage = 4 };

struct Options {
  std::string params, masterkey, ring, key, msg = "-", sig, id, out, pub, secret, partial;
  std::string format = "binary";
  std::optional<uint64_t> seed;
  std::optional<size_t> index;
  std::vector<size_t> sizes;
  size_t replaced = 0, partial_slot = 1, reps = 3;
};

std::unique_ptr<RandomSource> make_rng(const Options& o) {
  if (o.seed) return std::make_unique<SeededRng>(*o.seed);
  return std::make_unique<SystemRng>();
}

Bytes read_file(const std::string& path) {
  if (path == "-") {
    std::string data{std::istreambuf_iterator<char>(std::cin), {}};
    return Bytes(data.begin(), data.end());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::string data{std::istreambuf_iterator<char>(in), {}};
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path);
  return Bytes(data.begin(), data.end());
}

void write_file(const std::string& path, ByteView data) {
  if (path == "-") {
    std::cout.write(reinterpret_cast<const char*>(data.data()), data.size());
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()), data.size());
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// Accepts the three on-disk forms: raw envelope, hex text, or a JSON
// wrapper {"kind": ..., "envelope": hex}.
Bytes envelope_from_file(const std::string& path) {
  Bytes raw = read_file(path);
  if (raw.size() >= codec::kMagic.size() &&
      std::equal(codec::kMagic.begin(), codec::kMagic.end(), raw.begin())) {
    return raw;
  }
  const std::string text = trim(std::string(raw.begin(), raw.end()));
  if (!text.empty() && text.front() == '{') {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("envelope") || !doc["envelope"].is_string()) {
      throw Error(ErrorCode::kMalformedEnvelope, path + " is not an envelope document");
    }
    return codec::from_hex(doc["envelope"].get<std::string>());
  }
  return codec::from_hex(text);
}

template <typename T>
T load(const std::string& path) {
  return codec::decode<T>(envelope_from_file(path));
}

Ring load_ring(const std::string& path) {
  const Bytes raw = read_file(path);
  const std::string text = trim(std::string(raw.begin(), raw.end()));
  if (!text.empty() && text.front() == '{') {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::kMalformedEnvelope, path + " is not valid JSON");
    if (doc.contains("members")) return codec::ring_from_json(doc);
  }
  return load<Ring>(path);
}

template <typename T>
void store(const std::string& path, const T& object, const std::string& format) {
  const Bytes env = codec::encode(object);
  if (format == "binary") {
    write_file(path, env);
    return;
  }
  std::string text;
  if (format == "hex") {
    text = codec::to_hex(env) + "\n";
  } else {
    const auto kind = static_cast<codec::Kind>(env[5]);
    text = json{{"kind", std::string(codec::kind_name(kind))}, {"envelope", codec::to_hex(env)}}
               .dump(2) +
           "\n";
  }
  write_file(path, as_bytes(text));
}

void store_ring(const std::string& path, const Ring& ring, const std::string& format) {
  if (format == "binary" || format == "hex") {
    store(path, ring, format);
    return;
  }
  write_file(path, as_bytes(codec::ring_to_json(ring).dump(2) + "\n"));
}

void warn_if_vacuous(const Ring& ring) {
  if (ring.anonymity_is_vacuous()) {
    std::cerr << "warning: ring has a single member; the signature does not hide the signer\n";
  }
}

int cmd_setup(const Options& o) {
  auto rng = make_rng(o);
  const auto [params, master] = setup(kDefaultSecurityBits, *rng);
  store(o.params, params, o.format);
  store(o.masterkey, master, o.format);
  return kOk;
}

int cmd_extract(const Options& o) {
  const auto params = load<SystemParams>(o.params);
  const auto master = load<MasterKey>(o.masterkey);
  store(o.out, extract_partial_private_key(params, master, Identity(o.id)), o.format);
  return kOk;
}

int cmd_keygen(const Options& o) {
  const auto params = load<SystemParams>(o.params);
  auto rng = make_rng(o);
  const SecretValue secret = set_secret_value(params, *rng);
  store(o.secret, secret, o.format);
  store(o.pub, set_public_key(params, secret), o.format);
  return kOk;
}

int cmd_combine(const Options& o) {
  const auto params = load<SystemParams>(o.params);
  const auto secret = load<SecretValue>(o.secret);
  const auto partial = load<PartialPrivateKey>(o.partial);
  if (!o.id.empty() && !partial_key_is_valid(params, Identity(o.id), partial)) {
    throw Error(ErrorCode::kKeyMismatch, "partial key was not issued for " + o.id);
  }
  store(o.out, set_private_key(secret, partial), o.format);
  return kOk;
}

int cmd_ring_add(const Options& o) {
  std::vector<Identity> ids;
  std::vector<PublicKey> keys;
  std::ifstream probe(o.ring);
  if (probe.good()) {
    const Ring existing = load_ring(o.ring);
    ids = existing.identities();
    keys = existing.public_keys();
  }
  ids.emplace_back(o.id);
  keys.push_back(load<PublicKey>(o.pub));
  const Ring ring(std::move(ids), std::move(keys));
  store_ring(o.ring, ring, o.format == "binary" ? "json" : o.format);
  return kOk;
}

int cmd_sign(const Options& o) {
  const auto params = load<SystemParams>(o.params);
  const Ring ring = load_ring(o.ring);
  const auto key = load<PrivateKey>(o.key);
  const Bytes message = read_file(o.msg);
  warn_if_vacuous(ring);
  auto rng = make_rng(o);
  store(o.sig, ring_sign(params, message, ring, *o.index, key, *rng), o.format);
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto params = load<SystemParams>(o.params);
  const Ring ring = load_ring(o.ring);
  const auto sig = load<RingSignature>(o.sig);
  const Bytes message = read_file(o.msg);
  warn_if_vacuous(ring);
  const bool ok = verify(params, message, ring, sig);
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? kOk : kInvalid;
}

OpCounter expected_sign(size_t n) { return {2, 2 * n + 3, n, n + 1}; }
OpCounter expected_verify(size_t n) { return {3, 2 * n, 0, n + 1}; }

json counts_json(const OpCounter& c) {
  return {{"pairing", c.pairings},
          {"g1_sm", c.g1_scalar_muls},
          {"gt_exp", c.gt_exps},
          {"hash", c.map_to_point_hashes}};
}

int cmd_bench(const Options& o) {
  auto rng = make_rng(o);
  if (o.params.empty() != o.masterkey.empty()) {
    throw CLI::ValidationError("--params", "bench needs both --params and --masterkey, or neither");
  }
  SystemParams run_params;
  MasterKey master;
  if (o.params.empty()) {
    std::tie(run_params, master) = setup(kDefaultSecurityBits, *rng);
  } else {
    run_params = load<SystemParams>(o.params);
    master = load<MasterKey>(o.masterkey);
  }

  const std::vector<size_t> sizes = o.sizes.empty() ? std::vector<size_t>{1, 2, 5, 10} : o.sizes;
  json rows = json::array();
  bool all_match = true;
  std::optional<uint64_t> first_pairings;
  for (size_t n : sizes) {
    std::vector<Identity> ids;
    std::vector<PublicKey> keys;
    std::vector<PrivateKey> secrets;
    for (size_t i = 0; i < n; ++i) {
      Identity id("bench-member-" + std::to_string(i));
      const SecretValue x = set_secret_value(run_params, *rng);
      secrets.push_back(set_private_key(x, extract_partial_private_key(run_params, master, id)));
      keys.push_back(set_public_key(run_params, x));
      ids.push_back(std::move(id));
    }
    const Ring ring(ids, keys);
    const Bytes message = to_bytes("bench message");

    counter_reset();
    const RingSignature sig = ring_sign(run_params, message, ring, 0, secrets[0], *rng);
    const OpCounter sign_counts = counter_report();
    counter_reset();
    const bool ok = verify(run_params, message, ring, sig);
    const OpCounter verify_counts = counter_report();

    auto time_ms = [&](auto&& fn) {
      const auto start = std::chrono::steady_clock::now();
      for (size_t r = 0; r < o.reps; ++r) fn();
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count() /
             static_cast<double>(o.reps);
    };
    const double sign_ms = time_ms([&] { ring_sign(run_params, message, ring, 0, secrets[0], *rng); });
    const double verify_ms = time_ms([&] { verify(run_params, message, ring, sig); });

    const OpCounter total = sign_counts + verify_counts;
    const OpCounter expected_total = expected_sign(n) + expected_verify(n);
    const bool match = ok && sign_counts == expected_sign(n) &&
                       verify_counts == expected_verify(n) && total == expected_total;
    if (!first_pairings) first_pairings = total.pairings;
    const bool constant_pairings = total.pairings == *first_pairings;
    all_match = all_match && match && constant_pairings;
    rows.push_back({{"n", n},
                    {"sign", counts_json(sign_counts)},
                    {"verify", counts_json(verify_counts)},
                    {"total", counts_json(total)},
                    {"expected_sign", counts_json(expected_sign(n))},
                    {"expected_verify", counts_json(expected_verify(n))},
                    {"expected_total", counts_json(expected_total)},
                    {"sign_ms", sign_ms},
                    {"verify_ms", verify_ms},
                    {"verified", ok},
                    {"match", match && constant_pairings}});
  }

  if (o.format == "json") {
    std::cout << json{{"rows", rows}, {"all_match", all_match}}.dump(2) << "\n";
  } else {
    std::printf("%4s %-7s %8s %8s %8s %8s   %s\n", "n", "phase", "pairing", "g1_sm", "gt_exp",
                "hash", "expected (pairing g1_sm gt_exp hash)");
    for (const auto& row : rows) {
      for (const char* phase : {"sign", "verify", "total"}) {
        const auto& got = row[phase];
        const auto& want = row[std::string("expected_") + phase];
        std::printf("%4zu %-7s %8llu %8llu %8llu %8llu   %llu %llu %llu %llu\n",
                    row["n"].get<size_t>(), phase,
                    got["pairing"].get<unsigned long long>(), got["g1_sm"].get<unsigned long long>(),
                    got["gt_exp"].get<unsigned long long>(), got["hash"].get<unsigned long long>(),
                    want["pairing"].get<unsigned long long>(), want["g1_sm"].get<unsigned long long>(),
                    want["gt_exp"].get<unsigned long long>(), want["hash"].get<unsigned long long>());
      }
      std::printf("     sign %.2f ms, verify %.2f ms, %s\n", row["sign_ms"].get<double>(),
                  row["verify_ms"].get<double>(), row["match"].get<bool>() ? "match" : "MISMATCH");
    }
    std::printf("%s\n", all_match ? "all counts match" : "count mismatch");
  }
  return all_match ? kOk : kInvalid;
}

size_t single_size(const Options& o, size_t fallback) {
  if (o.sizes.size() > 1) throw CLI::ValidationError("--n", "expects a single ring size here");
  return o.sizes.empty() ? fallback : o.sizes.front();
}

int cmd_attack_demo(const Options& o) {
  const size_t n = single_size(o, 5);
  auto rng = make_rng(o);

  auto [composite, generic_master] = attack::GenericClRing::setup(*rng);
  attack::Challenger generic_challenger(composite.params(), generic_master, *rng);
  const attack::AttackResult generic =
      attack::type1_attack(composite, generic_challenger, n, o.replaced, o.partial_slot, *rng);

  const auto [params, master] = setup(kDefaultSecurityBits, *rng);
  attack::Challenger concrete_challenger(params, master, *rng);
  const attack::AttackResult control =
      attack::type1_attack_concrete(concrete_challenger, n, o.replaced, o.partial_slot, *rng);

  const bool demonstrated = generic.verified && !control.verified &&
                            !generic.knowledge.holds_complete_private_key() &&
                            generic.knowledge.signing_oracle_queries == 0;
  const json report{{"generic", attack::to_json(generic)},
                    {"concrete_control", attack::to_json(control)},
                    {"demonstrated", demonstrated}};
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "Type-I key-replacement attack, n=" << n << ", replaced slot " << o.replaced
              << ", partial-key slot " << o.partial_slot << "\n";
    for (const auto& step : generic.steps) std::cout << "  - " << step << "\n";
    std::cout << "generic construction forgery verifies: " << (generic.verified ? "yes" : "no")
              << "\nsigning-oracle queries: " << generic.knowledge.signing_oracle_queries
              << "\ncomplete private key used: "
              << (generic.knowledge.holds_complete_private_key() ? "yes" : "no")
              << "\nconcrete scheme control:\n";
    for (const auto& step : control.steps) std::cout << "  - " << step << "\n";
    std::cout << "concrete control forgery verifies: " << (control.verified ? "yes" : "no")
              << "\n";
  }
  return demonstrated ? kOk : kInvalid;
}

int cmd_simulate(const Options& o) {
  const size_t n = single_size(o, 3);
  auto rng = make_rng(o);
  const auto [params, master] = setup(kDefaultSecurityBits, *rng);
  std::vector<Identity> ids;
  std::vector<PublicKey> keys;
  for (size_t i = 0; i < n; ++i) {
    ids.emplace_back("sim-member-" + std::to_string(i));
    keys.push_back(set_public_key(params, set_secret_value(params, *rng)));
  }
  const Ring ring(ids, keys);
  Bytes message(32);
  rng->fill(message);

  simulation::ProgrammableOracle oracle;
  const auto result = simulation::simulate_ring_sign_query(params, oracle, message, ring, *rng);
  const bool under_oracle =
      simulation::verify_with_oracle(params, message, ring, result.signature, oracle);
  const bool under_real = verify(params, message, ring, result.signature);

  json report = simulation::to_json(result);
  report["verifies_under_programmed_oracle"] = under_oracle;
  report["verifies_under_real_hash"] = under_real;
  report["programmed_points"] = oracle.programmed_points();
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "simulated signing query, n=" << n << ", simulated signer slot "
              << result.simulated_signer << ", retries " << result.retries
              << "\nverifies under programmed oracle: " << (under_oracle ? "yes" : "no")
              << "\nverifies under real hash: " << (under_real ? "yes" : "no") << "\n";
  }
  return under_oracle && !under_real ? kOk : kInvalid;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo:
    case ErrorCode::kEntropyUnavailable:
      return kIoFailure;
    default:
      return kMalformed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificateless ring signature toolkit"};
  app.require_subcommand(1);
  Options o;

  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Deterministic randomness seed (testing only)");
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"binary", "hex", "json"}));
  };

  auto* setup_cmd = app.add_subcommand("setup", "Generate system parameters and master key");
  setup_cmd->add_option("--params", o.params, "Output params file")->required();
  setup_cmd->add_option("--masterkey", o.masterkey, "Output master key file")->required();
  seed(setup_cmd);
  format(setup_cmd);

  auto* extract_cmd = app.add_subcommand("extract", "Issue a partial private key");
  extract_cmd->add_option("--params", o.params)->required();
  extract_cmd->add_option("--masterkey", o.masterkey)->required();
  extract_cmd->add_option("--id", o.id, "Identity string")->required();
  extract_cmd->add_option("--out", o.out, "Output partial key file")->required();
  format(extract_cmd);

  auto* keygen_cmd = app.add_subcommand("keygen", "Choose a secret value and public key");
  keygen_cmd->add_option("--params", o.params)->required();
  keygen_cmd->add_option("--id", o.id, "Identity the key is for (informational)");
  keygen_cmd->add_option("--secret", o.secret, "Output secret value file")->required();
  keygen_cmd->add_option("--pub", o.pub, "Output public key file")->required();
  seed(keygen_cmd);
  format(keygen_cmd);

  auto* combine_cmd = app.add_subcommand("combine", "Assemble a private key");
  combine_cmd->add_option("--params", o.params)->required();
  combine_cmd->add_option("--secret", o.secret)->required();
  combine_cmd->add_option("--partial", o.partial)->required();
  combine_cmd->add_option("--id", o.id, "Check the partial key against this identity");
  combine_cmd->add_option("--out", o.out)->required();
  format(combine_cmd);

  auto* ring_cmd = app.add_subcommand("ring-add", "Append a member to a ring file");
  ring_cmd->add_option("--ring", o.ring, "Ring file (created if missing)")->required();
  ring_cmd->add_option("--id", o.id)->required();
  ring_cmd->add_option("--pub", o.pub)->required();
  format(ring_cmd);

  auto* sign_cmd = app.add_subcommand("sign", "Produce a ring signature");
  sign_cmd->add_option("--params", o.params)->required();
  sign_cmd->add_option("--ring", o.ring)->required();
  sign_cmd->add_option("--index", o.index, "Signer position in the ring (0-based)")->required();
  sign_cmd->add_option("--key", o.key, "Private key file")->required();
  sign_cmd->add_option("--msg", o.msg, "Message file, - for stdin");
  sign_cmd->add_option("--sig", o.sig, "Output signature file")->required();
  seed(sign_cmd);
  format(sign_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Verify a ring signature");
  verify_cmd->add_option("--params", o.params)->required();
  verify_cmd->add_option("--ring", o.ring)->required();
  verify_cmd->add_option("--sig", o.sig)->required();
  verify_cmd->add_option("--msg", o.msg, "Message file, - for stdin");

  auto* bench_cmd = app.add_subcommand("bench", "Measure operation counts and timings");
  bench_cmd->add_option("--params", o.params, "Params file (fresh params if omitted)");
  bench_cmd->add_option("--masterkey", o.masterkey, "Master key matching --params");
  bench_cmd->add_option("--n", o.sizes, "Ring sizes")->delimiter(',');
  bench_cmd->add_option("--reps", o.reps, "Timing repetitions")->check(CLI::PositiveNumber);
  seed(bench_cmd);
  bench_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* attack_cmd = app.add_subcommand("attack-demo", "Run the key-replacement attack");
  attack_cmd->add_option("--n", o.sizes, "Ring size");
  attack_cmd->add_option("--i", o.replaced, "Slot whose public key is replaced (0-based)");
  attack_cmd->add_option("--j", o.partial_slot, "Slot whose partial key is obtained (0-based)");
  seed(attack_cmd);
  attack_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* sim_cmd = app.add_subcommand("simulate", "Answer a signing query without keys");
  sim_cmd->add_option("--n", o.sizes, "Ring size");
  seed(sim_cmd);
  sim_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  for (auto* sub : {bench_cmd, attack_cmd, sim_cmd}) {
    sub->preparse_callback([&o](size_t) { o.format = "text"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*setup_cmd) return cmd_setup(o);
    if (*extract_cmd) return cmd_extract(o);
    if (*keygen_cmd) return cmd_keygen(o);
    if (*combine_cmd) return cmd_combine(o);
    if (*ring_cmd) return cmd_ring_add(o);
    if (*sign_cmd) return cmd_sign(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*bench_cmd) return cmd_bench(o);
    if (*attack_cmd) return cmd_attack_demo(o);
    if (*sim_cmd) return cmd_simulate(o);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [malformed-envelope]: " << e.what() << "\n";
    return kMalformed;
  }
  return kUsage;
}
