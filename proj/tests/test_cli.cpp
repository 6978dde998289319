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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("clring-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(const std::string& args) const {
    const std::string cmd = "cd '" + dir_.string() + "' && '" CLRING_CLI_PATH "' " + args +
                            " 2>" + path("stderr.txt");
    FILE* pipe = ::popen(cmd.c_str(), "r");
    Outcome r{-1, {}};
    std::array<char, 4096> buf;
    size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  void spit(const std::string& name, const std::string& data) const {
    std::ofstream(path(name), std::ios::binary) << data;
  }

  // setup, three members, and a signature by member 1 over msg.txt.
  void pipeline(const std::string& format = "binary", const std::string& seed = "1") {
    ASSERT_EQ(run("setup --params params --masterkey master --format " + format + " --seed " + seed).code, 0);
    for (int i = 0; i < 3; ++i) {
      const std::string s = std::to_string(i);
      ASSERT_EQ(run("extract --params params --masterkey master --id user" + s + " --out d" + s +
                    " --format " + format).code, 0);
      ASSERT_EQ(run("keygen --params params --id user" + s + " --secret x" + s + " --pub pk" + s +
                    " --seed " + seed + s + " --format " + format).code, 0);
      ASSERT_EQ(run("combine --params params --id user" + s + " --secret x" + s + " --partial d" +
                    s + " --out k" + s + " --format " + format).code, 0);
      ASSERT_EQ(run("ring-add --ring ring.json --id user" + s + " --pub pk" + s).code, 0);
    }
    spit("msg.txt", "pay alice 5 coins\n");
    ASSERT_EQ(run("sign --params params --ring ring.json --index 1 --key k1 --msg msg.txt --sig sig "
                  "--format " + format + " --seed " + seed).code, 0);
  }

  fs::path dir_;
};

TEST_F(Cli, PipelineVerifies) {
  pipeline();
  const Outcome r = run("verify --params params --ring ring.json --sig sig --msg msg.txt");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid\n");
  EXPECT_EQ(run("verify --params params --ring ring.json --sig sig < msg.txt").code, 0);
}

TEST_F(Cli, HexAndJsonFormats) {
  for (const std::string format : {"hex", "json"}) {
    SCOPED_TRACE(format);
    pipeline(format);
    EXPECT_EQ(run("verify --params params --ring ring.json --sig sig --msg msg.txt").code, 0);
    fs::remove(path("ring.json"));
  }
  const auto doc = nlohmann::json::parse(slurp("sig"));
  EXPECT_EQ(doc["kind"], "signature");
}

TEST_F(Cli, RingFileIsAuditableJson) {
  pipeline();
  const auto doc = nlohmann::json::parse(slurp("ring.json"));
  ASSERT_EQ(doc["members"].size(), 3u);
  EXPECT_EQ(doc["members"][2]["identity"], "user2");
  EXPECT_EQ(doc["members"][2]["public_key"].get<std::string>().size(), 288u);
}

TEST_F(Cli, FlippedMessageIsInvalid) {
  pipeline();
  std::string msg = slurp("msg.txt");
  msg[0] ^= 1;
  spit("msg2.txt", msg);
  const Outcome r = run("verify --params params --ring ring.json --sig sig --msg msg2.txt");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "invalid\n");
}

TEST_F(Cli, DeterministicUnderSeed) {
  pipeline("binary", "5");
  const std::string first = slurp("sig");
  const std::string ring = slurp("ring.json");
  fs::remove(path("ring.json"));
  pipeline("binary", "5");
  EXPECT_EQ(slurp("sig"), first);
  EXPECT_EQ(slurp("ring.json"), ring);
}

TEST_F(Cli, ExitCodeMatrix) {
  pipeline();
  const std::string base = "verify --params params --ring ring.json --msg msg.txt ";
  // Malformed: garbage, truncated, wrong kind, bad hex.
  spit("garbage", "CLRG\x01\x08\x00\x01 not a signature");
  EXPECT_EQ(run(base + "--sig garbage").code, 2);
  const std::string sig = slurp("sig");
  spit("short", sig.substr(0, sig.size() - 1));
  EXPECT_EQ(run(base + "--sig short").code, 2);
  EXPECT_EQ(run(base + "--sig pk0").code, 2);
  spit("badhex", "zz\n");
  EXPECT_EQ(run(base + "--sig badhex").code, 2);
  spit("badring.json", "{\"members\": [{\"identity\": \"a\"}]}");
  EXPECT_EQ(run("verify --params params --ring badring.json --sig sig --msg msg.txt").code, 2);
  // I/O failures.
  EXPECT_EQ(run(base + "--sig missing-file").code, 3);
  EXPECT_EQ(run("verify --params nowhere --ring ring.json --sig sig --msg msg.txt").code, 3);
  // Usage.
  EXPECT_EQ(run("verify --params params").code, 4);
  EXPECT_EQ(run("frobnicate").code, 4);
  EXPECT_EQ(run("--help").code, 0);
  // Signing errors.
  EXPECT_EQ(run("sign --params params --ring ring.json --index 7 --key k1 --msg msg.txt --sig s2").code, 2);
  EXPECT_EQ(run("sign --params params --ring ring.json --index 0 --key k1 --msg msg.txt --sig s2").code, 2);
  EXPECT_EQ(run("combine --params params --id user0 --secret x0 --partial d1 --out k9").code, 2);
  EXPECT_EQ(run("ring-add --ring ring.json --id user0 --pub pk1").code, 2);
}

TEST_F(Cli, SingleMemberRingWarns) {
  ASSERT_EQ(run("setup --params params --masterkey master --seed 2").code, 0);
  ASSERT_EQ(run("extract --params params --masterkey master --id solo --out d").code, 0);
  ASSERT_EQ(run("keygen --params params --secret x --pub pk --seed 3").code, 0);
  ASSERT_EQ(run("combine --params params --secret x --partial d --out k").code, 0);
  ASSERT_EQ(run("ring-add --ring ring.json --id solo --pub pk").code, 0);
  spit("m", "hello");
  ASSERT_EQ(run("sign --params params --ring ring.json --index 0 --key k --msg m --sig s").code, 0);
  EXPECT_NE(slurp("stderr.txt").find("warning"), std::string::npos);
  EXPECT_EQ(run("verify --params params --ring ring.json --sig s --msg m").code, 0);
}

TEST_F(Cli, BenchMatchesReferenceCounts) {
  const Outcome r = run("bench --n 10 --reps 1 --seed 3 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& row = doc["rows"][0];
  EXPECT_EQ(row["sign"]["pairing"], 2);
  EXPECT_EQ(row["verify"]["pairing"], 3);
  EXPECT_EQ(row["total"]["pairing"], 5);
  EXPECT_EQ(row["total"]["g1_sm"], 43);
  EXPECT_EQ(row["total"]["gt_exp"], 10);
  EXPECT_EQ(row["total"]["hash"], 22);
  EXPECT_TRUE(doc["all_match"].get<bool>());
}

TEST_F(Cli, BenchWithGivenParams) {
  ASSERT_EQ(run("setup --params params --masterkey master --seed 4").code, 0);
  EXPECT_EQ(run("bench --params params --masterkey master --n 1,3 --reps 1").code, 0);
  EXPECT_EQ(run("bench --params params --n 2").code, 4);
}

TEST_F(Cli, AttackDemo) {
  const Outcome r = run("attack-demo --n 4 --i 1 --j 3 --seed 9 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["generic"]["verified"].get<bool>());
  EXPECT_FALSE(doc["concrete_control"]["verified"].get<bool>());
  EXPECT_EQ(doc["generic"]["signing_oracle_queries"], 0);
  EXPECT_EQ(run("attack-demo --n 4 --i 2 --j 2").code, 2);
  EXPECT_EQ(run("attack-demo --seed 1").code, 0);
}

TEST_F(Cli, Simulate) {
  const Outcome r = run("simulate --n 3 --seed 8 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["verifies_under_programmed_oracle"].get<bool>());
  EXPECT_FALSE(doc["verifies_under_real_hash"].get<bool>());
}

}  // namespace
