#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ecga/cli.hpp"
#include "ecga/cli/file_io.hpp"
#include "ecga/image.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
using ecga::cli::read_file;
using nlohmann::json;

const std::string kSeed(64, 'c');

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ecga_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const auto img = ecga::testing::synthetic_image(16, 12, 5);
    ecga::cli::write_file_atomic(image_, ecga::encode_pgm_p5(img));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return ecga::cli::run(args, out_, err_);
  }

  std::vector<std::string> generate_args(const std::string& out, std::size_t length = 1000) {
    return {"generate", "--image", image_,  "--curve",    "p256", "--phi",  "25",
            "--psi",    "73",      "--varphi", "121",     "--bz-seed", kSeed, "--length",
            std::to_string(length), "--out", out};
  }

  json read_json(const std::string& p) {
    std::ifstream in(p);
    return json::parse(in);
  }

  fs::path dir_;
  std::string image_ = (fs::temp_directory_path() / "ecga_cli_image.pgm").string();
  std::ostringstream out_, err_;
};

TEST_F(CliTest, GenerateWritesExactLengthDeterministically) {
  ASSERT_EQ(run(generate_args(path("a.bin"), 10000)), 0) << err_.str();
  ASSERT_EQ(run(generate_args(path("b.bin"), 10000)), 0) << err_.str();
  const auto a = read_file(path("a.bin"));
  EXPECT_EQ(a.size(), 10000U);
  EXPECT_EQ(a, read_file(path("b.bin")));
}

TEST_F(CliTest, GenerateOptimizeManifestAndReplay) {
  auto args = generate_args(path("z.bin"), 10000);
  for (const char* extra : {"--optimize", "--rng-seed", "17", "--manifest", "", "--trace", ""}) args.push_back(extra);
  args[args.size() - 3] = path("run.json");
  args[args.size() - 1] = path("trace.csv");
  ASSERT_EQ(run(args), 0) << err_.str();

  const auto m = read_json(path("run.json"));
  EXPECT_EQ(m.at("schema_version"), 1);
  EXPECT_EQ(m.at("result").at("status"), "Optimal");
  EXPECT_EQ(m.at("result").at("final").at("period"), 10000);
  EXPECT_GE(m.at("result").at("final").at("entropy").get<double>(),
            m.at("result").at("h_max").get<double>() - 1e-9);
  EXPECT_EQ(m.at("config").at("curve").at("name"), "p256");
  EXPECT_EQ(m.at("result").at("output").at("sha256"), ecga::cli::sha256_hex(read_file(path("z.bin"))));

  std::ifstream trace(path("trace.csv"));
  std::string header;
  std::getline(trace, header);
  EXPECT_EQ(header, "generation,H,T,accepted");

  ASSERT_EQ(run({"generate", "--replay", path("run.json"), "--out", path("z2.bin")}), 0) << err_.str();
  EXPECT_EQ(read_file(path("z.bin")), read_file(path("z2.bin")));
}

TEST_F(CliTest, ReplayDetectsTamperedManifest) {
  auto args = generate_args(path("a.bin"));
  args.insert(args.end(), {"--manifest", path("m.json")});
  ASSERT_EQ(run(args), 0);
  auto m = read_json(path("m.json"));
  m["result"]["output"]["sha256"] = std::string(64, '0');
  std::ofstream(path("bad.json")) << m.dump();
  EXPECT_EQ(run({"generate", "--replay", path("bad.json"), "--out", path("c.bin")}), 1);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"generate", "--image", image_, "--out", path("x")}), 2);

  auto args = generate_args(path("x"));
  args.insert(args.end(), {"--trace", path("t.csv")});
  EXPECT_EQ(run(args), 2);

  args = generate_args(path("x"));
  args.insert(args.end(), {"--rng-seed", "4"});
  EXPECT_EQ(run(args), 2);

  args = generate_args(path("x"), 100);
  EXPECT_EQ(run(args), 2);

  args = generate_args(path("x"));
  args[6] = "0";  // --phi 0
  EXPECT_EQ(run(args), 2);

  args = generate_args(path("x"));
  args[12] = "abcd";  // short seed
  EXPECT_EQ(run(args), 2);

  EXPECT_EQ(run({"generate", "--replay", path("m.json"), "--length", "300"}), 2);
  EXPECT_EQ(run({"analyze", "--in", path("x")}), 2);
  EXPECT_EQ(run({"export-bits", "--in", "a", "--out", "b", "--format", "hex"}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, DomainErrorsExitOne) {
  auto args = generate_args(path("x"));
  args[2] = path("missing.pgm");
  EXPECT_EQ(run(args), 1);
  args = generate_args(path("x"));
  args[4] = "nosuchcurve";
  EXPECT_EQ(run(args), 1);
  EXPECT_EQ(run({"analyze", "--in", path("missing.bin"), "--report", path("r.json")}), 1);
}

TEST_F(CliTest, AnalyzeConstantFile) {
  ecga::cli::write_file_atomic(path("k.bin"), std::vector<std::uint8_t>(5000, 0x41));
  ASSERT_EQ(run({"analyze", "--in", path("k.bin"), "--report", path("r.json")}), 0) << err_.str();
  const auto r = read_json(path("r.json"));
  EXPECT_EQ(r.at("entropy"), 0.0);
  EXPECT_EQ(r.at("period"), 1);
  EXPECT_TRUE(r.at("hurst").is_null());
  EXPECT_TRUE(r.at("errors").at("hurst").is_string());
  EXPECT_EQ(r.at("nist").size(), 9U);
  EXPECT_EQ(r.at("input_digest"), ecga::cli::sha256_hex(read_file(path("k.bin"))));
}

TEST_F(CliTest, AnalyzeSelectedSections) {
  ASSERT_EQ(run(generate_args(path("a.bin"), 4000)), 0);
  ASSERT_EQ(run({"analyze", "--in", path("a.bin"), "--tests", "entropy,hurst", "--report", path("r.json")}), 0);
  const auto r = read_json(path("r.json"));
  EXPECT_TRUE(r.contains("entropy"));
  EXPECT_TRUE(r.at("hurst").is_number());
  EXPECT_FALSE(r.contains("period"));
  EXPECT_FALSE(r.contains("nist"));
  EXPECT_EQ(run({"analyze", "--in", path("a.bin"), "--tests", "entropy,bogus", "--report", path("r.json")}), 2);
  EXPECT_EQ(run({"analyze", "--in", path("a.bin"), "--lambda", "1.5", "--report", path("r.json")}), 2);
}

TEST_F(CliTest, CompareIdenticalComplementAndMismatch) {
  std::vector<std::uint8_t> a(3000), c(3000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<std::uint8_t>(i * 131 + 7);
    c[i] = static_cast<std::uint8_t>(~a[i]);
  }
  ecga::cli::write_file_atomic(path("a"), a);
  ecga::cli::write_file_atomic(path("c"), c);
  ecga::cli::write_file_atomic(path("short"), std::vector<std::uint8_t>(10, 1));

  ASSERT_EQ(run({"compare", "--a", path("a"), "--b", path("a"), "--report", path("r.json")}), 0);
  auto r = read_json(path("r.json"));
  EXPECT_DOUBLE_EQ(r.at("pearson").get<double>(), 1.0);
  EXPECT_EQ(r.at("nbcr"), 0.0);

  ASSERT_EQ(run({"compare", "--a", path("a"), "--b", path("c"), "--report", path("r.json")}), 0);
  r = read_json(path("r.json"));
  EXPECT_EQ(r.at("nbcr"), 100.0);

  EXPECT_EQ(run({"compare", "--a", path("a"), "--b", path("short"), "--report", path("r.json")}), 1);
  EXPECT_NE(err_.str().find("LengthMismatch"), std::string::npos);
}

TEST_F(CliTest, ExportBitsRoundTrip) {
  ecga::cli::write_file_atomic(path("one"), std::vector<std::uint8_t>{0xA5});
  ASSERT_EQ(run({"export-bits", "--in", path("one"), "--out", path("one.txt")}), 0);
  const auto text = read_file(path("one.txt"));
  EXPECT_EQ(std::string(text.begin(), text.end()), "10100101");

  std::vector<std::uint8_t> data(777);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<std::uint8_t>(i * 29 + 3);
  ecga::cli::write_file_atomic(path("d"), data);
  ASSERT_EQ(run({"export-bits", "--in", path("d"), "--out", path("d.txt"), "--format", "ascii01"}), 0);
  EXPECT_EQ(read_file(path("d.txt")).size(), 8 * data.size());
  ASSERT_EQ(run({"export-bits", "--in", path("d.txt"), "--input-format", "ascii01", "--out", path("d2"),
                 "--format", "raw"}),
            0);
  EXPECT_EQ(read_file(path("d2")), data);
  EXPECT_EQ(run({"export-bits", "--in", path("missing"), "--out", path("m")}), 1);
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = ECGA_BINARY;
  EXPECT_EQ(std::system((bin + " --version > /dev/null").c_str()), 0);
  const int usage = std::system((bin + " generate --length 5 > /dev/null 2>&1").c_str());
  ASSERT_TRUE(WIFEXITED(usage));
  EXPECT_EQ(WEXITSTATUS(usage), 2);
  const int missing = std::system((bin + " analyze --in /nonexistent --report /tmp/x.json 2>/dev/null").c_str());
  ASSERT_TRUE(WIFEXITED(missing));
  EXPECT_EQ(WEXITSTATUS(missing), 1);
}

}  // namespace
