#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "retract/batch.hpp"
#include "retract/cli.hpp"
#include "retract/generator.hpp"
#include "retract/problem.hpp"
#include "retract/report_io.hpp"

using namespace retract;

namespace {

std::string golden(const std::string& name) { return std::string(RETRACT_GOLDEN_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", golden("e1.ring")}).code, kExitOk);
  CliRun swap = run({"check", golden("swap.ring")});
  EXPECT_EQ(swap.code, kExitNotIdempotent);
  EXPECT_NE(swap.err.find("phi^2(x1) = x1 != x2 = phi(x1)"), std::string::npos) << swap.err;
  CliRun bad = run({"check", golden("bad.ring")});
  EXPECT_EQ(bad.code, kExitParseError);
  EXPECT_NE(bad.err.find("2:7"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"check", golden("missing.ring")}).code, kExitParseError);
}

TEST(Cli, AnalyzeJsonMatchesGolden) {
  CliRun a = run({"analyze", "--json", golden("e1.ring")});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, slurp(golden("e1.json")));
  EXPECT_EQ(run({"analyze", "--json", golden("e1.ring")}).out, a.out);
  EXPECT_EQ(run({"analyze", golden("swap.ring")}).code, kExitNotIdempotent);
}

TEST(Cli, AnalyzeWritesOutFile) {
  auto path = std::filesystem::temp_directory_path() / "retract_cli_test_e1.json";
  CliRun a = run({"analyze", golden("e1.ring"), "--json", "--out", path.string()});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_TRUE(a.out.empty());
  EXPECT_EQ(slurp(path.string()), slurp(golden("e1.json")));
  std::filesystem::remove(path);
}

TEST(Cli, GenIsDeterministicAndParallelSafe) {
  std::vector<std::string> args = {"gen", "--n", "3", "--d", "2", "--r", "1", "--seed", "5", "--complexity", "2",
                                   "--count", "6"};
  CliRun serial = run([&] {
    auto a = args;
    a.insert(a.begin(), {"--threads", "1"});
    return a;
  }());
  CliRun parallel = run([&] {
    auto a = args;
    a.insert(a.begin(), {"--threads", "4"});
    return a;
  }());
  ASSERT_EQ(serial.code, kExitOk) << serial.err;
  EXPECT_EQ(serial.out, parallel.out);
  // Each block is the single-instance output for its seed.
  CliRun one = run({"gen", "--n", "3", "--d", "2", "--r", "1", "--seed", "7", "--complexity", "2"});
  EXPECT_NE(serial.out.find(one.out), std::string::npos);
  EXPECT_EQ(run({"gen", "--n", "2", "--d", "3", "--r", "1", "--seed", "0", "--complexity", "1"}).code,
            kExitParseError);
  EXPECT_EQ(run({"gen", "--n", "2"}).code, kExitParseError);
}

TEST(Cli, GenOutputPassesCheck) {
  auto dir = std::filesystem::temp_directory_path() / "retract_cli_gen";
  std::filesystem::remove_all(dir);
  CliRun g = run({"gen", "--n", "4", "--d", "2", "--r", "1", "--seed", "1", "--complexity", "3", "--count", "5",
               "--domain", "GF(5)", "--out-dir", dir.string()});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(run({"check", entry.path().string()}).code, kExitOk) << entry.path();
    EXPECT_EQ(run({"analyze", entry.path().string()}).code, kExitOk) << entry.path();
  }
  EXPECT_EQ(files, 5);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitParseError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParseError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Batch, ParallelMatchesSerial) {
  std::vector<Endomorphism> maps;
  for (std::uint64_t s = 0; s < 48; ++s) {
    GeneratorSpec spec{3, s % 4, 0, s, static_cast<unsigned>(s % 4), Domain::rationals()};
    spec.r = spec.d ? s % (spec.d + 1) : 0;
    maps.push_back(gen_random_idempotent(spec));
  }
  maps.push_back(parse_problem(slurp(golden("swap.ring"))).map);
  auto serial = analyze_batch_serial(maps);
  auto parallel = analyze_batch(maps, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    ASSERT_EQ(serial[i].kind, parallel[i].kind);
    ASSERT_EQ(serial[i].error, parallel[i].error);
    if (serial[i].report) {
      ASSERT_EQ(render_report(*serial[i].report, ReportFormat::Json),
                render_report(*parallel[i].report, ReportFormat::Json));
    }
  }
  EXPECT_EQ(parallel.back().kind, OutcomeKind::NotIdempotent);
}
