#include "brauer_terminal/commands.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace bterm {
namespace {

const std::filesystem::path kModels = BRAUER_TERMINAL_MODELS_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  std::vector<nlohmann::json> records;
};

Run run(const std::string& command, const std::string& model, CommandOptions opts = {}) {
  opts.command = command;
  if (!model.empty()) opts.model = kModels / model;
  const auto path = std::filesystem::temp_directory_path() / ("brauer_terminal_cmd_" + command + ".jsonl");
  opts.out = path;
  std::ostringstream out, err;
  Run r;
  r.code = run_command(opts, out, err);
  r.out = out.str();
  r.err = err.str();
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) r.records.push_back(nlohmann::json::parse(line));
  std::filesystem::remove(path);
  return r;
}

TEST(Commands, BoundaryRecords) {
  const auto r = run("boundary", "bad_case.model");
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.records.size(), 3u);
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec["record"], "boundary");
    EXPECT_EQ(rec["coefficient"], nlohmann::json::array({1, 2}));
  }
}

TEST(Commands, DiscrepancyRecordsCarryRationalPairs) {
  const auto r = run("discrepancy", "bad_case.model");
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.records.size(), 4u);
  EXPECT_EQ(r.records[0]["divisor"], "E(1,1,0)");
  EXPECT_EQ(r.records[0]["b"], nlohmann::json::parse("[[0,1]]"));
  EXPECT_EQ(r.records[0]["e"], nlohmann::json::parse("[1]"));
  EXPECT_NE(r.out.find("V(x1,x2)"), std::string::npos);
}

TEST(Commands, CertifyTrivial) {
  const auto r = run("certify", "trivial.model");
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_FALSE(r.records.empty());
  const auto& cert = r.records.back();
  EXPECT_EQ(cert["record"], "certificate");
  EXPECT_EQ(cert["verdict"], "terminal-certified");
  EXPECT_EQ(cert["min_weighted"], nlohmann::json::array({1, 1}));
  EXPECT_NE(r.out.find("min e*b: 1 "), std::string::npos);
}

TEST(Commands, CertifyBadCaseWithoutFixup) {
  CommandOptions opts;
  opts.no_fixup = true;
  opts.depth = 1;
  const auto r = run("certify", "bad_case.model", opts);
  EXPECT_EQ(r.code, kExitBadStratum);
  EXPECT_NE(r.out.find("bad stratum: V(x1,x2)"), std::string::npos);
}

TEST(Commands, CertifyBadCaseWithFixup) {
  const auto r = run("certify", "bad_case.model");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.records.back()["fixup_blow_ups"], 1);
}

TEST(Commands, CertifyThreeTorsionIsIndeterminate) {
  CommandOptions opts;
  opts.depth = 2;
  EXPECT_EQ(run("certify", "remark.model", opts).code, kExitIndeterminate);
}

TEST(Commands, ResolveBadCase) {
  const auto r = run("resolve", "bad_case.model");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.records.front()["record"], "blow-up");
  EXPECT_EQ(r.records.back()["record"], "resolution");
  EXPECT_EQ(r.records.back()["blow_ups"], 1);
}

TEST(Commands, Remark) {
  const auto r = run("remark", "");
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0]["b_E"], nlohmann::json::array({1, 3}));
  EXPECT_EQ(r.records[0]["e_F"], nlohmann::json::array({1, 3}));
  EXPECT_NE(r.out.find("b(E,X) = 1/3"), std::string::npos);
  EXPECT_NE(r.out.find("may not admit a terminal resolution"), std::string::npos);
}

TEST(Commands, Errors) {
  EXPECT_EQ(run("certify", "").code, kExitError);
  EXPECT_EQ(run("certify", "does_not_exist.model").code, kExitError);
  EXPECT_EQ(run("juggle", "trivial.model").code, kExitError);
  CommandOptions opts;
  opts.depth = 0;
  EXPECT_EQ(run("certify", "trivial.model", opts).code, kExitError);
  // Fix-up is a 2-torsion procedure; resolve on a 3-torsion model is an error.
  const auto r = run("resolve", "remark.model");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Commands, ThreadsFromEnvironment) {
  ::setenv("BRAUER_TERMINAL_THREADS", "3", 1);
  EXPECT_EQ(threads_from_environment(), 3);
  ::setenv("BRAUER_TERMINAL_THREADS", "lots", 1);
  EXPECT_EQ(threads_from_environment(), 0);
  ::unsetenv("BRAUER_TERMINAL_THREADS");
  EXPECT_EQ(threads_from_environment(), 0);
}

}  // namespace
}  // namespace bterm
