#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace ccs;
using namespace ccs::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_with(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = run_guarded(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command, std::string module, std::string surface = "torus") {
  RunConfig cfg;
  cfg.command = std::move(command);
  cfg.module = std::move(module);
  cfg.surface = std::move(surface);
  cfg.verify.move_sequences = 4;
  return cfg;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, TorusOfS3IsThree) {
  const Result r = run_with(config("invariant", "X2-S3", "torus"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, InvariantFormats) {
  RunConfig cfg = config("invariant", "X2", "disk_in");
  cfg.in = "0";
  EXPECT_EQ(run_with(cfg).out, "1/6·√6\n");
  cfg.output = Output::json;
  EXPECT_EQ(run_with(cfg).out, "{\n  \"coeff\": \"1/6\",\n  \"half_power\": 1,\n  \"base\": 6\n}\n");
  cfg.output = Output::csv;
  cfg.in = "1";
  EXPECT_EQ(run_with(cfg).out, "0/1\n");
  cfg.output = Output::text;
  cfg.in = "0";
  cfg.show_float = true;
  EXPECT_EQ(run_with(cfg).out, "1/6·√6  (~0.4082482905)\n");
}

TEST(Cli, GluedSurfaceChain) {
  RunConfig cfg = config("invariant", "X4", "disk_out+disk_in");
  EXPECT_EQ(run_with(cfg).out, "4\n");
  cfg.surface = "cylinder+cylinder";
  cfg.in = "0";
  cfg.out = "1";
  EXPECT_EQ(run_with(cfg).out, "1/2\n");
}

TEST(Cli, Matrix) {
  RunConfig cfg = config("matrix", "X3", "cylinder");
  cfg.output = Output::csv;
  EXPECT_EQ(run_with(cfg).out, "1/2,1/2\n1/2,1/2\n");
  cfg.output = Output::text;
  cfg.module = "X5";
  EXPECT_EQ(run_with(cfg).out, "1  0\n0  1\n");
  cfg.output = Output::json;
  const Json j = Json::parse(run_with(cfg).out);
  EXPECT_EQ(j["entries"][1][1]["coeff"], "1/1");
}

TEST(Cli, ClassesOfX4) {
  const Result r = run_with(config("classes", "X4"));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("2-conjugacy classes: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("generalized commuting fraction: 1/2\n"), std::string::npos);
  RunConfig cfg = config("classes", "X2");
  cfg.output = Output::json;
  const Json j = Json::parse(run_with(cfg).out);
  EXPECT_EQ(j["class_count"], 3);
  EXPECT_EQ(j["gcf"], "1/2");
  EXPECT_EQ(j["classes"][1]["c_gg"], 2);
}

TEST(Cli, VerifyPasses) {
  const Result r = run_with(config("verify", "X1"));
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("[PASS]"), std::string::npos);
}

TEST(Cli, ReportIsDeterministic) {
  RunConfig cfg = config("report", "X3");
  const Result a = run_with(cfg), b = run_with(cfg);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_EQ(j["classes"]["class_count"], 1);
  EXPECT_EQ(j["surfaces"]["sphere"]["euler"], 2);
}

TEST(Cli, AllFixtures) {
  RunConfig cfg = config("verify", "all");
  const Result r = run_with(cfg);
  EXPECT_EQ(r.code, kOk);
  for (const auto& name : fixture_names()) EXPECT_NE(r.out.find("== " + name + "\n"), std::string::npos);
  cfg.command = "report";
  const Json j = Json::parse(run_with(cfg).out);
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(j["X5"]["classes"]["class_count"], 2);
  EXPECT_EQ(run_with(config("classes", "all")).code, kUnknownFixture);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_with(config("verify", "X9")).code, kUnknownFixture);
  EXPECT_EQ(run_with(config("invariant", "X1", "mobius")).code, kUnknownFixture);

  RunConfig cfg = config("invariant", "X2", "torus");
  cfg.engine.max_fast_states = 5;
  EXPECT_EQ(run_with(cfg).code, kSizeLimit);

  cfg = config("invariant", "X2", "disk_in");
  cfg.in = "zero";
  EXPECT_EQ(run_with(cfg).code, kParseError);
  cfg.in = "0,0";
  EXPECT_EQ(run_with(cfg).code, kOtherError);

  const std::string broken = temp_file("ccs_broken_module.json", "{ not json");
  EXPECT_EQ(run_with(config("classes", broken)).code, kParseError);
  EXPECT_EQ(run_with(config("classes", "/nonexistent/module.json")).code, kParseError);
  std::remove(broken.c_str());
}

TEST(Cli, LoadsFiles) {
  const std::string module = temp_file("ccs_module.json", to_json(fixture("X5")).dump());
  const std::string surface = temp_file("ccs_surface.json", to_json(make_sphere()).dump());
  RunConfig cfg = config("invariant", module, surface);
  EXPECT_EQ(run_with(cfg).out, "9/2\n");
  std::remove(module.c_str());
  std::remove(surface.c_str());
}

TEST(Cli, ModeBoth) {
  RunConfig cfg = config("invariant", "X4", "torus");
  cfg.mode = CountMode::both;
  EXPECT_EQ(run_with(cfg).out, "1\n");
}

TEST(Cli, TupleParsing) {
  EXPECT_EQ(parse_tuple("1,2,3"), (Tuple{1, 2, 3}));
  EXPECT_EQ(parse_tuple(""), Tuple{});
  EXPECT_THROW(parse_tuple("1,x"), Error);
  EXPECT_THROW(parse_tuple("2a"), Error);
}
