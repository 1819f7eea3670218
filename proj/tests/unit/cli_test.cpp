#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"

namespace ymo::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string config_path(const std::string& name) {
  return std::string(YMOPTICS_CONFIG_DIR) + "/" + name;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ymoptics");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ymoptics_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Config, ParsesSectionsAndLists) {
  const Config c = Config::parse(
      "[trace]\nx0 = 1, 2, 3\nspan = 2.5\ncount = 4\n[field]\nname = zero\n");
  EXPECT_TRUE(c.has("trace"));
  EXPECT_FALSE(c.has("medium"));
  const Section t = c.section("trace");
  EXPECT_EQ(t.vec("x0", {}), vec3(1, 2, 3));
  EXPECT_EQ(t.num("span"), 2.5);
  EXPECT_EQ(t.integer("count", 0), 4);
  EXPECT_EQ(t.num("missing", 7.0), 7.0);
  EXPECT_THROW(t.str("missing"), ConfigError);
  EXPECT_THROW(c.require("medium"), ConfigError);
}

TEST(Config, RejectsMalformedValues) {
  const Config c = Config::parse("[s]\na = 1.5x\nb = 1, 2\nc = 2.5\n");
  EXPECT_THROW(c.section("s").num("a"), ConfigError);
  EXPECT_THROW(c.section("s").vec("b", {}), ConfigError);
  EXPECT_THROW(c.section("s").integer("c", 0), ConfigError);
  EXPECT_THROW(Config::parse("[s\n"), ConfigError);
  EXPECT_THROW(Config::load("/nonexistent/ymoptics.ini"), ConfigError);
}

TEST(Config, SamplingValidation) {
  const Overrides none;
  EXPECT_THROW(sampling_from(Config::parse("[s]\nseed = -1\n").section("s"), none),
               ConfigError);
  EXPECT_THROW(sampling_from(Config::parse("[s]\ncount = 0\n").section("s"), none),
               ConfigError);
  EXPECT_THROW(
      sampling_from(Config::parse("[s]\nr_min = 2\nr_max = 1\n").section("s"), none),
      ConfigError);
  Overrides o;
  o.seed = 99;
  EXPECT_EQ(sampling_from(Config::parse("[s]\nseed = 3\n").section("s"), o).seed,
            99u);
}

TEST(Config, UnknownNamesAreConfigErrors) {
  const Overrides none;
  EXPECT_THROW(field_from(Config::parse("[f]\nname = nope\n").section("f"), none),
               ConfigError);
  EXPECT_THROW(medium_from(Config::parse("[m]\nname = nope\n").section("m")),
               ConfigError);
  EXPECT_THROW(force_law_from("nope"), ConfigError);
  EXPECT_THROW(dreibein_from(Config::parse("[d]\nname = nope\n").section("d"), none),
               ConfigError);
}

TEST(Verify, MonopolePasses) {
  const Outcome o = invoke({"--config", config_path("monopole.ini"), "verify"});
  EXPECT_EQ(o.code, kPass) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_NEAR(j["ansatz_discrepancy"]["reference_isotropic"].get<double>(), 6.0,
              1e-10);
}

TEST(Verify, PerturbedMonopoleFlagsAmpere) {
  const Outcome o =
      invoke({"--config", config_path("perturbed_monopole.ini"), "verify"});
  EXPECT_EQ(o.code, kResidualFail);
  const Json j = Json::parse(o.out);
  bool ampere_failed = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "ampere") ampere_failed = !c["pass"].get<bool>();
  EXPECT_TRUE(ampere_failed);
}

TEST(Verify, MissingFieldNameIsConfigError) {
  EXPECT_EQ(invoke({"--config", config_path("missing_field.ini"), "verify"}).code,
            kConfigError);
  EXPECT_EQ(invoke({"verify"}).code, kConfigError);
  EXPECT_EQ(invoke({"--config", "/nonexistent.ini", "verify"}).code,
            kConfigError);
  EXPECT_EQ(invoke({"bogus"}).code, kConfigError);
  EXPECT_EQ(invoke({"--config", config_path("monopole.ini"), "--step", "-1",
                    "verify"})
                .code,
            kConfigError);
}

TEST(Verify, CurvedMediumPasses) {
  const Outcome o =
      invoke({"--config", config_path("curved_hyperbolic.ini"), "verify"});
  EXPECT_EQ(o.code, kPass) << o.out;
  const Json j = Json::parse(o.out);
  EXPECT_NEAR(j["medium"]["scalar_curvature_min"].get<double>(), -6.0, 1e-5);
}

TEST(Verify, OutputIsByteIdenticalAcrossRuns) {
  const fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
  ASSERT_EQ(invoke({"--config", config_path("monopole_optical.ini"), "--out",
                    d1.string(), "verify"})
                .code,
            kPass);
  ASSERT_EQ(invoke({"--config", config_path("monopole_optical.ini"), "--out",
                    d2.string(), "verify"})
                .code,
            kPass);
  EXPECT_EQ(slurp(d1 / "verify_report.json"), slurp(d2 / "verify_report.json"));
}

TEST(Ansatz, DefaultScanRowsAndRoots) {
  const Outcome o = invoke({"ansatz"});
  ASSERT_EQ(o.code, kPass) << o.err;
  EXPECT_EQ(o.out.rfind("profile,q,", 0), 0u);
  EXPECT_NE(o.out.find("\r\n"), std::string::npos);
  const fs::path d = fresh_dir("ansatz");
  ASSERT_EQ(invoke({"--config", config_path("ansatz.ini"), "--out", d.string(),
                    "ansatz"})
                .code,
            kPass);
  const Json s = Json::parse(slurp(d / "ansatz_summary.json"));
  std::vector<double> roots;
  for (const auto& q : s["roots"]["power_law"]) roots.push_back(q.get<double>());
  EXPECT_EQ(roots, (std::vector<double>{0.0, 1.0, 2.0}));
}

TEST(Ansatz, InvertedRangeIsConfigError) {
  const fs::path d = fresh_dir("ansatz_bad");
  fs::create_directories(d);
  std::ofstream(d / "bad.ini") << "[ansatz]\nq_min = 2\nq_max = 1\n";
  EXPECT_EQ(invoke({"--config", (d / "bad.ini").string(), "ansatz"}).code,
            kConfigError);
}

TEST(Trace, FishEyeFocusesAndFlatRaysAreStraight) {
  const fs::path d = fresh_dir("fisheye");
  const Outcome o = invoke(
      {"--config", config_path("fisheye.ini"), "--out", d.string(), "trace"});
  ASSERT_EQ(o.code, kPass) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_LT(j["focus"]["max_distance_to_image"].get<double>(), 1e-4);
  EXPECT_TRUE(fs::exists(d / "ray_000.csv"));
  const Outcome flat = invoke({"--config", config_path("flat_rays.ini"), "trace"});
  EXPECT_EQ(flat.code, kPass) << flat.err;
}

TEST(Trace, SingularLaunchIsDomainError) {
  const fs::path d = fresh_dir("singular");
  fs::create_directories(d);
  std::ofstream(d / "s.ini") << "[medium]\nname = monopole\n[trace]\nx0 = 0, 0, 0\n";
  EXPECT_EQ(invoke({"--config", (d / "s.ini").string(), "trace"}).code,
            kDomainError);
}

TEST(Trace, WongRunWritesTrajectory) {
  const fs::path d = fresh_dir("wong");
  const Outcome o = invoke(
      {"--config", config_path("wong_monopole.ini"), "--out", d.string(), "trace"});
  ASSERT_EQ(o.code, kPass) << o.err;
  const std::string csv = slurp(d / "wong.csv");
  EXPECT_EQ(csv.rfind("s,x1,x2,x3,v1,v2,v3,I1,I2,I3\r\n", 0), 0u);
}

TEST(Media, HyperbolicSummary) {
  const Outcome o = invoke({"--config", config_path("media_hyperbolic.ini"), "media"});
  ASSERT_EQ(o.code, kPass) << o.err;
  EXPECT_NO_THROW(Json::parse(o.out));
}

TEST(Copies, VerdictsMatchPairs) {
  const Outcome flat = invoke({"--config", config_path("copies_flat.ini"), "copies"});
  ASSERT_EQ(flat.code, kPass) << flat.err;
  EXPECT_EQ(Json::parse(flat.out)["verdict"], "copies");
  const Outcome mono =
      invoke({"--config", config_path("copies_monopole.ini"), "copies"});
  ASSERT_EQ(mono.code, kPass) << mono.err;
  EXPECT_EQ(Json::parse(mono.out)["verdict"], "not copies");
}

}  // namespace
}  // namespace ymo::cli
