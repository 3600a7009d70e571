#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "gcrank/json_io.hpp"

namespace gcrank {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcrank_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  std::string instance(std::string weights, std::string eps) const {
    json j;
    j["c"] = json::array();
    for (const auto& w : cli::split_list(weights)) j["c"].push_back(w);
    j["eps"] = eps;
    return write("inst_" + weights + ".json", j.dump());
  }

  fs::path dir_;
};

TEST_F(Cli, GenExample) {
  const auto out = path("inst.json");
  const auto r = call({"gen", "--m", "64", "--seed", "7", "--eps", "1/4", "-o", out});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto j = json::parse(slurp(out));
  const auto inst = json_io::instance_from_json(j);
  EXPECT_EQ(inst.n(), 128u);
  EXPECT_EQ(inst.eps(), Rational(1, 4));
  EXPECT_EQ(inst.bases().size(), 3u);
  EXPECT_EQ(j["config"]["seed"], "7");
  EXPECT_EQ(j["config"]["subcommand"], "gen");
  // a first, then three equal basis blocks.
  const auto& c = inst.c().entries();
  const auto& b = inst.bases();
  for (std::size_t k = 0; k < b[0].size(); ++k) {
    EXPECT_EQ(c[b[0][k]], c[b[1][k]]);
    EXPECT_EQ(c[b[1][k]], c[b[2][k]]);
    EXPECT_GE(b[0][k], 64u);
  }
}

TEST_F(Cli, RerunsAreByteIdentical) {
  const std::vector<std::string> gen{"gen", "--m", "32", "--seed", "3", "--basis", "tight"};
  EXPECT_EQ(call(gen).out, call(gen).out);
  const auto inst = write("i.json", call(gen).out);
  const std::vector<std::string> gamma{"gamma", inst, "--delta0", "1/256", "--delta1", "1/4096", "--jobs", "1"};
  auto one = call(gamma);
  auto g2 = gamma;
  g2.back() = "3";
  ASSERT_EQ(one.code, cli::kExitOk) << one.err;
  EXPECT_EQ(one.out, call(g2).out);
}

TEST_F(Cli, LMinExitCodes) {
  const auto ones = instance("1,1,1,1", "1/8");
  auto r = call({"lmin", ones, "--budget", "2"});
  EXPECT_EQ(r.code, cli::kExitNegative);
  EXPECT_EQ(r.j()["budget_exceeded"], true);
  EXPECT_EQ(r.j()["lower_bound"], "3");
  r = call({"lmin", ones, "--budget", "6"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.j()["value"], "4");
  r = call({"lmin", instance("1,1", "1/4"), "--budget", "4"});
  EXPECT_EQ(r.j()["witness"], json::array({"1", "1"}));
  r = call({"lmin", ones, "--budget", "3", "--eps", "1/4"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.j()["eps"], "1/4");
}

TEST_F(Cli, LMinOnGeneratedInstance) {
  const auto inst = path("inst.json");
  ASSERT_EQ(call({"gen", "--m", "8", "--seed", "7", "--eps", "1/4", "-o", inst}).code, 0);
  const auto r = call({"lmin", inst, "--budget", "2"});
  EXPECT_TRUE(r.code == cli::kExitOk || r.code == cli::kExitNegative);
  EXPECT_EQ(r.j()["search_budget"], "2");
}

TEST_F(Cli, Errors) {
  auto r = call({});
  EXPECT_EQ(r.code, cli::kExitError);
  r = call({"nope"});
  EXPECT_EQ(r.code, cli::kExitError);
  r = call({"lmin", path("missing.json")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_FALSE(r.err.empty());
  r = call({"lmin", instance("1,1", "1/4"), "--budget", "x"});
  EXPECT_EQ(r.code, cli::kExitError);
  r = call({"gen", "--m", "4"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("DimensionOverflow"), std::string::npos);
  r = call({"lmin", write("bad.json", "{\"c\": [\"1\"], \"eps\": \"1/2\"}")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("InvalidEpsilon"), std::string::npos);
}

TEST_F(Cli, Upper) {
  const auto r = call({"upper", instance("1,1", "1/4")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["ctilde"], json::array({"4", "4"}));
  EXPECT_EQ(r.j()["report"]["critical"], true);
  EXPECT_EQ(r.j()["norm_bound"], "8");
}

TEST_F(Cli, RankBoundExamples) {
  auto r = call({"rank-bound", "--gamma", "2", "--delta0", "1/4", "--delta1", "1/16"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["floor_bound"], "1");
  r = call({"rank-bound", "--gamma", "1", "--delta0", "1/4", "--delta1", "1/16"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("GammaTooSmall"), std::string::npos);
  r = call({"rank-bound", "--gamma", "2"});
  EXPECT_EQ(r.code, cli::kExitError);
}

TEST_F(Cli, GammaCertificatePipeline) {
  const auto inst = path("inst.json");
  ASSERT_EQ(call({"gen", "--m", "32", "--D", "65536", "--basis", "tight", "--seed", "1", "-o", inst}).code, 0);
  const auto cert = path("cert.json");
  auto r = call({"gamma", inst, "--delta0", "1/256", "--delta1", "1/65536", "-o", cert});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(slurp(cert));
  EXPECT_EQ(j["kind"], "gamma_certificate");
  EXPECT_EQ(j["method"], "necessary_condition");
  EXPECT_TRUE(j["rank"].contains("floor_bound"));

  // Round trip: the parsed certificate re-serializes to the same fields.
  auto parsed = json_io::to_json(json_io::gamma_certificate_from_json(j));
  for (const auto& [k, v] : parsed.items()) EXPECT_EQ(j.at(k), v) << k;

  r = call({"verify-cert", cert});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["ok"], true);
  r = call({"rank-bound", "--cert", cert});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["verified"], true);
  EXPECT_EQ(r.j()["floor_bound"], j["rank"]["floor_bound"]);

  auto bad = j;
  bad["gamma"] = "1000";
  const auto bad_path = write("bad.json", bad.dump());
  r = call({"verify-cert", bad_path});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_EQ(r.j()["ok"], false);
  EXPECT_EQ(call({"rank-bound", "--cert", bad_path}).code, cli::kExitError);
}

TEST_F(Cli, ExactGammaOnSmallInstance) {
  const auto r = call({"gamma", instance("1,1,1,1", "1/4"), "--method", "exact_lmin", "--delta0", "1/4", "--delta1",
                       "1/8", "--grid", "1/4,1/8", "--lmin-budget", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["gamma"], "3/8");
  const auto cert = write("c.json", r.out);
  EXPECT_EQ(call({"verify-cert", cert}).code, 0);
}

TEST_F(Cli, GreedyCertificate) {
  const auto inst = path("inst.json");
  ASSERT_EQ(call({"gen", "--m", "160", "--D", "64", "--basis", "tight", "--seed", "2", "-o", inst}).code, 0);
  const auto cert = path("g.json");
  auto r = call({"greedy-cert", inst, "--random-max", "50", "--seed", "5", "-o", cert});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(slurp(cert));
  EXPECT_EQ(j["kind"], "greedy_certificate");
  EXPECT_EQ(j["claims"]["fills_exactly"], true);
  EXPECT_EQ(j["claims"]["certified_bound_holds"], true);
  r = call({"verify-cert", cert});
  EXPECT_EQ(r.code, 0) << r.err;

  auto bad = j;
  bad["achieved"] = "1";
  r = call({"verify-cert", write("bad.json", bad.dump())});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_EQ(call({"greedy-cert", inst}).code, cli::kExitError);
}

TEST_F(Cli, AuditVerdictExitCodes) {
  auto r = call({"audit", "--a", "4,5", "--D", "4", "--eps", "1/8", "--alpha", "1/2", "--mode", "exhaustive"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["verdict"], "counterexample_found");
  r = call({"audit"});
  EXPECT_EQ(r.code, cli::kExitError);
}

TEST_F(Cli, ClosureAndTrace) {
  auto r = call({"closure", "--c", "1,1", "--eps", "1/4", "--K", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["eps_bar"], "0");
  const auto poly = write("p.json", r.out);
  r = call({"closure", "--poly", poly});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["eps_bar"], "0");

  r = call({"trace", "--c", "1,1", "--eps", "1/4", "--rounds", "2", "--k-sweep"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# {", 0), 0u);
  EXPECT_NE(r.out.find("1/4"), std::string::npos);
  EXPECT_NE(r.out.find("unchanged"), std::string::npos);
  EXPECT_EQ(call({"closure", "--c", "1,1,1,1,1", "--eps", "1/4"}).code, cli::kExitError);
}

}  // namespace
}  // namespace gcrank
