#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ovdiam/cli.hpp"

namespace {

namespace fs = std::filesystem;
using ovdiam::cli::Command;
using ovdiam::cli::RunConfig;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ovdiam_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int run(const RunConfig& cfg) {
    out_.str("");
    err_.str("");
    return ovdiam::cli::run(cfg, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

RunConfig config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  return cfg;
}

}  // namespace

TEST_F(CliTest, GenPlantedWritesInstanceAndWitness) {
  auto cfg = config(Command::Gen);
  cfg.n = 4;
  cfg.ell = 4;
  cfg.mode = ovdiam::GenMode::PlantedQuadruple;
  cfg.seed = 7;
  cfg.output = path("inst.txt");
  ASSERT_EQ(run(cfg), 0) << err_.str();
  EXPECT_NE(out_.str().find("seed=7"), std::string::npos);
  EXPECT_NE(out_.str().find("mode=planted"), std::string::npos);
  const auto inst = ovdiam::parse_instance(slurp(cfg.output));
  const auto witness = slurp(cfg.output + ".witness");
  auto quad = ovdiam::find_orthogonal_tuple(inst, 4);
  ASSERT_TRUE(quad);
  EXPECT_EQ(witness, ovdiam::to_string(*quad) + "\n");
  EXPECT_FALSE(ovdiam::find_orthogonal_tuple(inst, 3));
}

TEST_F(CliTest, GenNoQuadToStandardOutput) {
  auto cfg = config(Command::Gen);
  cfg.n = 4;
  cfg.ell = 6;
  cfg.seed = 1;
  ASSERT_EQ(run(cfg), 0);
  const auto inst = ovdiam::parse_instance(out_.str());
  EXPECT_FALSE(ovdiam::find_orthogonal_tuple(inst, 4));
  EXPECT_NE(err_.str().find("hash="), std::string::npos);

  const auto first = out_.str();
  ASSERT_EQ(run(cfg), 0);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, GenImpossiblePlantFails) {
  auto cfg = config(Command::Gen);
  cfg.n = 1;
  cfg.ell = 1;
  cfg.mode = ovdiam::GenMode::PlantedQuadruple;
  cfg.max_attempts = 20;
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitFailure);
  EXPECT_NE(err_.str().find("budget"), std::string::npos);
}

TEST_F(CliTest, Solve) {
  auto cfg = config(Command::Solve);
  cfg.input = write("d.txt", "4 4\n0111\n1011\n1101\n1110\n");
  cfg.k = 4;
  ASSERT_EQ(run(cfg), 0);
  EXPECT_EQ(out_.str(), "0 1 2 3\n");
  cfg.k = 3;
  ASSERT_EQ(run(cfg), 0);
  EXPECT_EQ(out_.str(), "none\n");
}

TEST_F(CliTest, ReduceSingleVector) {
  auto cfg = config(Command::Reduce);
  cfg.input = write("one.txt", "1 1\n1\n");
  cfg.graph_output = path("g.dimacs");
  cfg.labels_output = path("g.labels");
  ASSERT_EQ(run(cfg), 0) << err_.str();
  EXPECT_NE(out_.str().find("vertices 8\n"), std::string::npos);
  EXPECT_EQ(out_.str().find("VIOLATED"), std::string::npos);
  const auto graph = slurp(cfg.graph_output);
  EXPECT_NE(graph.find("\np sp 8 32\n"), std::string::npos);
  const auto labels = slurp(cfg.labels_output);
  EXPECT_EQ(labels.substr(0, 10), "1\tU\n2\tV\n3\t");

  auto diam = config(Command::Diameter);
  diam.input = cfg.graph_output;
  ASSERT_EQ(run(diam), 0);
  EXPECT_EQ(out_.str().substr(0, 2), "4\n");
  diam.approx2 = true;
  diam.pivot = 1;
  ASSERT_EQ(run(diam), 0);
  EXPECT_EQ(out_.str().substr(0, 2), "4\n");
}

TEST_F(CliTest, ReduceRejectsTriple) {
  auto cfg = config(Command::Reduce);
  cfg.input = write("t.txt", "2 2\n10\n01\n");
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitOutsideDomain);
  EXPECT_EQ(out_.str(), "orthogonal-triple 0 0 1\n");
}

TEST_F(CliTest, ReduceRespectsMemoryCap) {
  auto cfg = config(Command::Reduce);
  cfg.input = write("one.txt", "1 1\n1\n");
  cfg.max_bytes = 10;
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitFailure);
}

TEST_F(CliTest, DiameterOfSingleVertexAndDesign) {
  auto cfg = config(Command::Diameter);
  cfg.input = write("single.dimacs", "p sp 1 0\n");
  ASSERT_EQ(run(cfg), 0);
  EXPECT_EQ(out_.str(), "0\nargpair 1 1\n");

  auto red = config(Command::Reduce);
  red.input = write("d.txt", "4 4\n0111\n1011\n1101\n1110\n");
  red.graph_output = path("d.dimacs");
  ASSERT_EQ(run(red), 0);
  cfg.input = red.graph_output;
  ASSERT_EQ(run(cfg), 0);
  EXPECT_EQ(out_.str().substr(0, 2), "7\n");

  cfg.approx2 = true;
  cfg.pivot = 100000;
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitFailure);
}

TEST_F(CliTest, DiameterRejectsBadGraph) {
  auto cfg = config(Command::Diameter);
  cfg.input = write("bad.dimacs", "p sp 2 1\na 1 5 1\n");
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitFailure);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
}

TEST_F(CliTest, VerifyVerdicts) {
  auto cfg = config(Command::Verify);
  cfg.input = write("d.txt", "4 4\n0111\n1011\n1101\n1110\n");
  ASSERT_EQ(run(cfg), 0) << out_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
  EXPECT_NE(out_.str().find("VERDICT DIAM-GE-7"), std::string::npos);

  cfg.input = write("one.txt", "1 1\n1\n");
  ASSERT_EQ(run(cfg), 0) << out_.str();
  EXPECT_NE(out_.str().find("VERDICT DIAM-4"), std::string::npos);

  cfg.input = write("t.txt", "2 2\n10\n01\n");
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitFailure);
  EXPECT_EQ(out_.str().rfind("FAIL precondition", 0), 0u);
}

TEST_F(CliTest, BenchTable) {
  auto cfg = config(Command::Bench);
  cfg.bench_n = {2, 3};
  cfg.bench_ell = {4};
  cfg.density = 0.5;
  ASSERT_EQ(run(cfg), 0) << err_.str();
  std::istringstream lines(out_.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_NE(header.find("build_ms\texact_ms\tapprox2_ms"), std::string::npos);
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    EXPECT_EQ(std::count(row.begin(), row.end(), '\t'), 10);
  }
  EXPECT_EQ(rows, 2);
  const auto first = out_.str();
  ASSERT_EQ(run(cfg), 0);
  // Instance hashes repeat across runs with the same seed.
  auto hashes = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::istringstream f(line);
      std::string a, b, c, h;
      f >> a >> b >> c >> h;
      out.push_back(h);
    }
    return out;
  };
  EXPECT_EQ(hashes(first), hashes(out_.str()));
}

TEST_F(CliTest, MissingInputFileFails) {
  auto cfg = config(Command::Solve);
  cfg.input = path("nope.txt");
  EXPECT_EQ(run(cfg), ovdiam::cli::kExitFailure);
  EXPECT_NE(err_.str().find("error:"), std::string::npos);
}
