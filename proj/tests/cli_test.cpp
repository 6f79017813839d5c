#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gk/io.hpp"

namespace {

namespace fs = std::filesystem;

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run(const std::string& args) {
  const std::string cmd = std::string(GK_BINARY) + " " + args + " 2>/dev/null";
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gk_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  fs::path dir_;
};

const char* kDiamond =
    R"({"version":1,"variant":"shortest_path","n":4,"weights":[0,2,1,0],"values":[0,5,1,0],)"
    R"("edges":[[0,1,1],[0,2,1],[1,3,1],[2,3,1]],"s":2,"x":0,"y":3})";

const char* kPath3 =
    R"({"version":1,"variant":"connected","n":3,"weights":[1,1,1],"values":[1,1,1],"edges":[[0,1],[1,2]],"s":3})";

}  // namespace

TEST_F(CliTest, SolveDiamondWithLabels) {
  const CmdResult r = run("solve --input " + file("d.json", kDiamond) + " --engine labels --mode optimize");
  EXPECT_EQ(r.code, 0);
  const gk::Json j = gk::Json::parse(r.out);
  EXPECT_EQ(j["best_value"], 5);
  EXPECT_EQ(j["engine"], "labels");
}

TEST_F(CliTest, InfeasibleDecisionExitsOne) {
  const std::string inst =
      R"({"version":1,"variant":"connected","n":2,"weights":[3,3],"values":[1,1],"edges":[[0,1]],"s":2,"d":1})";
  EXPECT_EQ(run("solve --input " + file("i.json", inst)).code, 1);
}

TEST_F(CliTest, EngineMismatchExitsTwo) {
  EXPECT_EQ(run("solve --input " + file("c.json", kPath3) + " --engine labels").code, 2);
  EXPECT_EQ(run("solve --input " + file("c.json", kPath3) + " --mode decision").code, 2);
  EXPECT_EQ(run("solve --input " + file("bad.json", "{not json")).code, 2);
  EXPECT_EQ(run("solve --input " + file("c.json", kPath3) + " --engine bogus").code, 2);
}

TEST_F(CliTest, AutoEngineChoices) {
  EXPECT_EQ(gk::Json::parse(run("solve --input " + file("c.json", kPath3)).out)["engine"], "treewidth");
  EXPECT_EQ(gk::Json::parse(run("solve --input " + file("d.json", kDiamond)).out)["engine"], "labels");
  const std::string tree =
      R"({"version":1,"variant":"path","n":3,"weights":[1,1,1],"values":[1,1,1],"edges":[[0,1],[1,2]],"s":3,"x":0,"y":2})";
  EXPECT_EQ(gk::Json::parse(run("solve --input " + file("t.json", tree)).out)["engine"], "tree");
}

TEST_F(CliTest, EpsilonAndOracle) {
  const CmdResult approx = run("solve --input " + file("c.json", kPath3) + " --epsilon 1/10");
  EXPECT_EQ(approx.code, 0);
  EXPECT_EQ(gk::Json::parse(approx.out)["best_value"], 3);
  EXPECT_EQ(run("solve --input " + file("c.json", kPath3) + " --epsilon 3/2").code, 2);
  EXPECT_EQ(gk::Json::parse(run("solve --input " + file("c.json", kPath3) + " --engine oracle").out)["best_value"], 3);
}

TEST_F(CliTest, GenerateRandomIsDeterministic) {
  const CmdResult a = run("generate --random tree --n 8 --seed 7");
  const CmdResult b = run("generate --random tree --n 8 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(gk::instance_from_json(gk::Json::parse(a.out)));
  EXPECT_EQ(run("generate --random gnp --n -1").code, 2);
}

TEST_F(CliTest, GenerateLadderWithSidecar) {
  const std::string items = file("items.json", R"({"sizes":[2,3],"profits":[3,4],"capacity":5,"target":7})");
  const std::string out = (dir_ / "ladder.json").string();
  EXPECT_EQ(run("generate --reduction ladder --items " + items + " --output " + out).code, 0);
  const gk::Instance inst = gk::instance_from_json(gk::read_json_file(out));
  EXPECT_EQ(inst.n, 7);
  const gk::Json prov = gk::read_json_file(out + ".provenance.json");
  EXPECT_EQ(prov["reduction"], "ladder");
  EXPECT_EQ(prov["path_decomposition"]["width"], 2);
  EXPECT_EQ(run("solve --input " + out).code, 0);
  EXPECT_EQ(run("generate --reduction vc --items " + items).code, 2);
}

TEST_F(CliTest, Verify) {
  const std::string inst = file("c.json", kPath3);
  EXPECT_EQ(run("verify --input " + inst + " --witness " + file("w1.json", "[0,1,2]")).code, 0);
  const CmdResult split = run("verify --input " + inst + " --witness " + file("w2.json", "[0,2]"));
  EXPECT_EQ(split.code, 1);
  EXPECT_EQ(gk::Json::parse(split.out)["reason"], "disconnected");
  EXPECT_EQ(run("verify --input " + inst + " --witness " + file("w3.json", "[0,7]")).code, 2);
}

TEST_F(CliTest, Decompose) {
  const std::string tree =
      R"({"version":1,"variant":"connected","n":4,"weights":[0,0,0,0],"values":[0,0,0,0],"edges":[[0,1],[1,2],[1,3]],"s":0})";
  const CmdResult r = run("decompose --input " + file("t.json", tree));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(gk::Json::parse(r.out)["width"], 1);
  const CmdResult pinned = run("decompose --input " + file("p.json", kPath3) + " --pin 0,2");
  for (const auto& node : gk::Json::parse(pinned.out)["nodes"]) {
    const auto bag = node["bag"].get<std::vector<int>>();
    EXPECT_TRUE(std::count(bag.begin(), bag.end(), 0) && std::count(bag.begin(), bag.end(), 2));
  }
  EXPECT_EQ(run("decompose --input " + file("p.json", kPath3) + " --pin 9").code, 2);
  EXPECT_EQ(run("decompose --input " + file("p.json", kPath3) + " --pin 0,1,2").code, 2);
  EXPECT_EQ(run("decompose --input " + file("p.json", kPath3) + " --pin x").code, 2);
}
