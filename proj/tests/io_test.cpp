#include <gtest/gtest.h>

#include "gk/io.hpp"
#include "support.hpp"

using namespace gk;

namespace {

ErrorCode parse_failure(const std::string& text) {
  try {
    instance_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::BadArgument;
}

}  // namespace

TEST(InstanceJson, RoundTrip) {
  const std::string text =
      R"({"version":1,"variant":"shortest_path","n":3,"weights":[1,2,3],"values":[4,5,6],)"
      R"("edges":[[1,0,2],[1,2]],"s":7,"d":3,"x":0,"y":2})";
  const Instance inst = instance_from_json(Json::parse(text));
  EXPECT_EQ(inst.edges[0], (Edge{0, 1, 2}));
  EXPECT_EQ(inst.edges[1], (Edge{1, 2, 1}));
  EXPECT_EQ(instance_from_json(instance_to_json(inst)).edges, inst.edges);
  EXPECT_EQ(instance_to_json(instance_from_json(instance_to_json(inst))), instance_to_json(inst));
}

TEST(InstanceJson, Rejections) {
  const std::string base = R"("variant":"connected","n":2,"weights":[1,1],"values":[1,1],"edges":[[0,1]],"s":1)";
  EXPECT_EQ(parse_failure("{\"version\":1," + base + ",\"extra\":1}"), ErrorCode::BadField);
  EXPECT_EQ(parse_failure("{\"version\":2," + base + "}"), ErrorCode::BadField);
  EXPECT_EQ(parse_failure("{" + base + "}"), ErrorCode::BadField);
  EXPECT_EQ(parse_failure(R"({"version":1,"variant":"path","n":2,"weights":[1,1],"values":[1,1],"edges":[],"s":1})"),
            ErrorCode::MissingTerminal);
  EXPECT_EQ(parse_failure(R"({"version":1,"variant":"connected","n":2,"weights":[1.5,1],"values":[1,1],"edges":[],"s":1})"),
            ErrorCode::BadField);
  EXPECT_EQ(parse_failure(R"({"version":1,"variant":"connected","n":2,"weights":[1,1],"values":[1,1],"edges":[[0,0]],"s":1})"),
            ErrorCode::SelfLoop);
}

TEST(ReportJson, OmitsTimingByDefault) {
  SolveReport r;
  r.feasible = true;
  r.best_value = 3;
  r.witness = std::vector<Vertex>{0, 1};
  r.frontier = ParetoSet::from_pairs({{1, 3}}, 5);
  r.stats.wall_time_ms = 1.5;
  const Json j = report_to_json(r);
  EXPECT_FALSE(j["stats"].contains("wall_time_ms"));
  EXPECT_TRUE(report_to_json(r, true)["stats"].contains("wall_time_ms"));
  EXPECT_EQ(j["frontier"], Json::parse("[[1,3]]"));
  EXPECT_FALSE(j.contains("scaled_value"));
}

TEST(SourceJson, GraphAndItems) {
  const SimpleGraph g = graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})"));
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(graph_to_json(g), Json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})"));
  const KnapsackItems items = items_from_json(Json::parse(R"({"sizes":[2,3],"profits":[3,4],"capacity":5,"target":7})"));
  EXPECT_EQ(items.capacity, 5);
  EXPECT_THROW(items_from_json(Json::parse(R"({"sizes":[2],"profits":[3,4],"capacity":5,"target":7})")), Error);
  EXPECT_THROW(witness_from_json(Json::parse(R"({"a":1})")), Error);
}
