#include "gk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gk {
namespace {

std::int64_t integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::BadField, what + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::BadField, std::string("missing field '") + key + "'");
  return integer(j.at(key), key);
}

std::vector<std::int64_t> integer_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::BadField, what + " must be an array");
  std::vector<std::int64_t> out;
  for (const Json& item : j) out.push_back(integer(item, what + " entry"));
  return out;
}

void only_fields(const Json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw Error(ErrorCode::BadField, "expected a JSON object");
  std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& item : j.items())
    if (!names.count(item.key())) throw Error(ErrorCode::BadField, "unknown field '" + item.key() + "'");
}

Vertex vertex_id(const Json& j, const std::string& what) {
  const std::int64_t v = integer(j, what);
  if (v < INT32_MIN || v > INT32_MAX) throw Error(ErrorCode::IdOutOfRange, what + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

Instance instance_from_json(const Json& j) {
  only_fields(j, {"version", "variant", "n", "weights", "values", "edges", "s", "d", "x", "y"});
  if (field(j, "version") != 1) throw Error(ErrorCode::BadField, "unsupported version");
  if (!j.contains("variant") || !j.at("variant").is_string()) throw Error(ErrorCode::BadField, "variant must be a string");
  Instance inst;
  inst.variant = variant_from_string(j.at("variant").get<std::string>());
  const std::int64_t n = field(j, "n");
  if (n < 0 || n > INT32_MAX) throw Error(ErrorCode::BadField, "n out of range");
  inst.n = static_cast<int>(n);
  if (!j.contains("weights") || !j.contains("values") || !j.contains("edges"))
    throw Error(ErrorCode::BadField, "weights, values and edges are required");
  inst.weight = integer_list(j.at("weights"), "weights");
  inst.value = integer_list(j.at("values"), "values");
  if (!j.at("edges").is_array()) throw Error(ErrorCode::BadField, "edges must be an array");
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3))
      throw Error(ErrorCode::BadField, "edge must be [u, v] or [u, v, cost]");
    Edge edge{vertex_id(e[0], "edge endpoint"), vertex_id(e[1], "edge endpoint"), 1};
    if (e.size() == 3) edge.cost = integer(e[2], "edge cost");
    inst.edges.push_back(edge);
  }
  inst.s = field(j, "s");
  if (j.contains("d")) inst.d = field(j, "d");
  if (j.contains("x")) inst.x = vertex_id(j.at("x"), "x");
  if (j.contains("y")) inst.y = vertex_id(j.at("y"), "y");
  if (inst.variant == Variant::Connected && (inst.x || inst.y))
    throw Error(ErrorCode::BadField, "x and y are only allowed for path variants");
  return validate_instance(std::move(inst));
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["version"] = 1;
  j["variant"] = to_string(inst.variant);
  j["n"] = inst.n;
  j["weights"] = inst.weight;
  j["values"] = inst.value;
  Json edges = Json::array();
  for (const Edge& e : inst.edges) {
    if (inst.variant == Variant::ShortestPath) edges.push_back({e.u, e.v, e.cost});
    else edges.push_back({e.u, e.v});
  }
  j["edges"] = std::move(edges);
  j["s"] = inst.s;
  if (inst.d) j["d"] = *inst.d;
  if (inst.x) j["x"] = *inst.x;
  if (inst.y) j["y"] = *inst.y;
  return j;
}

Json report_to_json(const SolveReport& report, bool timing) {
  Json j;
  j["feasible"] = report.feasible;
  j["best_value"] = report.best_value ? Json(*report.best_value) : Json(nullptr);
  j["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
  Json frontier = Json::array();
  for (const ParetoPair& p : report.frontier) frontier.push_back({p.w, p.a});
  j["frontier"] = std::move(frontier);
  if (report.scaled_value) j["scaled_value"] = *report.scaled_value;
  Json stats;
  stats["nodes_expanded"] = report.stats.nodes_expanded;
  stats["states_touched"] = report.stats.states_touched;
  stats["unreachable"] = report.stats.unreachable;
  if (timing) stats["wall_time_ms"] = report.stats.wall_time_ms;
  j["stats"] = std::move(stats);
  return j;
}

Json decomposition_to_json(const NiceDecomposition& nd) {
  Json j;
  j["width"] = nd.width;
  j["root"] = nd.root;
  j["pinned"] = nd.pinned;
  Json nodes = Json::array();
  for (std::size_t t = 0; t < nd.nodes.size(); ++t) {
    const NiceNode& node = nd.nodes[t];
    Json item;
    item["id"] = t;
    item["kind"] = std::string(to_string(node.kind));
    item["bag"] = node.bag;
    item["children"] = node.children;
    if (node.kind == NodeKind::IntroduceVertex || node.kind == NodeKind::ForgetVertex) item["vertex"] = node.vertex;
    if (node.kind == NodeKind::IntroduceEdge) item["edge"] = {node.edge.u, node.edge.v};
    nodes.push_back(std::move(item));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

Json tree_decomposition_to_json(const TreeDecomposition& td) {
  Json j;
  j["width"] = td.width();
  j["bags"] = td.bags;
  j["parent"] = td.parent;
  return j;
}

SimpleGraph graph_from_json(const Json& j) {
  only_fields(j, {"n", "edges", "x", "y"});
  SimpleGraph g;
  const std::int64_t n = field(j, "n");
  if (n < 1 || n > 30) throw Error(ErrorCode::BadField, "graph n must lie in [1, 30]");
  g.n = static_cast<int>(n);
  if (!j.contains("edges") || !j.at("edges").is_array()) throw Error(ErrorCode::BadField, "edges must be an array");
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::BadField, "edge must be [u, v]");
    g.edges.push_back({vertex_id(e[0], "edge endpoint"), vertex_id(e[1], "edge endpoint")});
  }
  return g;
}

Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

KnapsackItems items_from_json(const Json& j) {
  only_fields(j, {"sizes", "profits", "capacity", "target"});
  KnapsackItems items;
  if (!j.contains("sizes") || !j.contains("profits")) throw Error(ErrorCode::BadField, "sizes and profits are required");
  items.size = integer_list(j.at("sizes"), "sizes");
  items.profit = integer_list(j.at("profits"), "profits");
  items.capacity = field(j, "capacity");
  items.target = field(j, "target");
  if (items.size.empty() || items.size.size() != items.profit.size())
    throw Error(ErrorCode::BadField, "sizes and profits must be nonempty and of equal length");
  for (auto v : items.size)
    if (v < 0) throw Error(ErrorCode::BadField, "negative size");
  for (auto v : items.profit)
    if (v < 0) throw Error(ErrorCode::BadField, "negative profit");
  if (items.capacity < 0 || items.target < 0) throw Error(ErrorCode::BadField, "negative capacity or target");
  return items;
}

Json items_to_json(const KnapsackItems& items) {
  Json j;
  j["sizes"] = items.size;
  j["profits"] = items.profit;
  j["capacity"] = items.capacity;
  j["target"] = items.target;
  return j;
}

Json provenance_to_json(const ReductionOutput& out) {
  Json j;
  j["reduction"] = out.reduction;
  Json params = Json::object();
  for (const auto& [name, value] : out.parameters) params[name] = value;
  j["parameters"] = std::move(params);
  if (out.source_graph) j["source"] = graph_to_json(*out.source_graph);
  if (out.source_items) j["source"] = items_to_json(*out.source_items);
  Json roles = Json::array();
  for (const RoleEntry& r : out.provenance) {
    Json item;
    item["role"] = to_string(r.role);
    item["index"] = r.index;
    roles.push_back(std::move(item));
  }
  j["roles"] = std::move(roles);
  if (out.path_decomposition) j["path_decomposition"] = tree_decomposition_to_json(*out.path_decomposition);
  return j;
}

std::vector<Vertex> witness_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadField, "witness must be an array of vertex ids");
  std::vector<Vertex> out;
  for (const Json& v : j) out.push_back(vertex_id(v, "witness entry"));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace gk
