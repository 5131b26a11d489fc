#include "nnto/io.hpp"

#include <fstream>
#include <sstream>

#include "nnto/error.hpp"

namespace nnto::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void check_kind(const json& j, std::string_view expected) {
  if (!j.is_object()) schema_error("expected a JSON object");
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string() || it->get<std::string>() != expected) {
      schema_error("expected kind \"" + std::string(expected) + "\"");
    }
  }
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing member \"") + key + "\"");
  return *it;
}

const json& array_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_array()) schema_error(std::string("\"") + key + "\" must be an array");
  return v;
}

std::string string_of(const json& v, const char* what) {
  if (!v.is_string()) schema_error(std::string(what) + " must be a string");
  return v.get<std::string>();
}

Weight weight_of(const json& v) {
  if (v.is_number_integer()) return Weight(v.get<std::int64_t>());
  if (v.is_string()) return Weight::parse(v.get<std::string>());
  schema_error("weight must be an integer or an exact decimal string");
}

std::pair<std::string, std::string> label_pair(const json& v) {
  if (!v.is_array() || v.size() != 2) schema_error("edge must be a two-element array");
  return {string_of(v[0], "edge endpoint"), string_of(v[1], "edge endpoint")};
}

std::vector<std::string> label_list(const json& v) {
  std::vector<std::string> out;
  for (const auto& item : v) out.push_back(string_of(item, "label"));
  return out;
}

VertexId resolve(const WeightedDag& dag, const std::string& label) {
  auto v = dag.find(label);
  if (!v) schema_error("unknown vertex '" + label + "'");
  return *v;
}

}  // namespace

WeightedDag parse_dag(const json& j) {
  check_kind(j, "dag");
  std::vector<VertexSpec> vertices;
  for (const auto& v : array_member(j, "vertices")) {
    if (!v.is_object()) schema_error("vertex must be an object");
    vertices.push_back({string_of(member(v, "id"), "vertex id"), weight_of(member(v, "weight"))});
  }
  std::vector<EdgeSpec> edges;
  if (j.contains("edges")) {
    for (const auto& e : array_member(j, "edges")) edges.push_back(label_pair(e));
  }
  return build_dag(vertices, edges);
}

json dag_to_json(const WeightedDag& dag) {
  json vertices = json::array();
  for (VertexId v = 0; v < dag.size(); ++v) {
    vertices.push_back({{"id", dag.label(v)}, {"weight", dag.weight(v).to_string()}});
  }
  json edges = json::array();
  for (auto [tail, head] : dag.edges()) edges.push_back({dag.label(tail), dag.label(head)});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

MarkUnmarkSequence parse_sequence(const json& j, const WeightedDag& dag) {
  check_kind(j, "sequence");
  MarkUnmarkSequence seq;
  for (const auto& s : array_member(j, "steps")) {
    if (!s.is_object()) schema_error("step must be an object");
    const std::string op = string_of(member(s, "op"), "op");
    const VertexId v = resolve(dag, string_of(member(s, "v"), "step vertex"));
    if (op == "mark") {
      seq.steps.push_back(Step::mark(v));
    } else if (op == "unmark") {
      seq.steps.push_back(Step::unmark(v));
    } else {
      schema_error("op must be \"mark\" or \"unmark\"");
    }
  }
  if (auto it = j.find("terminal"); it != j.end()) {
    const std::string t = string_of(*it, "terminal");
    if (t == "full") {
      seq.terminal = Terminal::Full;
    } else if (t == "partial") {
      seq.terminal = Terminal::Partial;
    } else {
      schema_error("terminal must be \"full\" or \"partial\"");
    }
  }
  return seq;
}

json sequence_to_json(const MarkUnmarkSequence& seq, const WeightedDag& dag) {
  json steps = json::array();
  for (const Step& s : seq.steps) {
    steps.push_back({{"op", s.op == StepOp::Mark ? "mark" : "unmark"}, {"v", dag.label(s.v)}});
  }
  return {{"steps", std::move(steps)}, {"terminal", seq.terminal == Terminal::Full ? "full" : "partial"}};
}

Ordering parse_ordering(const json& j, const WeightedDag& dag) {
  check_kind(j, "ordering");
  Ordering out;
  for (const auto& item : array_member(j, "order")) out.order.push_back(resolve(dag, string_of(item, "vertex")));
  return out;
}

json ordering_to_json(const Ordering& ordering, const WeightedDag& dag) {
  json order = json::array();
  for (VertexId v : ordering.order) order.push_back(dag.label(v));
  return {{"order", std::move(order)}};
}

BipartiteGraph parse_bipartite(const json& j) {
  check_kind(j, "bipartite");
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    for (const auto& e : array_member(j, "edges")) edges.push_back(label_pair(e));
  }
  return BipartiteGraph(label_list(array_member(j, "a")), label_list(array_member(j, "b")), edges);
}

json bipartite_to_json(const BipartiteGraph& bg) {
  json edges = json::array();
  for (auto [a, b] : bg.edges()) edges.push_back({bg.a_labels()[a], bg.b_labels()[b]});
  return {{"a", bg.a_labels()}, {"b", bg.b_labels()}, {"edges", std::move(edges)}};
}

BoolMatrix parse_matrix(const json& j) {
  check_kind(j, "matrix");
  std::vector<std::vector<int>> rows;
  for (const auto& row : array_member(j, "rows")) {
    if (!row.is_array()) schema_error("matrix row must be an array");
    std::vector<int> cells;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) schema_error("matrix entries must be 0 or 1");
      cells.push_back(cell.get<int>());
    }
    rows.push_back(std::move(cells));
  }
  try {
    return BoolMatrix(rows);
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

json matrix_to_json(const BoolMatrix& m) { return {{"rows", m.rows()}}; }

json envelope(json payload, std::string_view kind, const json& meta) {
  payload["kind"] = std::string(kind);
  if (!meta.is_null()) payload["meta"] = meta;
  return payload;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    schema_error(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << dump(j);
}

}  // namespace nnto::io
