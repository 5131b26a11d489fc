#include "doctest.h"
#include "nnto/error.hpp"
#include "nnto/generate.hpp"
#include "nnto/io.hpp"
#include "support.hpp"

using namespace testing;
using nnto::io::json;

TEST_CASE("dag schema") {
  const auto g = nnto::io::parse_dag(json::parse(R"({"kind": "dag",
      "vertices": [{"id": "a", "weight": 1}, {"id": "b", "weight": "-1/2"}, {"id": "c", "weight": "0.25"}],
      "edges": [["a", "b"]]})"));
  CHECK(g.weights() == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 4)});
  CHECK(nnto::io::parse_dag(nnto::io::dag_to_json(g)).weights() == g.weights());
  for (const char* bad : {R"({"vertices": 3})", R"({"vertices": [{"id": "a"}]})",
                          R"({"kind": "bipartite", "vertices": []})", R"({"vertices": [{"id": 1, "weight": 1}]})",
                          R"({"vertices": [{"id": "a", "weight": 1.5}]})", R"({"vertices": [], "edges": [["a"]]})"}) {
    CHECK_THROWS_AS(nnto::io::parse_dag(json::parse(bad)), Error);
  }
}

TEST_CASE("sequence and ordering schema") {
  const auto g = intro4();
  const auto seq = nnto::io::parse_sequence(json::parse(R"({"steps": [{"op": "mark", "v": "a"}]})"), g);
  CHECK(seq.terminal == Terminal::Full);
  CHECK(seq.steps == std::vector<Step>{Step::mark(0)});
  const MarkUnmarkSequence full{intro4_sequence(), Terminal::Partial};
  CHECK(nnto::io::parse_sequence(nnto::io::sequence_to_json(full, g), g) == full);
  CHECK_THROWS_AS(nnto::io::parse_sequence(json::parse(R"({"steps": [{"op": "flip", "v": "a"}]})"), g), Error);
  CHECK_THROWS_AS(nnto::io::parse_sequence(json::parse(R"({"steps": [{"op": "mark", "v": "zz"}]})"), g), Error);
  CHECK_THROWS_AS(nnto::io::parse_sequence(json::parse(R"({"steps": [], "terminal": "done"})"), g), Error);

  const Ordering o{{3, 1, 2, 0}};
  CHECK(nnto::io::parse_ordering(nnto::io::ordering_to_json(o, g), g) == o);
}

TEST_CASE("bipartite and matrix schema") {
  const auto bg = nnto::io::parse_bipartite(json::parse(R"({"a": ["u"], "b": ["x"], "edges": [["u", "x"]]})"));
  CHECK(bg.edge_count() == 1);
  CHECK_THROWS_AS(nnto::io::parse_bipartite(json::parse(R"({"a": ["u"], "b": ["u"]})")), Error);
  CHECK_THROWS_AS(nnto::io::parse_bipartite(json::parse(R"({"a": ["u"], "b": ["x"], "edges": [["x", "u"]]})")), Error);
  const auto m = nnto::io::parse_matrix(json::parse(R"({"rows": [[0, 1], [1, 1]]})"));
  CHECK(nnto::io::parse_matrix(nnto::io::matrix_to_json(m)) == m);
  CHECK_THROWS_AS(nnto::io::parse_matrix(json::parse(R"({"rows": [[0, 1], [1]]})")), Error);
}

TEST_CASE("round trips on generated instances") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenParams p;
    p.seed = seed;
    p.n = 1 + seed % 8;
    p.n_a = seed % 5;
    p.n_b = (seed / 5) % 5;
    p.edge_prob = Rational(1, 2);
    const auto g = generate_dag(p);
    const auto g2 = nnto::io::parse_dag(json::parse(nnto::io::dump(nnto::io::envelope(nnto::io::dag_to_json(g), "dag"))));
    CHECK(g2.labels() == g.labels());
    CHECK(g2.weights() == g.weights());
    CHECK(g2.edges() == g.edges());
    const auto bg = generate_bipartite(p);
    CHECK(nnto::io::parse_bipartite(nnto::io::bipartite_to_json(bg)) == bg);
    const auto m = generate_matrix(p);
    CHECK(nnto::io::parse_matrix(nnto::io::matrix_to_json(m)) == m);
  }
}

TEST_CASE("envelope") {
  const auto e = nnto::io::envelope({{"rows", json::array()}}, "matrix", {{"seed", 3}});
  CHECK(e["kind"] == "matrix");
  CHECK(e["meta"]["seed"] == 3);
  CHECK_THROWS_AS(nnto::io::read_json_file("/nonexistent/file.json"), Error);
}
