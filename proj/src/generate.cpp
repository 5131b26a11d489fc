#include "nnto/generate.hpp"

#include <numeric>

#include "nnto/error.hpp"

namespace nnto {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the incomplete final block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(span == 0 ? next() : below(span));
}

bool Rng::chance(const Rational& p) {
  if (p.sign() <= 0) return false;
  if (p >= Rational(1)) return true;
  return below(static_cast<std::uint64_t>(p.den())) < static_cast<std::uint64_t>(p.num());
}

WeightedDag generate_dag(const GenParams& params) {
  if (params.n > kMaxVertices) throw Error(ErrorKind::CapExceeded, "too many vertices");
  if (params.weight_min > params.weight_max) throw Error(ErrorKind::PreconditionViolated, "empty weight range");
  Rng rng(params.seed);

  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < params.n; ++i) {
    vertices.push_back({"v" + std::to_string(i), Weight(rng.between(params.weight_min, params.weight_max))});
  }

  // Fisher-Yates for the hidden rank order; std::shuffle's algorithm is
  // implementation-defined.
  std::vector<std::size_t> rank_order(params.n);
  std::iota(rank_order.begin(), rank_order.end(), 0);
  for (std::size_t i = params.n; i > 1; --i) std::swap(rank_order[i - 1], rank_order[rng.below(i)]);

  std::vector<EdgeSpec> edges;
  for (std::size_t lo = 0; lo < params.n; ++lo) {
    for (std::size_t hi = lo + 1; hi < params.n; ++hi) {
      if (rng.chance(params.edge_prob)) {
        edges.emplace_back(vertices[rank_order[lo]].label, vertices[rank_order[hi]].label);
      }
    }
  }
  return build_dag(vertices, edges);
}

BipartiteGraph generate_bipartite(const GenParams& params) {
  Rng rng(params.seed);
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (std::size_t i = 1; i <= params.n_a; ++i) a.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= params.n_b; ++i) b.push_back("b" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < params.n_a; ++i) {
    for (std::size_t j = 0; j < params.n_b; ++j) {
      if (rng.chance(params.edge_prob)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph::from_indices(std::move(a), std::move(b), edges);
}

BoolMatrix generate_matrix(const GenParams& params) {
  Rng rng(params.seed);
  BoolMatrix m(params.n);
  for (std::size_t r = 0; r < params.n; ++r) {
    for (std::size_t c = 0; c < params.n; ++c) m.set(r, c, rng.chance(params.edge_prob));
  }
  return m;
}

std::vector<Step> random_nn_walk(const WeightedDag& dag, Rng& rng, std::size_t max_steps,
                                 std::uint64_t mark_bias) {
  if (mark_bias == 0) mark_bias = 1;
  std::vector<Step> steps;
  VertexSet marked;
  Weight weight;
  std::vector<Step> moves;
  while (steps.size() < max_steps && marked != dag.all()) {
    moves.clear();
    std::uint64_t total = 0;
    for (VertexId v = 0; v < dag.size(); ++v) {
      if (marked.contains(v)) {
        if (!dag.successors(v).intersects(marked) && (weight - dag.weight(v)).sign() >= 0) {
          moves.push_back(Step::unmark(v));
          total += 1;
        }
      } else if (dag.predecessors(v).subset_of(marked) && (weight + dag.weight(v)).sign() >= 0) {
        moves.push_back(Step::mark(v));
        total += mark_bias;
      }
    }
    if (moves.empty()) break;

    std::uint64_t roll = rng.below(total);
    Step chosen = moves.back();
    for (const Step& m : moves) {
      const std::uint64_t share = m.op == StepOp::Mark ? mark_bias : 1;
      if (roll < share) {
        chosen = m;
        break;
      }
      roll -= share;
    }
    steps.push_back(chosen);
    if (chosen.op == StepOp::Mark) {
      marked.insert(chosen.v);
      weight += dag.weight(chosen.v);
    } else {
      marked.erase(chosen.v);
      weight -= dag.weight(chosen.v);
    }
  }
  return steps;
}

}  // namespace nnto
