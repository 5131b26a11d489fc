#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nnto/bipartite.hpp"
#include "nnto/graph.hpp"
#include "nnto/rational.hpp"
#include "nnto/sequences.hpp"

namespace nnto {

/// std::mt19937_64, whose output sequence the standard fixes exactly, plus
/// bounded draws done by hand because the std distributions are allowed to
/// differ between library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability p, p in [0, 1].
  bool chance(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::uint64_t seed = 0;
  std::size_t n = 4;    ///< DAG vertices, matrix dimension
  std::size_t n_a = 3;  ///< bipartite class sizes
  std::size_t n_b = 3;
  Rational edge_prob{1, 3};
  std::int64_t weight_min = -2;
  std::int64_t weight_max = 2;
};

/// Vertices "v0".."v{n-1}" with uniform integer weights. A random rank
/// permutation is drawn and each pair gets an edge from lower to higher rank
/// with probability edge_prob, so the result is acyclic.
WeightedDag generate_dag(const GenParams& params);

/// Classes "a1".."a{n_a}", "b1".."b{n_b}", each cross pair an edge with
/// probability edge_prob.
BipartiteGraph generate_bipartite(const GenParams& params);

BoolMatrix generate_matrix(const GenParams& params);

/// Random walk of legal steps that keeps every marked set non-negative, until
/// every vertex is marked or max_steps steps were taken. Marks are preferred
/// over unmarks by mark_bias : 1 (at least 1). The result may be partial.
std::vector<Step> random_nn_walk(const WeightedDag& dag, Rng& rng, std::size_t max_steps,
                                 std::uint64_t mark_bias = 2);

}  // namespace nnto
