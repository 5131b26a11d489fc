#pragma once

// Fixtures and brute-force reference deciders. The deciders here deliberately
// share no code with the library searches: they enumerate permutations or
// subsets directly and check the defining conditions by hand.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "nnto/bipartite.hpp"
#include "nnto/graph.hpp"
#include "nnto/sequences.hpp"

namespace testing {

using namespace nnto;

inline WeightedDag intro4() {
  return build_dag({{"a", 1}, {"b", -1}, {"c", 1}, {"d", 1}}, {{"b", "c"}});
}

inline WeightedDag flat4() { return build_dag({{"p", 3}, {"q", -2}, {"r", -2}, {"s", 4}}, {}); }

// a=0 b=1 c=2 d=3
inline std::vector<Step> intro4_sequence() {
  return {Step::mark(0), Step::mark(1), Step::mark(2), Step::unmark(0), Step::mark(3), Step::mark(0)};
}

// p=0 q=1 r=2 s=3
inline std::vector<Step> flat4_sequence() {
  return {Step::mark(0),   Step::mark(1), Step::unmark(1), Step::mark(2),
          Step::unmark(2), Step::mark(3), Step::mark(1),   Step::mark(2)};
}

inline Ordering order_of(const WeightedDag& dag, const std::vector<std::string>& labels) {
  Ordering o;
  for (const auto& l : labels) o.order.push_back(dag.id_of(l));
  return o;
}

inline std::vector<std::string> labels_of(const WeightedDag& dag, const Ordering& o) {
  std::vector<std::string> out;
  for (VertexId v : o.order) out.push_back(dag.label(v));
  return out;
}

// Every permutation of 0..n-1 whose prefixes respect edges and have sum >= 0.
inline std::vector<std::vector<VertexId>> brute_nn_orderings(const WeightedDag& dag) {
  std::vector<VertexId> perm(dag.size());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::vector<std::vector<VertexId>> out;
  do {
    std::vector<std::size_t> pos(dag.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    bool ok = true;
    for (const auto& [u, v] : dag.edges()) {
      if (pos[u] > pos[v]) ok = false;
    }
    Rational sum;
    for (std::size_t i = 0; ok && i < perm.size(); ++i) {
      sum += dag.weight(perm[i]);
      if (sum < Rational(0)) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool brute_has_nn_ordering(const WeightedDag& dag) { return !brute_nn_orderings(dag).empty(); }

// Closure of {empty set} under single legal non-negative mark/unmark moves,
// computed by repeated sweeps over all subsets.
inline std::set<std::uint64_t> brute_reachable_sets(const WeightedDag& dag) {
  const std::size_t n = dag.size();
  auto good = [&](std::uint64_t bits) {
    const VertexSet s(bits);
    for (VertexId v : s) {
      for (const auto& [u, w] : dag.edges()) {
        if (w == v && !s.contains(u)) return false;
      }
    }
    return dag.weight_of(s) >= Rational(0);
  };
  std::set<std::uint64_t> reached{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t s : std::vector<std::uint64_t>(reached.begin(), reached.end())) {
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t t = s ^ (std::uint64_t{1} << v);
        if (!reached.count(t) && good(t)) {
          reached.insert(t);
          grew = true;
        }
      }
    }
  }
  return reached;
}

// Tries every pair of class permutations for an empty lower triangle.
inline bool brute_upm_extension(const BipartiteGraph& bg) {
  const std::size_t n = bg.size_a();
  std::vector<std::size_t> pa(n), pb(n);
  std::iota(pa.begin(), pa.end(), 0);
  do {
    std::iota(pb.begin(), pb.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i < n; ++i) {
        for (std::size_t j = 0; ok && j < i; ++j) {
          if (bg.has_edge(pa[i], pb[j])) ok = false;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return false;
}

inline std::uint64_t brute_count_matchings(const BipartiteGraph& bg) {
  const std::size_t n = bg.size_a();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) ok = bg.has_edge(i, p[i]);
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool brute_bis(const BipartiteGraph& bg, std::size_t k) {
  const std::uint64_t na = bg.size_a(), nb = bg.size_b();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << na); ++a) {
    if (static_cast<std::size_t>(std::popcount(a)) != k) continue;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << nb); ++b) {
      if (static_cast<std::size_t>(std::popcount(b)) != k) continue;
      bool ok = true;
      for (std::size_t i = 0; ok && i < na; ++i) {
        if ((a >> i) & 1U) ok = !bg.neighbors(i).intersects(VertexSet(b));
      }
      if (ok) return true;
    }
  }
  return false;
}

// Balanced graph on classes a1..an / b1..bn with edge (i,j) iff bit i*n+j of mask.
inline BipartiteGraph bipartite_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::string> a, b;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back("a" + std::to_string(i));
    b.push_back("b" + std::to_string(i));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> (i * n + j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph::from_indices(a, b, edges);
}

}  // namespace testing
