// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nnto/error.hpp"
#include "nnto/generate.hpp"
#include "nnto/normalize.hpp"
#include "nnto/oracles.hpp"
#include "nnto/reductions.hpp"
#include "nnto/solver.hpp"
#include "support.hpp"

using namespace testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every DAG whose edges go from lower to higher index, n <= max_n, weights in
// [-2, 2]. Up to relabelling this is every weighted DAG of that size.
void for_each_small_dag(std::size_t max_n, const std::function<void(const WeightedDag&)>& fn) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    std::size_t weight_combos = 1;
    for (std::size_t i = 0; i < n; ++i) weight_combos *= 5;
    for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << slots.size()); ++emask) {
      std::vector<EdgeSpec> edges;
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if ((emask >> e) & 1U) edges.emplace_back("v" + std::to_string(slots[e].first), "v" + std::to_string(slots[e].second));
      }
      for (std::size_t w = 0; w < weight_combos; ++w) {
        std::vector<VertexSpec> vertices;
        std::size_t rest = w;
        for (std::size_t i = 0; i < n; ++i) {
          vertices.push_back({"v" + std::to_string(i), static_cast<std::int64_t>(rest % 5) - 2});
          rest /= 5;
        }
        fn(build_dag(vertices, edges));
      }
    }
  }
}

WeightedDag random_dag(std::uint64_t seed, std::size_t n) {
  GenParams p;
  p.seed = seed;
  p.n = n;
  p.edge_prob = Rational(1, 3);
  return generate_dag(p);
}

BipartiteGraph random_bipartite(std::uint64_t seed, std::size_t n, Rational edge_prob) {
  GenParams p;
  p.seed = seed;
  p.n_a = n;
  p.n_b = n;
  p.edge_prob = edge_prob;
  return generate_bipartite(p);
}

// mu_reachable requires a non-negative target; a negative V(G) is simply not a state.
std::optional<std::vector<Step>> reach_all(const WeightedDag& g) {
  if (g.weight_of(g.all()) < Rational(0)) return std::nullopt;
  return mu_reachable(g, g.all()).witness;
}

VertexSet last_set(const std::vector<VertexSet>& sets) { return sets.empty() ? VertexSet{} : sets.back(); }

// Shared instance family for criteria 1, 2 and 4.
struct SmallDagFamily {
  std::vector<WeightedDag> exhaustive;  // n <= 4
  std::vector<WeightedDag> random;      // n in 5..7
};

SmallDagFamily make_family() {
  SmallDagFamily f;
  for_each_small_dag(4, [&](const WeightedDag& g) { f.exhaustive.push_back(g); });
  for (std::uint64_t seed = 0; seed < 1200; ++seed) f.random.push_back(random_dag(1000 + seed, 5 + seed % 3));
  return f;
}

Outcome criterion1(const SmallDagFamily& fam) {
  const auto start = Clock::now();
  std::size_t disagreements = 0, yes = 0;
  auto run = [&](const WeightedDag& g) {
    const bool mu = reach_all(g).has_value();
    const bool ex = exists_nn_mark_sequence(g).witness.has_value();
    if (mu != ex) ++disagreements;
    if (ex) ++yes;
  };
  for (const auto& g : fam.exhaustive) run(g);
  for (const auto& g : fam.random) run(g);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu exhaustive n<=4 + %zu random n<=7, %zu yes, %zu disagreements, %.1fs",
                fam.exhaustive.size(), fam.random.size(), yes, disagreements, secs);
  return {disagreements == 0 && fam.exhaustive.size() >= 5000 && fam.random.size() >= 1000 && secs <= 60, buf};
}

Outcome criterion2and4(const SmallDagFamily& fam, Outcome& certificate) {
  std::size_t processed = 0, failures = 0, nonpositive_reports = 0, walks_shortened = 0;
  auto process = [&](const WeightedDag& g, const std::vector<Step>& steps) {
    ++processed;
    try {
      const auto r = to_mark_sequence(g, steps);
      if (!validate_nn_topological_ordering(g, r.order).ok()) ++failures;
      if (r.shortenings > 0) ++walks_shortened;
      if (!check_claim1(g, r.shortened).empty()) ++nonpositive_reports;
    } catch (const Error&) {
      ++failures;
    }
  };
  auto run = [&](const WeightedDag& g, std::uint64_t seed) {
    if (const auto mu = reach_all(g)) process(g, *mu);
    // Random non-negative walks are longer and exercise the shortening loop.
    Rng rng(seed);
    const auto walk = random_nn_walk(g, rng, 40);
    if (last_set(replay_checked(g, walk, true)) == g.all()) process(g, walk);
  };
  std::uint64_t seed = 0;
  for (const auto& g : fam.exhaustive) {
    if (seed++ % 4 == 0) run(g, seed);
  }
  for (const auto& g : fam.random) run(g, seed++);

  // The flat4 fixture.
  const auto f = to_mark_sequence(flat4(), flat4_sequence());
  const bool flat_ok = f.shortenings >= 1 && validate_nn_topological_ordering(flat4(), f.order).ok() &&
                       set_weights(flat4(), flat4_sequence()) == std::vector<Rational>{3, 1, 3, 1, 3, 7, 5, 3};
  if (!check_claim1(flat4(), f.shortened).empty()) ++nonpositive_reports;

  // normalize_partial goes through the same loop.
  std::size_t partial_processed = 0;
  for (std::uint64_t s = 0; s < 1500; ++s) {
    const auto g = random_dag(5000 + s, 1 + s % 7);
    Rng rng(s);
    const auto walk = random_nn_walk(g, rng, 40);
    try {
      const auto r = normalize_partial(g, walk);
      ++partial_processed;
      if (!check_claim1(g, r.shortened).empty()) ++nonpositive_reports;
    } catch (const Error&) {
      ++nonpositive_reports;
    }
  }

  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu full sequences, %zu needed shortening, %zu invalid; flat4 shortenings=%zu",
                processed, walks_shortened, failures, f.shortenings);
  char buf4[256];
  std::snprintf(buf4, sizeof buf4, "%zu to_mark_sequence + %zu normalize_partial runs, %zu nonempty reports",
                processed + 1, partial_processed, nonpositive_reports);
  certificate = {nonpositive_reports == 0, buf4};
  return {failures == 0 && flat_ok, buf};
}

Outcome criterion3() {
  const auto g = intro4();
  const auto seq = intro4_sequence();
  const bool weights = set_weights(g, seq) == std::vector<Rational>{1, 0, 1, 0, 1, 2};
  const auto induced = induced_ordering(g, seq);
  const bool induced_ok = labels_of(g, induced) == std::vector<std::string>{"b", "c", "d", "a"} &&
                          validate_nn_topological_ordering(g, induced) ==
                              OrderingVerdict{OrderingVerdict::Kind::NegativePrefix, 0};
  const auto compressed = compress_first_markings(g, seq);
  const bool compressed_ok = validate_nn_topological_ordering(g, compressed).ok();
  return {weights && induced_ok && compressed_ok,
          "weights 1,0,1,0,1,2; induced b,c,d,a NegativePrefix@0; compressed a,b,c,d valid"};
}

Outcome criterion5() {
  std::size_t dags = 0, targets = 0, gaps = 0, bad = 0, fallbacks = 0;
  auto run = [&](const WeightedDag& g, std::uint64_t seed) {
    ++dags;
    const std::uint64_t limit = std::uint64_t{1} << g.size();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      const VertexSet t(bits);
      if (!is_inward_closed(g, t) || g.weight_of(t) < Rational(0)) continue;
      const auto mu = mu_reachable(g, t);
      if (!mu.witness) continue;
      ++targets;
      if (!find_normal_form_to_target(g, t).witness) ++bad;
      try {
        const auto r = normalize_partial(g, *mu.witness);
        if (r.used_fallback) ++fallbacks;
        const auto out = replay(g, r.steps, true);
        if (!out.ok() || !is_normal_form(r.steps) || last_set(out.sets) != t) ++bad;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::PropositionGap) ++gaps;
        ++bad;
      }
    }
    // A longer random walk ending somewhere in the reachable family.
    Rng rng(seed);
    const auto walk = random_nn_walk(g, rng, 30);
    const VertexSet end = last_set(replay_checked(g, walk, true));
    try {
      const auto r = normalize_partial(g, walk);
      if (r.used_fallback) ++fallbacks;
      const auto out = replay(g, r.steps, true);
      if (!out.ok() || !is_normal_form(r.steps) || last_set(out.sets) != end) ++bad;
      if (!find_normal_form_to_target(g, end).witness) ++bad;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PropositionGap) ++gaps;
      ++bad;
    }
    ++targets;
  };
  std::uint64_t seed = 0;
  for_each_small_dag(4, [&](const WeightedDag& g) { run(g, seed++); });
  for (std::uint64_t s = 0; s < 1500; ++s) run(random_dag(9000 + s, 4 + s % 3), seed++);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu dags, %zu targets, %zu failures, %zu PropositionGap, %zu used search fallback",
                dags, targets, bad, gaps, fallbacks);
  return {bad == 0 && gaps == 0, buf};
}

Outcome criterion6() {
  const auto start = Clock::now();
  std::size_t disagreements = 0, witness_failures = 0, yes = 0;
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    const auto bg = bipartite_from_mask(3, mask);
    const auto dag = upm_to_nn_dag(bg);
    const auto w = decide_upm_extension(bg);
    const auto o = exists_nn_mark_sequence(dag);
    if (w.has_value() != o.witness.has_value()) ++disagreements;
    if (w) {
      ++yes;
      if (!validate_nn_topological_ordering(dag, triangular_witness_to_ordering(bg, *w)).ok()) ++witness_failures;
    }
    if (o.witness) {
      try {
        if (!is_triangular_witness(bg, ordering_to_triangular_witness(bg, *o.witness))) ++witness_failures;
      } catch (const Error&) {
        ++witness_failures;
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[256];
  std::snprintf(buf, sizeof buf, "512 graphs, %zu yes, %zu disagreements, %zu witness failures, %.2fs", yes,
                disagreements, witness_failures, secs);
  return {disagreements == 0 && witness_failures == 0 && secs <= 60, buf};
}

Outcome criterion7() {
  std::size_t yes2 = 0, yes1 = 0;
  bool c4_no = false;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const auto bg = bipartite_from_mask(2, mask);
    const bool p2 = decide_upm_extension(bg).has_value();
    const bool p1 = exists_nn_mark_sequence(upm_to_nn_dag(bg)).witness.has_value();
    yes2 += p2;
    yes1 += p1;
    if (mask == 15) c4_no = !p2 && !p1;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "problem 2: %zu yes; problem 1 on reduced dags: %zu yes; C4 no on both", yes2, yes1);
  return {yes2 == 15 && yes1 == 15 && c4_no, buf};
}

Outcome criterion8() {
  std::size_t cases = 0, disagreements = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const auto bg = bipartite_from_mask(n, mask);
      for (std::size_t k = 0; k <= n; ++k) {
        ++cases;
        const bool p3 = decide_induced_extension(bg, k).has_value();
        const bool p2 = decide_upm_extension(add_isolated(bg, n + (n - k))).has_value();
        if (p3 != p2) ++disagreements;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu (graph, k) cases with n<=3, %zu disagreements", cases, disagreements);
  return {disagreements == 0, buf};
}

Outcome criterion9() {
  const auto start = Clock::now();
  std::size_t cases = 0, disagreements = 0, size_errors = 0, round_trip_failures = 0, extraction_failed = 0, yes = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    // Sparse graphs give YES instances, dense ones NO.
    const Rational prob(1 + seed % 5, 6);
    const auto bg = random_bipartite(20000 + seed, 3, prob);
    for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
      ++cases;
      const auto gadget = bis_gadget(bg, k);
      if (gadget.size_a() + gadget.size_b() != (k + 1) * (bg.size_a() + bg.size_b())) ++size_errors;
      const auto p4 = decide_balanced_independent_set(bg, k);
      const auto p3 = decide_induced_extension(gadget, k * k + k);
      if (p4.has_value() != p3.has_value()) ++disagreements;
      if (p4) {
        ++yes;
        try {
          const auto lifted = bis_to_gadget_witness(bg, k, *p4);
          if (!is_balanced_independent_set(bg, extract_bis_from_subgraph(bg, k, lifted), k)) ++round_trip_failures;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ExtractionFailed) ++extraction_failed;
          ++round_trip_failures;
        }
      }
      if (p3) {
        try {
          const auto back = extract_bis_from_subgraph(bg, k, {p3->a, p3->b, p3->witness});
          if (!is_balanced_independent_set(bg, back, k)) ++round_trip_failures;
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ExtractionFailed) ++extraction_failed;
          ++round_trip_failures;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu random 3x3 instances (k in {1,2}), %zu yes, %zu disagreements, %zu size errors, "
                "%zu round-trip failures, %zu ExtractionFailed, %.1fs",
                cases, yes, disagreements, size_errors, round_trip_failures, extraction_failed, secs);
  return {cases >= 200 && disagreements == 0 && size_errors == 0 && round_trip_failures == 0 &&
              extraction_failed == 0 && secs <= 600,
          buf};
}

Outcome criterion10() {
  std::size_t graphs = 0, mismatches = 0, bad_certs = 0;
  auto run = [&](const BipartiteGraph& bg) {
    ++graphs;
    const auto cert = unique_pm_ordering(bg);
    if (cert.has_value() != (count_perfect_matchings(bg) == 1)) ++mismatches;
    if (cert) {
      bool ok = is_triangular_witness(bg, cert->witness) && cert->matching.size() == bg.size_a();
      for (const auto& [a, b] : cert->matching) ok = ok && bg.has_edge(a, b);
      if (!ok) ++bad_certs;
    }
  };
  for (std::uint64_t mask = 0; mask < 512; ++mask) run(bipartite_from_mask(3, mask));
  for (std::uint64_t seed = 0; seed < 200; ++seed) run(random_bipartite(30000 + seed, 4, Rational(1 + seed % 3, 4)));
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu graphs, %zu mismatches, %zu bad certificates", graphs, mismatches, bad_certs);
  return {mismatches == 0 && bad_certs == 0 && graphs == 712, buf};
}

Outcome criterion11() {
  std::size_t graphs = 0, disagreements = 0, round_trip_failures = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const auto bg = bipartite_from_mask(n, mask);
      ++graphs;
      if (decide_triangularizable(bipartite_to_matrix(bg)).has_value() != decide_upm_extension(bg).has_value()) {
        ++disagreements;
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams p;
    p.seed = 40000 + seed;
    p.n = seed % 7;
    p.n_a = p.n_b = seed % 7;
    p.edge_prob = Rational(1, 2);
    const auto m = generate_matrix(p);
    if (bipartite_to_matrix(matrix_to_bipartite(m)) != m) ++round_trip_failures;
    const auto bg = generate_bipartite(p);
    const auto back = matrix_to_bipartite(bipartite_to_matrix(bg));
    if (back.edges() != bg.edges()) ++round_trip_failures;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu graphs n<=3, %zu disagreements; 100 fuzzed round trips, %zu failures", graphs,
                disagreements, round_trip_failures);
  return {disagreements == 0 && round_trip_failures == 0, buf};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %-34s %s  %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  };

  const auto family = make_family();
  report(1, "[reachability matches solver]", [&] { return criterion1(family); });
  Outcome certificate;
  report(2, "[mark-unmark to mark sequence]", [&] { return criterion2and4(family, certificate); });
  report(3, "[four-vertex example]", criterion3);
  report(4, "[no nonpositive unmarked sets]", [&] { return certificate; });
  report(5, "[partial normal form]", criterion5);
  report(6, "[hop 2->1, all 3x3 graphs]", criterion6);
  report(7, "[2x2 census]", criterion7);
  report(8, "[hop 3->2]", criterion8);
  report(9, "[hop 4->3 gadget]", criterion9);
  report(10, "[unique matching certificate]", criterion10);
  report(11, "[matrix equivalence]", criterion11);
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
