// nnto: command-line front end for non-negative topological orderings.
//
// Exit codes:
//   0  yes / valid / done
//   1  no / invalid
//   2  input error (unreadable file, schema or validation failure)
//   3  size cap exceeded
//   4  reduction chain disagreement
//   5  a proof-backed guarantee failed (internal invariant)

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nnto/chain.hpp"
#include "nnto/error.hpp"
#include "nnto/generate.hpp"
#include "nnto/io.hpp"
#include "nnto/normalize.hpp"
#include "nnto/oracles.hpp"
#include "nnto/reductions.hpp"
#include "nnto/solver.hpp"

namespace {

using nnto::io::json;

enum Exit : int { kYes = 0, kNo = 1, kInputError = 2, kCapExceeded = 3, kDisagreement = 4, kInternal = 5 };

struct Options {
  std::string input;
  std::string output;
  std::string sequence;
  std::string ordering;
  std::size_t max_n = 24;
  std::size_t limit = 0;
  std::size_t k = 1;
  std::optional<std::size_t> target;
  bool require_source_sink = false;
  bool partial = false;
  bool corrupt = false;
  std::string hop;
  int problem = 1;
  // gen
  std::string kind = "dag";
  std::uint64_t seed = 0;
  std::size_t n = 6;
  std::size_t n_a = 3;
  std::size_t n_b = 3;
  std::string edge_prob = "1/3";
  std::int64_t weight_min = -2;
  std::int64_t weight_max = 2;
};

void emit(const Options& opt, const json& j) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << nnto::io::dump(j);
  } else {
    nnto::io::write_json_file(opt.output, j);
  }
}

nnto::SolverConfig solver_config(const Options& opt) {
  nnto::SolverConfig config;
  config.max_n = opt.max_n;
  return config;
}

void print_stats(const nnto::SearchStats& stats) {
  std::cerr << "states_explored=" << stats.states_explored << " memo_hits=" << stats.memo_hits
            << " elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(stats.elapsed).count() << "\n";
}

int cmd_solve(const Options& opt) {
  const auto dag = nnto::io::parse_dag(nnto::io::read_json_file(opt.input));
  if (opt.require_source_sink && !nnto::is_source_sink_only(dag)) {
    std::cerr << "error: some vertex is neither a source nor a sink\n";
    return kInputError;
  }
  const auto result = nnto::exists_nn_mark_sequence(dag, solver_config(opt));
  print_stats(result.stats);
  if (!result.witness) {
    std::cerr << "no non-negative topological ordering\n";
    return kNo;
  }
  emit(opt, nnto::io::envelope(nnto::io::ordering_to_json(*result.witness, dag), "ordering"));
  return kYes;
}

int cmd_to_mark_seq(const Options& opt) {
  const auto dag = nnto::io::parse_dag(nnto::io::read_json_file(opt.input));
  auto seq = nnto::io::parse_sequence(nnto::io::read_json_file(opt.sequence), dag);
  const auto result = nnto::to_mark_sequence(dag, seq.steps);
  if (!nnto::validate_nn_topological_ordering(dag, result.order).ok()) {
    throw nnto::Error(nnto::ErrorKind::InternalInvariantViolation, "output failed re-validation");
  }
  std::cerr << "shortenings=" << result.shortenings << "\n";
  const nnto::MarkUnmarkSequence out{nnto::to_steps(result.order), nnto::Terminal::Full};
  emit(opt, nnto::io::envelope(nnto::io::sequence_to_json(out, dag), "sequence"));
  return kYes;
}

int cmd_normalize_partial(const Options& opt) {
  const auto dag = nnto::io::parse_dag(nnto::io::read_json_file(opt.input));
  auto seq = nnto::io::parse_sequence(nnto::io::read_json_file(opt.sequence), dag);
  const auto result = nnto::normalize_partial(dag, seq.steps, solver_config(opt));
  std::cerr << "shortenings=" << result.shortenings << " fallback=" << (result.used_fallback ? "yes" : "no") << "\n";
  const nnto::MarkUnmarkSequence out{result.steps, nnto::Terminal::Partial};
  emit(opt, nnto::io::envelope(nnto::io::sequence_to_json(out, dag), "sequence"));
  return kYes;
}

int cmd_reduce(const Options& opt) {
  const json in = nnto::io::read_json_file(opt.input);
  if (opt.hop == "upm-to-dag") {
    emit(opt, nnto::io::envelope(nnto::io::dag_to_json(nnto::upm_to_nn_dag(nnto::io::parse_bipartite(in))), "dag"));
  } else if (opt.hop == "pad-isolated") {
    const auto bg = nnto::io::parse_bipartite(in);
    if (!opt.target) throw nnto::Error(nnto::ErrorKind::BadTarget, "pad-isolated needs --target");
    emit(opt, nnto::io::envelope(nnto::io::bipartite_to_json(nnto::add_isolated(bg, *opt.target)), "bipartite"));
  } else if (opt.hop == "bis-gadget") {
    const auto bg = nnto::io::parse_bipartite(in);
    emit(opt, nnto::io::envelope(nnto::io::bipartite_to_json(nnto::bis_gadget(bg, opt.k)), "bipartite"));
  } else if (opt.hop == "bip-to-matrix") {
    emit(opt, nnto::io::envelope(nnto::io::matrix_to_json(nnto::bipartite_to_matrix(nnto::io::parse_bipartite(in))),
                                 "matrix"));
  } else {
    emit(opt, nnto::io::envelope(nnto::io::bipartite_to_json(nnto::matrix_to_bipartite(nnto::io::parse_matrix(in))),
                                 "bipartite"));
  }
  return kYes;
}

json witness_json(const nnto::BipartiteGraph& bg, const nnto::TriangularWitness& w) {
  json a = json::array();
  json b = json::array();
  for (std::size_t i : w.order_a) a.push_back(bg.a_labels()[i]);
  for (std::size_t i : w.order_b) b.push_back(bg.b_labels()[i]);
  return {{"order_a", a}, {"order_b", b}};
}

json labels_of(const std::vector<std::string>& labels, nnto::VertexSet set) {
  json out = json::array();
  for (nnto::VertexId v : set) out.push_back(labels[v]);
  return out;
}

int cmd_oracle(const Options& opt) {
  const json in = nnto::io::read_json_file(opt.input);
  switch (opt.problem) {
    case 1: {
      const auto dag = nnto::io::parse_dag(in);
      if (opt.limit > 0) {
        json list = json::array();
        for (const auto& o : nnto::enumerate_nn_orderings(dag, opt.limit)) {
          list.push_back(nnto::io::ordering_to_json(o, dag)["order"]);
        }
        const bool any = !list.empty();
        emit(opt, {{"orderings", std::move(list)}});
        return any ? kYes : kNo;
      }
      const auto result = nnto::exists_nn_mark_sequence(dag, solver_config(opt));
      if (!result.witness) return kNo;
      emit(opt, nnto::io::envelope(nnto::io::ordering_to_json(*result.witness, dag), "ordering"));
      return kYes;
    }
    case 2: {
      const auto bg = nnto::io::parse_bipartite(in);
      const auto w = nnto::decide_upm_extension(bg);
      if (!w) return kNo;
      emit(opt, witness_json(bg, *w));
      return kYes;
    }
    case 3: {
      const auto bg = nnto::io::parse_bipartite(in);
      const auto r = nnto::decide_induced_extension(bg, opt.k);
      if (!r) return kNo;
      emit(opt, {{"a", labels_of(bg.a_labels(), r->a)}, {"b", labels_of(bg.b_labels(), r->b)},
                 {"witness", witness_json(bg, r->witness)}});
      return kYes;
    }
    case 4: {
      const auto bg = nnto::io::parse_bipartite(in);
      const auto r = nnto::decide_balanced_independent_set(bg, opt.k);
      if (!r) return kNo;
      emit(opt, {{"a", labels_of(bg.a_labels(), r->a)}, {"b", labels_of(bg.b_labels(), r->b)}});
      return kYes;
    }
    default: {
      const auto m = nnto::io::parse_matrix(in);
      const auto r = nnto::decide_triangularizable(m);
      if (!r) return kNo;
      emit(opt, {{"row_order", r->rows}, {"col_order", r->cols}});
      return kYes;
    }
  }
}

int cmd_check(const Options& opt) {
  const auto dag = nnto::io::parse_dag(nnto::io::read_json_file(opt.input));
  if (!opt.ordering.empty()) {
    const auto ordering = nnto::io::parse_ordering(nnto::io::read_json_file(opt.ordering), dag);
    const auto verdict = nnto::validate_nn_topological_ordering(dag, ordering);
    json weights = json::array();
    for (const auto& w : nnto::prefix_weights(dag, ordering)) weights.push_back(w.to_string());
    emit(opt, {{"verdict", nnto::to_string(verdict)}, {"prefix_weights", weights}});
    return verdict.ok() ? kYes : kNo;
  }
  if (opt.sequence.empty()) throw nnto::Error(nnto::ErrorKind::ParseError, "check needs --ordering or --sequence");
  auto seq = nnto::io::parse_sequence(nnto::io::read_json_file(opt.sequence), dag);
  if (opt.partial) seq.terminal = nnto::Terminal::Partial;
  const auto outcome = nnto::replay(dag, seq.steps, true);
  json report;
  if (!outcome.ok()) {
    const auto& f = *outcome.failure;
    report["verdict"] = std::string(f.kind == nnto::ReplayFailure::Kind::IllegalStep ? "IllegalStep" : "NegativeSet") +
                        " at index " + std::to_string(f.index);
    report["reason"] = f.reason;
    emit(opt, report);
    return kNo;
  }
  const nnto::VertexSet last = outcome.sets.empty() ? nnto::VertexSet{} : outcome.sets.back();
  if (seq.terminal == nnto::Terminal::Full && last != dag.all()) {
    emit(opt, {{"verdict", "NotFull"}});
    return kNo;
  }
  json weights = json::array();
  for (nnto::VertexSet m : outcome.sets) weights.push_back(dag.weight_of(m).to_string());
  report["verdict"] = "ok";
  report["set_weights"] = weights;
  report["normal_form"] = nnto::is_normal_form(seq.steps);
  emit(opt, report);
  return kYes;
}

int cmd_gen(const Options& opt) {
  nnto::GenParams params;
  params.seed = opt.seed;
  params.n = opt.n;
  params.n_a = opt.n_a;
  params.n_b = opt.n_b;
  params.edge_prob = nnto::Rational::parse(opt.edge_prob);
  if (params.edge_prob.sign() < 0 || params.edge_prob > nnto::Rational(1)) {
    throw nnto::Error(nnto::ErrorKind::ParseError, "edge probability must lie in [0, 1]");
  }
  params.weight_min = opt.weight_min;
  params.weight_max = opt.weight_max;

  json meta = {{"seed", opt.seed}, {"generator", "mt19937_64"}};
  if (opt.kind == "dag") {
    meta["params"] = {{"n", opt.n}, {"edge_prob", params.edge_prob.to_string()},
                      {"weights", {opt.weight_min, opt.weight_max}}};
    emit(opt, nnto::io::envelope(nnto::io::dag_to_json(nnto::generate_dag(params)), "dag", meta));
  } else if (opt.kind == "bipartite") {
    meta["params"] = {{"na", opt.n_a}, {"nb", opt.n_b}, {"edge_prob", params.edge_prob.to_string()}};
    emit(opt, nnto::io::envelope(nnto::io::bipartite_to_json(nnto::generate_bipartite(params)), "bipartite", meta));
  } else {
    meta["params"] = {{"n", opt.n}, {"edge_prob", params.edge_prob.to_string()}};
    emit(opt, nnto::io::envelope(nnto::io::matrix_to_json(nnto::generate_matrix(params)), "matrix", meta));
  }
  return kYes;
}

int cmd_verify_chain(const Options& opt) {
  const auto bg = nnto::io::parse_bipartite(nnto::io::read_json_file(opt.input));
  nnto::ChainOptions chain;
  chain.max_n = opt.max_n;
  chain.corrupt_last_hop = opt.corrupt;
  const auto report = nnto::verify_chain(bg, opt.k, chain);
  emit(opt, report.to_json());
  if (!report.agree()) {
    std::cerr << "reduction chain disagreement\n";
    return kDisagreement;
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-negative topological orderings of weighted DAGs"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* sub, const char* input_help) {
    sub->add_option("--input", opt.input, input_help)->required()->check(CLI::ExistingFile);
    sub->add_option("--output", opt.output, "Output file (default: stdout)");
  };

  auto* solve = app.add_subcommand("solve", "Decide whether a DAG has a non-negative topological ordering");
  add_io(solve, "DAG JSON");
  solve->add_option("--max-n", opt.max_n, "Vertex cap for the exact search")->capture_default_str();
  solve->add_flag("--require-source-sink", opt.require_source_sink, "Reject DAGs with a vertex that is neither");

  auto* to_mark = app.add_subcommand("to-mark-seq", "Convert a non-negative mark-unmark sequence to a mark sequence");
  add_io(to_mark, "DAG JSON");
  to_mark->add_option("--sequence", opt.sequence, "Sequence JSON")->required()->check(CLI::ExistingFile);

  auto* normalize = app.add_subcommand("normalize-partial", "Rewrite a partial sequence so all marks come first");
  add_io(normalize, "DAG JSON");
  normalize->add_option("--sequence", opt.sequence, "Sequence JSON")->required()->check(CLI::ExistingFile);
  normalize->add_option("--max-n", opt.max_n, "Vertex cap for the fallback search")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Translate an instance along one reduction hop");
  add_io(reduce, "Bipartite or matrix JSON");
  reduce->add_option("--hop", opt.hop, "Reduction hop")
      ->required()
      ->check(CLI::IsMember({"upm-to-dag", "pad-isolated", "bis-gadget", "bip-to-matrix", "matrix-to-bip"}));
  reduce->add_option("--k", opt.k, "k for bis-gadget")->capture_default_str();
  reduce->add_option("--target", opt.target, "Class size for pad-isolated");

  auto* oracle = app.add_subcommand("oracle", "Run the exact decider for problem 1-5");
  add_io(oracle, "Instance JSON");
  oracle->add_option("--problem", opt.problem, "1 dag, 2 upm extension, 3 induced extension, 4 independent set, 5 matrix")
      ->required()
      ->check(CLI::Range(1, 5));
  oracle->add_option("--k", opt.k, "k for problems 3 and 4")->capture_default_str();
  oracle->add_option("--max-n", opt.max_n, "Vertex cap for problem 1")->capture_default_str();
  oracle->add_option("--limit", opt.limit, "Problem 1: list up to this many orderings instead of one witness");

  auto* check = app.add_subcommand("check", "Validate an ordering or a sequence against a DAG");
  add_io(check, "DAG JSON");
  check->add_option("--ordering", opt.ordering, "Ordering JSON")->check(CLI::ExistingFile);
  check->add_option("--sequence", opt.sequence, "Sequence JSON")->check(CLI::ExistingFile);
  check->add_flag("--partial", opt.partial, "Treat the sequence as partial");

  auto* gen = app.add_subcommand("gen", "Generate a reproducible random instance");
  gen->add_option("--kind", opt.kind, "dag, bipartite or matrix")
      ->check(CLI::IsMember({"dag", "bipartite", "matrix"}))
      ->capture_default_str();
  gen->add_option("--seed", opt.seed, "Seed")->capture_default_str();
  gen->add_option("--n", opt.n, "DAG vertices / matrix dimension")->capture_default_str();
  gen->add_option("--na", opt.n_a, "Size of class A")->capture_default_str();
  gen->add_option("--nb", opt.n_b, "Size of class B")->capture_default_str();
  gen->add_option("--edge-prob", opt.edge_prob, "Edge probability as p/q or decimal")->capture_default_str();
  gen->add_option("--weight-min", opt.weight_min, "Smallest vertex weight")->capture_default_str();
  gen->add_option("--weight-max", opt.weight_max, "Largest vertex weight")->capture_default_str();
  gen->add_option("--output", opt.output, "Output file (default: stdout)");

  auto* chain = app.add_subcommand("verify-chain", "Run every reduction hop on a bipartite instance and compare");
  add_io(chain, "Bipartite JSON");
  chain->add_option("--k", opt.k, "Independent set half-size")->capture_default_str();
  chain->add_option("--max-n", opt.max_n, "Vertex cap for the final DAG search")->default_val(64);
  chain->add_flag("--corrupt-last-hop", opt.corrupt, "Self-test: break the last translator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kInputError;
  }

  try {
    if (*solve) return cmd_solve(opt);
    if (*to_mark) return cmd_to_mark_seq(opt);
    if (*normalize) return cmd_normalize_partial(opt);
    if (*reduce) return cmd_reduce(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*check) return cmd_check(opt);
    if (*gen) return cmd_gen(opt);
    return cmd_verify_chain(opt);
  } catch (const nnto::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == nnto::ErrorKind::CapExceeded) return kCapExceeded;
    if (nnto::is_internal(e.kind())) return kInternal;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
