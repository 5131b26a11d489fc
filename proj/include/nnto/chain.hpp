#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "nnto/bipartite.hpp"

namespace nnto {

struct ChainOptions {
  std::size_t max_n = kMaxVertices;  ///< vertex cap for the final DAG search
  /// Test hook: zero the helper vertex's weight in the last hop so the
  /// harness has a broken translator to catch on every YES instance.
  bool corrupt_last_hop = false;
};

/// Verdicts and witness checks for one instance pushed through every hop:
/// balanced independent set -> induced extension on the gadget -> unique
/// perfect matching extension of the padded gadget -> non-negative ordering.
struct ChainReport {
  std::size_t k = 0;
  bool independent_set = false;     // Problem 4 on bg, k
  bool induced_extension = false;   // Problem 3 on the gadget, k^2+k
  bool upm_extension = false;       // Problem 2 on the padded gadget
  bool nn_ordering = false;         // Problem 1 on the reduced DAG
  bool witnesses_ok = true;
  std::string witness_note;
  std::size_t gadget_class_size = 0;
  std::size_t padded_class_size = 0;
  std::size_t dag_vertices = 0;

  bool agree() const noexcept {
    return witnesses_ok && independent_set == induced_extension && induced_extension == upm_extension &&
           upm_extension == nn_ordering;
  }
  nlohmann::json to_json() const;
};

/// Requires a balanced bg. Throws Unbalanced, BadK, CapExceeded.
ChainReport verify_chain(const BipartiteGraph& bg, std::size_t k, const ChainOptions& options = {});

}  // namespace nnto
