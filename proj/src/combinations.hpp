#pragma once

#include <cstddef>
#include <vector>

#include "nnto/vertex_set.hpp"

namespace nnto::detail {

/// All k-subsets of {0, ..., n-1} in lexicographic order of their sorted members.
inline std::vector<VertexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<VertexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s;
    for (std::size_t i : pick) s.insert(static_cast<VertexId>(i));
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace nnto::detail
