#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nnto/bipartite.hpp"
#include "nnto/graph.hpp"
#include "nnto/sequences.hpp"

namespace nnto::io {

using json = nlohmann::json;

// All parse_* functions throw Error(ParseError) for schema violations and the
// owning type's validation errors otherwise. An optional "kind" member must
// match; an optional "meta" member is ignored.

WeightedDag parse_dag(const json& j);
json dag_to_json(const WeightedDag& dag);

/// {"steps":[{"op":"mark","v":"a"}, ...], "terminal":"full"|"partial"}; the
/// terminal member defaults to "full".
MarkUnmarkSequence parse_sequence(const json& j, const WeightedDag& dag);
json sequence_to_json(const MarkUnmarkSequence& seq, const WeightedDag& dag);

/// {"order":["a","b",...]}
Ordering parse_ordering(const json& j, const WeightedDag& dag);
json ordering_to_json(const Ordering& ordering, const WeightedDag& dag);

/// {"a":[...],"b":[...],"edges":[["a1","b1"], ...]}
BipartiteGraph parse_bipartite(const json& j);
json bipartite_to_json(const BipartiteGraph& bg);

/// {"rows":[[0,1],[1,1]]}
BoolMatrix parse_matrix(const json& j);
json matrix_to_json(const BoolMatrix& m);

/// Adds {"kind": kind} and, when meta is non-null, {"meta": meta}.
json envelope(json payload, std::string_view kind, const json& meta = nullptr);

json read_json_file(const std::filesystem::path& path);
/// Two-space indented, trailing newline.
std::string dump(const json& j);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace nnto::io
