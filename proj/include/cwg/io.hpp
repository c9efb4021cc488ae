#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cwg/complexes.hpp"
#include "cwg/cw_structure.hpp"
#include "cwg/graph.hpp"
#include "cwg/invariants.hpp"

namespace cwg::io {

using Json = nlohmann::ordered_json;

/// One edge "u v" per line; "vertex u" declares an isolated vertex; '#'
/// starts a comment. Throws Error(parse) naming the offending line, plus the
/// Graph construction errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// {"vertices": [...], "edges": [[u, v], ...]}; "vertices" may be omitted.
Graph parse_graph_json(std::string_view text);
Json to_json(const Graph& g);

/// {"left", "right", "support_edges", "leaves": {x: f}, "triangles": {y: t}}
/// followed by the attached labels under "leaf_vertices" and
/// "triangle_vertices". Without those two keys, labels are generated.
Json to_json(const CwDecomposition& dec);
CwDecomposition decomposition_from_json(const Json& j);

Json to_json(const Classification& c);
Json to_json(const SimplicialComplex& c);
/// {"facets": [...], "provenance": [{"family": "F", "I": [...], "sign": "+-"}]};
/// the G-families carry "J" instead of "I".
Json to_json(const ShellingOrder& order);
/// Stable field order; a missing field is null with a "<field>_reason" sibling.
Json to_json(const InvariantReport& report);

}  // namespace cwg::io
