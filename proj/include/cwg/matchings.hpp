#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cwg/graph.hpp"

namespace cwg {

inline constexpr std::size_t kMatchingVertexCap = 64;
inline constexpr std::size_t kInducedMatchingEdgeCap = 96;

struct MatchingResult {
  std::size_t size = 0;
  /// Lexicographically smallest optimum in canonical edge order.
  std::vector<LabelPair> witness;
};

struct MatchingStats {
  std::size_t m = 0;
  std::size_t im = 0;
  std::vector<LabelPair> witness_m;
  std::vector<LabelPair> witness_im;
};

/// Both predicates throw Error(not_an_edge) when a pair is not an edge of g.
bool is_matching(const Graph& g, std::span<const LabelPair> edges);
bool is_induced_matching(const Graph& g, std::span<const LabelPair> edges);

/// Maximum matching size m(G). Throws Error(size_guard) above `vertex_cap` vertices.
MatchingResult matching_number(const Graph& g, std::size_t vertex_cap = kMatchingVertexCap);

/// Maximum induced matching size im(G) by branch and bound over the edges.
/// Throws Error(size_guard) above `edge_cap` edges.
MatchingResult induced_matching_number(const Graph& g, std::size_t edge_cap = kInducedMatchingEdgeCap);

MatchingStats matching_stats(const Graph& g, std::size_t vertex_cap = kMatchingVertexCap,
                             std::size_t edge_cap = kInducedMatchingEdgeCap);

namespace detail {
/// Cardinality of a maximum matching of the graph on `n` vertices restricted to
/// `edges` (Edmonds' blossom algorithm).
std::size_t maximum_matching_size(std::size_t n, std::span<const Edge> edges);
}  // namespace detail

}  // namespace cwg
