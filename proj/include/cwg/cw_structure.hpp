#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwg/graph.hpp"
#include "cwg/matchings.hpp"

namespace cwg {

enum class GraphClass { star, star_triangle, cameron_walker, other };

/// "Star", "StarTriangle", "CameronWalker" or "Other".
std::string_view to_string(GraphClass tag);

/// Structural certificate of a Cameron–Walker graph.
///
/// The support is a connected bipartite graph on left = x_1..x_n and
/// right = y_1..y_m. Every x_i carries f_i >= 1 leaves; every y_j carries
/// t_j >= 0 pendant triangles, each stored as the pair of its degree-2 vertices.
/// Labels are whatever the source graph used; canonical_form() renames them to
/// the generated scheme x{i}, y{j}, z{i}_{l}, w{j}_{k}+ and w{j}_{k}-.
struct CwDecomposition {
  std::vector<std::string> left;
  std::vector<std::string> right;
  /// (i, j) joins left[i] and right[j]; sorted, no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> support_edges;
  std::vector<std::vector<std::string>> leaves;
  std::vector<std::vector<LabelPair>> triangles;

  std::size_t n() const { return left.size(); }
  std::size_t m() const { return right.size(); }
  std::size_t f() const;
  std::size_t t() const;
  /// Number of right vertices with at least one pendant triangle.
  std::size_t m_prime() const;
  std::vector<std::size_t> leaf_counts() const;
  std::vector<std::size_t> triangle_counts() const;
  std::size_t num_vertices() const { return n() + m() + f() + 2 * t(); }

  Graph support() const;
  bool has_complete_support() const { return support_edges.size() == n() * m(); }

  friend bool operator==(const CwDecomposition&, const CwDecomposition&) = default;
};

/// Throws Error(invalid_decomposition) naming the violated invariant.
void validate(const CwDecomposition& dec);

/// Decomposition with generated labels from the support and the attachment
/// counts. `support_edges` uses 0-based (left, right) indices.
CwDecomposition make_cw_decomposition(std::size_t n, std::size_t m,
                                      std::vector<std::pair<std::size_t, std::size_t>> support_edges,
                                      const std::vector<std::size_t>& leaf_counts,
                                      const std::vector<std::size_t>& triangle_counts);

/// Reorders the right side so triangle-bearing vertices come first (stable)
/// and renames everything to the generated label scheme.
CwDecomposition canonical_form(const CwDecomposition& dec);

struct Classification {
  GraphClass tag = GraphClass::other;
  std::optional<CwDecomposition> decomposition;  // iff tag == cameron_walker
  std::string reason;                            // iff tag == other: "disconnected" or "im != m"
  std::string detail;                            // which structural clause failed
};

struct ClassifyOptions {
  /// Recompute im and m and assert they agree with the structural verdict.
  bool cross_check = true;
  std::size_t matching_vertex_cap = kMatchingVertexCap;
  std::size_t induced_matching_edge_cap = kInducedMatchingEdgeCap;
};

/// Star, star triangle, Cameron–Walker or other. With cross_check set, throws
/// Error(size_guard) when the graph exceeds the matching caps.
Classification classify(const Graph& g, const ClassifyOptions& options = {});

/// Strips leaves and pendant triangles and reads off the bipartite support.
/// Every degree-1 vertex is read as a leaf, so a triangle-free right vertex of
/// support degree 1 never appears in the result. Throws
/// Error(not_cameron_walker) with the failed clause.
CwDecomposition decompose(const Graph& g);

/// Graph described by `dec`, using the decomposition's own labels.
Graph build_cw(const CwDecomposition& dec);

struct CliqueAttachmentSpec {
  Graph base;
  /// One size k_i >= 2 per base vertex, in canonical vertex order.
  std::vector<std::size_t> sizes;
};

/// Attaches K_{k_i} at every base vertex by adding k_i - 1 fresh vertices
/// named "<label>_k<j>". Throws Error(invalid_size).
Graph attach_cliques(const CliqueAttachmentSpec& spec);

struct CliquePartition {
  Graph base;
  std::vector<VertexSet> parts;  // possibly empty cliques, disjoint, covering V
};

/// Adds one fresh vertex w<i> per part, joined to every vertex of that part.
/// Throws Error(not_a_partition) or Error(not_a_clique).
Graph whisker_partition(const CliquePartition& partition);

struct RandomCwParams {
  std::size_t n = 1;
  std::size_t m = 1;
  std::size_t max_f = 1;
  std::size_t max_t = 0;
  double edge_density = 0.0;
  std::uint64_t seed = 0;
};

/// Seeded random decomposition: random spanning tree of K_{n,m} plus each
/// remaining support edge with probability edge_density; f_i uniform in
/// [1, max_f], t_j uniform in [0, max_t]. A right vertex of support degree 1
/// draws t_j from [1, max_t] (or, when max_t = 0, receives an extra support
/// edge) so that the result is never a star and decompose() reproduces it.
/// Throws Error(invalid_params).
CwDecomposition random_cw(const RandomCwParams& params);

}  // namespace cwg
