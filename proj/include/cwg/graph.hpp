#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cwg {

/// Natural ordering of labels: digit runs compare numerically, so "x2" < "x10".
/// Labels that compare equal numerically ("x01" vs "x1") fall back to plain
/// byte order, which keeps the order total.
bool label_less(std::string_view a, std::string_view b);

struct LabelLess {
  bool operator()(std::string_view a, std::string_view b) const { return label_less(a, b); }
};

using VertexId = std::size_t;
using VertexSet = std::vector<std::string>;  // always in canonical label order
using LabelPair = std::pair<std::string, std::string>;

/// Edge between two vertex indices, normalized so that u < v.
struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple undirected graph.
///
/// Vertex indices follow the canonical label order, so index order and label
/// order agree and every iteration is deterministic. Edges are kept sorted
/// lexicographically by (u, v).
class Graph {
 public:
  /// Throws Error(loop_edge) on a self-loop and Error(empty_graph) when no
  /// vertex is declared. Duplicate edges are collapsed.
  static Graph from_edge_list(std::span<const LabelPair> edges,
                              std::span<const std::string> isolated = {});

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(std::string_view label) const;
  /// Throws Error(unknown_vertex).
  VertexId index_of(std::string_view label) const;

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool adjacent(VertexId a, VertexId b) const;
  const std::vector<Edge>& edges() const { return edges_; }
  /// Index of the edge {a, b} in edges(), if present.
  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

  std::vector<LabelPair> edge_labels() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

struct BipartitePartition {
  VertexSet left;
  VertexSet right;

  friend bool operator==(const BipartitePartition&, const BipartitePartition&) = default;
};

/// A pendant triangle: `apex` has degree > 2, `a` and `b` have degree 2.
struct PendantTriangle {
  std::string apex;
  std::string a;
  std::string b;

  friend bool operator==(const PendantTriangle&, const PendantTriangle&) = default;
};

VertexSet neighborhood(const Graph& g, std::string_view v, bool closed = false);

/// Subgraph induced on `keep`. Throws Error(unknown_vertex) for labels not in g
/// and Error(empty_graph) when `keep` is empty.
Graph induced_subgraph(const Graph& g, std::span<const std::string> keep);
/// g \ W, the subgraph induced on the complement of `remove`.
Graph delete_vertices(const Graph& g, std::span<const std::string> remove);

/// Components sorted internally and by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Two-coloring by BFS layers with the side of the smallest label on the left.
/// Returns nullopt when g has an odd cycle; throws Error(disconnected).
std::optional<BipartitePartition> bipartition(const Graph& g);

VertexSet leaves(const Graph& g);
std::vector<PendantTriangle> pendant_triangles(const Graph& g);

}  // namespace cwg
