#include "cwg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

#include "cwg/error.hpp"

namespace cwg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs numerically without overflow: strip leading zeros,
// then longer is larger, then lexicographic.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      int c = compare_digit_runs(a.substr(i, ie - i), b.substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

Graph Graph::from_edge_list(std::span<const LabelPair> edges, std::span<const std::string> isolated) {
  std::set<std::string, LabelLess> names;
  for (const auto& [a, b] : edges) {
    if (a.empty() || b.empty()) throw Error(Errc::parse, "empty vertex label");
    if (a == b) throw Error(Errc::loop_edge, "loop edge at vertex '" + a + "'");
    names.insert(a);
    names.insert(b);
  }
  for (const auto& v : isolated) {
    if (v.empty()) throw Error(Errc::parse, "empty vertex label");
    names.insert(v);
  }
  if (names.empty()) throw Error(Errc::empty_graph, "graph has no vertices");

  Graph g;
  g.labels_.assign(names.begin(), names.end());
  g.adjacency_.resize(g.labels_.size());
  std::set<Edge> edge_set;
  for (const auto& [a, b] : edges) {
    VertexId u = g.index_of(a);
    VertexId v = g.index_of(b);
    if (u > v) std::swap(u, v);
    edge_set.insert(Edge{u, v});
  }
  g.edges_.assign(edge_set.begin(), edge_set.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& l, std::string_view x) { return label_less(l, x); });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(Errc::unknown_vertex, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<LabelPair> Graph::edge_labels() const {
  std::vector<LabelPair> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(labels_[e.u], labels_[e.v]);
  return out;
}

VertexSet neighborhood(const Graph& g, std::string_view v, bool closed) {
  VertexId id = g.index_of(v);
  std::vector<VertexId> ids = g.neighbors(id);
  if (closed) ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
  VertexSet out;
  out.reserve(ids.size());
  for (VertexId u : ids) out.push_back(g.label(u));
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> keep) {
  std::vector<bool> kept(g.num_vertices(), false);
  for (const auto& v : keep) kept[g.index_of(v)] = true;
  std::vector<LabelPair> edges;
  for (const Edge& e : g.edges())
    if (kept[e.u] && kept[e.v]) edges.emplace_back(g.label(e.u), g.label(e.v));
  std::vector<std::string> isolated;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (kept[v]) isolated.push_back(g.label(v));
  return Graph::from_edge_list(edges, isolated);
}

Graph delete_vertices(const Graph& g, std::span<const std::string> remove) {
  std::vector<bool> removed(g.num_vertices(), false);
  for (const auto& v : remove) removed[g.index_of(v)] = true;
  std::vector<std::string> keep;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!removed[v]) keep.push_back(g.label(v));
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.num_vertices(), false);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (VertexId u : g.neighbors(comp[head]))
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    VertexSet labels;
    for (VertexId v : comp) labels.push_back(g.label(v));
    out.push_back(std::move(labels));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::optional<BipartitePartition> bipartition(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::disconnected, "bipartition requires a connected graph");
  std::vector<int> side(g.num_vertices(), -1);
  std::queue<VertexId> queue;
  side[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId u : g.neighbors(v)) {
      if (side[u] < 0) {
        side[u] = 1 - side[v];
        queue.push(u);
      } else if (side[u] == side[v]) {
        return std::nullopt;
      }
    }
  }
  BipartitePartition p;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    (side[v] == 0 ? p.left : p.right).push_back(g.label(v));
  return p;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 1) out.push_back(g.label(v));
  return out;
}

std::vector<PendantTriangle> pendant_triangles(const Graph& g) {
  std::vector<PendantTriangle> out;
  for (VertexId c = 0; c < g.num_vertices(); ++c) {
    if (g.degree(c) <= 2) continue;
    const auto& nbrs = g.neighbors(c);
    for (VertexId a : nbrs) {
      if (g.degree(a) != 2) continue;
      for (VertexId b : g.neighbors(a)) {
        if (b <= a || b == c || g.degree(b) != 2 || !g.adjacent(b, c)) continue;
        out.push_back({g.label(c), g.label(a), g.label(b)});
      }
    }
  }
  return out;
}

}  // namespace cwg
