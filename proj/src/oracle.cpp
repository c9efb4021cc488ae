#include "cwg/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cwg/error.hpp"

namespace cwg::oracle {

namespace {

void require(std::size_t size, std::size_t limit, const char* what) {
  if (size > limit)
    throw Error(Errc::budget_exceeded, std::string("oracle: ") + std::to_string(size) + " " + what +
                                           " exceed the budget of " + std::to_string(limit));
}

bool pairwise_disjoint(const std::vector<Edge>& picked) {
  for (std::size_t a = 0; a < picked.size(); ++a)
    for (std::size_t b = a + 1; b < picked.size(); ++b)
      if (picked[a].u == picked[b].u || picked[a].u == picked[b].v || picked[a].v == picked[b].u ||
          picked[a].v == picked[b].v)
        return false;
  return true;
}

bool joined(const std::vector<Edge>& edges, VertexId a, VertexId b) {
  for (const Edge& e : edges)
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  return false;
}

bool no_bridge(const std::vector<Edge>& edges, const std::vector<Edge>& picked) {
  for (std::size_t a = 0; a < picked.size(); ++a)
    for (std::size_t b = a + 1; b < picked.size(); ++b)
      for (VertexId p : {picked[a].u, picked[a].v})
        for (VertexId q : {picked[b].u, picked[b].v})
          if (joined(edges, p, q)) return false;
  return true;
}

using Face = std::set<std::string>;

// Intersections of `next` with each earlier facet must all lie inside ones of
// size |next| - 1.
bool extends(const std::vector<Face>& placed, const Face& next) {
  std::vector<Face> meets;
  for (const Face& f : placed) {
    Face common;
    std::set_intersection(f.begin(), f.end(), next.begin(), next.end(), std::inserter(common, common.end()));
    meets.push_back(std::move(common));
  }
  for (const Face& a : meets) {
    bool covered = false;
    for (const Face& b : meets)
      if (b.size() + 1 == next.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) covered = true;
    if (!covered) return false;
  }
  return true;
}

bool backtrack(const std::vector<Face>& facets, std::vector<bool>& used, std::vector<Face>& placed,
               std::vector<std::size_t>& order) {
  if (placed.size() == facets.size()) return true;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (used[i] || !extends(placed, facets[i])) continue;
    used[i] = true;
    placed.push_back(facets[i]);
    order.push_back(i);
    if (backtrack(facets, used, placed, order)) return true;
    used[i] = false;
    placed.pop_back();
    order.pop_back();
  }
  return false;
}

}  // namespace

Matchings oracle_matchings(const Graph& g, const OracleBudget& budget) {
  const std::vector<Edge>& edges = g.edges();
  require(edges.size(), budget.max_edges, "edges");
  Matchings out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges.size()); ++subset) {
    std::vector<Edge> picked;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (subset >> i & 1) picked.push_back(edges[i]);
    if (!pairwise_disjoint(picked)) continue;
    out.m = std::max(out.m, picked.size());
    if (no_bridge(edges, picked)) out.im = std::max(out.im, picked.size());
  }
  return out;
}

std::vector<VertexSet> oracle_max_independent_sets(const Graph& g, const OracleBudget& budget) {
  const std::size_t n = g.num_vertices();
  require(n, budget.max_vertices, "vertices");
  const std::vector<Edge>& edges = g.edges();
  auto independent = [&](std::uint64_t s) {
    for (const Edge& e : edges)
      if ((s >> e.u & 1) && (s >> e.v & 1)) return false;
    return true;
  };
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!independent(s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1) && independent(s | std::uint64_t{1} << v)) maximal = false;
    if (!maximal) continue;
    VertexSet set;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) set.push_back(g.label(v));
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LabelLess{});
  });
  return out;
}

ShellingSearch oracle_shelling_exists(const SimplicialComplex& c, const OracleBudget& budget) {
  require(c.facets.size(), budget.max_facets, "facets");
  std::vector<Face> facets;
  for (const auto& f : c.facets) facets.emplace_back(f.begin(), f.end());
  std::vector<bool> used(facets.size(), false);
  std::vector<Face> placed;
  std::vector<std::size_t> order;
  ShellingSearch out;
  out.exists = backtrack(facets, used, placed, order);
  if (out.exists)
    for (std::size_t i : order) out.order.push_back(c.facets[i]);
  return out;
}

bool oracle_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges()) {
      VertexId other = e.u == v ? e.v : e.v == v ? e.u : n;
      if (other == n || seen[other]) continue;
      seen[other] = true;
      ++reached;
      stack.push_back(other);
    }
  }
  return reached == n;
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  require(n, 6, "vertices");
  if (n == 0) throw Error(Errc::empty_graph, "oracle: no vertices to enumerate");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(names[i], names[j]);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << pairs.size()); ++k) {
    std::vector<LabelPair> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (k >> i & 1) chosen.push_back(pairs[i]);
    fn(Graph::from_edge_list(chosen, names));
  }
}

std::vector<Graph> enumerate_labeled_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cwg::oracle
