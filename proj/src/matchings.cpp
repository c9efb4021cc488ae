#include "cwg/matchings.hpp"

#include <boost/dynamic_bitset.hpp>
#include <numeric>
#include <queue>
#include <string>

#include "cwg/error.hpp"

namespace cwg {

namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm, BFS formulation with explicit base/parent arrays.
class Blossom {
 public:
  Blossom(std::size_t n, std::span<const Edge> edges)
      : n_(static_cast<int>(n)), adj_(n), match_(n, kNone), parent_(n), base_(n), used_(n), in_blossom_(n) {
    for (const Edge& e : edges) {
      adj_[e.u].push_back(static_cast<int>(e.v));
      adj_[e.v].push_back(static_cast<int>(e.u));
    }
  }

  std::size_t run() {
    std::size_t size = 0;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (int u : adj_[v])
        if (match_[u] == kNone) {
          match_[u] = v;
          match_[v] = u;
          ++size;
          break;
        }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      int v = find_path(root);
      if (v == kNone) continue;
      ++size;
      while (v != kNone) {
        int pv = parent_[v];
        int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return size;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

std::vector<Edge> resolve_edges(const Graph& g, std::span<const LabelPair> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u || !v || !g.adjacent(*u, *v))
      throw Error(Errc::not_an_edge, "{" + a + ", " + b + "} is not an edge");
    out.push_back(*u < *v ? Edge{*u, *v} : Edge{*v, *u});
  }
  return out;
}

bool disjoint_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<bool> used(n, false);
  for (const Edge& e : edges) {
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

std::vector<LabelPair> to_labels(const Graph& g, const std::vector<std::size_t>& edge_ids) {
  std::vector<LabelPair> out;
  for (std::size_t id : edge_ids) {
    const Edge& e = g.edges()[id];
    out.emplace_back(g.label(e.u), g.label(e.v));
  }
  return out;
}

class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Graph& g) : g_(g), conflicts_(g.num_edges()) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<bool> closed(g.num_vertices(), false);
      for (VertexId x : {edges[i].u, edges[i].v}) {
        closed[x] = true;
        for (VertexId y : g.neighbors(x)) closed[y] = true;
      }
      conflicts_[i].resize(edges.size());
      for (std::size_t j = 0; j < edges.size(); ++j)
        if (closed[edges[j].u] || closed[edges[j].v]) conflicts_[i].set(j);
    }
  }

  std::vector<std::size_t> run() {
    boost::dynamic_bitset<> available(g_.num_edges());
    available.set();
    std::vector<std::size_t> chosen;
    search(available, chosen);
    return best_;
  }

 private:
  std::size_t upper_bound(const boost::dynamic_bitset<>& available) const {
    std::vector<Edge> residual;
    for (auto i = available.find_first(); i != boost::dynamic_bitset<>::npos; i = available.find_next(i))
      residual.push_back(g_.edges()[i]);
    return detail::maximum_matching_size(g_.num_vertices(), residual);
  }

  void search(const boost::dynamic_bitset<>& available, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (available.none()) return;
    // im <= m on the residual edges; a branch that can only tie is dropped.
    if (chosen.size() + available.count() <= best_.size()) return;
    if (chosen.size() + upper_bound(available) <= best_.size()) return;

    std::size_t e = available.find_first();
    chosen.push_back(e);
    search(available - conflicts_[e], chosen);
    chosen.pop_back();

    boost::dynamic_bitset<> without = available;
    without.reset(e);
    search(without, chosen);
  }

  const Graph& g_;
  std::vector<boost::dynamic_bitset<>> conflicts_;
  std::vector<std::size_t> best_;
};

}  // namespace

namespace detail {

std::size_t maximum_matching_size(std::size_t n, std::span<const Edge> edges) {
  if (edges.empty()) return 0;
  return Blossom(n, edges).run();
}

}  // namespace detail

bool is_matching(const Graph& g, std::span<const LabelPair> edges) {
  auto ids = resolve_edges(g, edges);
  return disjoint_edges(g.num_vertices(), ids);
}

bool is_induced_matching(const Graph& g, std::span<const LabelPair> edges) {
  auto ids = resolve_edges(g, edges);
  if (!disjoint_edges(g.num_vertices(), ids)) return false;
  std::vector<int> owner(g.num_vertices(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) owner[ids[i].u] = owner[ids[i].v] = static_cast<int>(i);
  for (const Edge& f : g.edges())
    if (owner[f.u] >= 0 && owner[f.v] >= 0 && owner[f.u] != owner[f.v]) return false;
  return true;
}

MatchingResult matching_number(const Graph& g, std::size_t vertex_cap) {
  if (g.num_vertices() > vertex_cap)
    throw Error(Errc::size_guard, "matching number: " + std::to_string(g.num_vertices()) +
                                      " vertices exceed the cap of " + std::to_string(vertex_cap));
  const auto& edges = g.edges();
  const std::size_t target = detail::maximum_matching_size(g.num_vertices(), edges);

  // Branch on edges in canonical order, include-branch first. The residual
  // bound is exact, so the include branch is taken iff it can still reach the
  // optimum, which yields the lexicographically smallest maximum matching.
  std::vector<bool> covered(g.num_vertices(), false);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < edges.size() && chosen.size() < target; ++i) {
    const Edge& e = edges[i];
    if (covered[e.u] || covered[e.v]) continue;
    std::vector<Edge> residual;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& f = edges[j];
      if (covered[f.u] || covered[f.v] || f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) continue;
      residual.push_back(f);
    }
    if (chosen.size() + 1 + detail::maximum_matching_size(g.num_vertices(), residual) == target) {
      chosen.push_back(i);
      covered[e.u] = covered[e.v] = true;
    }
  }
  return {chosen.size(), to_labels(g, chosen)};
}

MatchingResult induced_matching_number(const Graph& g, std::size_t edge_cap) {
  if (g.num_edges() > edge_cap)
    throw Error(Errc::size_guard, "induced matching number: " + std::to_string(g.num_edges()) +
                                      " edges exceed the cap of " + std::to_string(edge_cap));
  auto best = InducedMatchingSearch(g).run();
  return {best.size(), to_labels(g, best)};
}

MatchingStats matching_stats(const Graph& g, std::size_t vertex_cap, std::size_t edge_cap) {
  auto m = matching_number(g, vertex_cap);
  auto im = induced_matching_number(g, edge_cap);
  return {m.size, im.size, std::move(m.witness), std::move(im.witness)};
}

}  // namespace cwg
