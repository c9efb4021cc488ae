#include "cwg/cw_structure.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cwg/error.hpp"

namespace cwg {

namespace {

std::string leaf_label(std::size_t i, std::size_t l) {
  return "z" + std::to_string(i + 1) + "_" + std::to_string(l + 1);
}

LabelPair triangle_labels(std::size_t j, std::size_t k) {
  std::string stem = "w" + std::to_string(j + 1) + "_" + std::to_string(k + 1);
  return {stem + "+", stem + "-"};
}

bool is_star(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 2) return true;  // K_1 and K_2 (connectedness checked by the caller)
  for (VertexId c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    bool rest_are_leaves = true;
    for (VertexId v = 0; v < n && rest_are_leaves; ++v)
      if (v != c && g.degree(v) != 1) rest_are_leaves = false;
    if (rest_are_leaves) return true;
  }
  return false;
}

bool is_star_triangle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3 || n % 2 == 0 || g.num_edges() != (n - 1) + (n - 1) / 2) return false;
  for (VertexId c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v)
      if (v != c && g.degree(v) != 2) ok = false;
    if (ok) return true;
  }
  return false;
}

struct Attempt {
  std::optional<CwDecomposition> dec;
  std::string failure;
};

// Checks whether `left` can play the [n] side: each left vertex carries a
// leaf, no left vertex carries a triangle and no right vertex carries a leaf.
std::string orientation_failure(const VertexSet& left, const VertexSet& right,
                                const std::map<std::string, VertexSet>& leaf_map,
                                const std::map<std::string, std::vector<LabelPair>>& tri_map) {
  for (const auto& x : left) {
    if (!leaf_map.contains(x)) return "left vertex '" + x + "' carries no leaf";
    if (tri_map.contains(x)) return "left vertex '" + x + "' carries a pendant triangle";
  }
  for (const auto& y : right)
    if (leaf_map.contains(y)) return "right vertex '" + y + "' carries a leaf";
  return {};
}

Attempt try_decompose(const Graph& g) {
  if (!is_connected(g)) return {std::nullopt, "graph is disconnected"};

  std::vector<bool> stripped(g.num_vertices(), false);
  std::map<std::string, std::vector<LabelPair>> tri_map;
  for (const auto& pt : pendant_triangles(g)) {
    stripped[g.index_of(pt.a)] = stripped[g.index_of(pt.b)] = true;
    tri_map[pt.apex].emplace_back(pt.a, pt.b);
  }
  std::map<std::string, VertexSet> leaf_map;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    VertexId p = g.neighbors(v).front();
    if (g.degree(p) == 1) return {std::nullopt, "graph is a single edge"};
    stripped[v] = true;
    leaf_map[g.label(p)].push_back(g.label(v));
  }

  VertexSet core;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!stripped[v]) core.push_back(g.label(v));
  if (core.size() < 2)
    return {std::nullopt, "removing leaves and pendant triangles leaves fewer than two support vertices"};

  Graph support = induced_subgraph(g, core);
  auto parts = bipartition(support);
  if (!parts) return {std::nullopt, "support left after removing leaves and pendant triangles is not bipartite"};

  // The side holding the smallest label is tried first as the leaf side.
  const std::pair<const VertexSet*, const VertexSet*> orientations[] = {{&parts->left, &parts->right},
                                                                        {&parts->right, &parts->left}};
  std::string failures;
  for (const auto& [left, right] : orientations) {
    std::string why = orientation_failure(*left, *right, leaf_map, tri_map);
    if (!why.empty()) {
      failures += (failures.empty() ? "" : "; ") + why;
      continue;
    }
    CwDecomposition dec;
    dec.left = *left;
    std::vector<std::string> with_tri;
    std::vector<std::string> without_tri;
    for (const auto& y : *right) (tri_map.contains(y) ? with_tri : without_tri).push_back(y);
    dec.right = with_tri;
    dec.right.insert(dec.right.end(), without_tri.begin(), without_tri.end());
    std::map<std::string, std::size_t> left_pos;
    std::map<std::string, std::size_t> right_pos;
    for (std::size_t i = 0; i < dec.left.size(); ++i) left_pos[dec.left[i]] = i;
    for (std::size_t j = 0; j < dec.right.size(); ++j) right_pos[dec.right[j]] = j;
    for (const auto& [a, b] : support.edge_labels()) {
      if (left_pos.contains(a))
        dec.support_edges.emplace_back(left_pos[a], right_pos.at(b));
      else
        dec.support_edges.emplace_back(left_pos.at(b), right_pos.at(a));
    }
    std::sort(dec.support_edges.begin(), dec.support_edges.end());
    for (const auto& x : dec.left) dec.leaves.push_back(leaf_map.at(x));
    for (const auto& y : dec.right) {
      auto it = tri_map.find(y);
      dec.triangles.push_back(it == tri_map.end() ? std::vector<LabelPair>{} : it->second);
    }
    return {std::move(dec), {}};
  }
  return {std::nullopt, "no orientation of the support fits (" + failures + ")"};
}

// Unbiased draw from [lo, hi] on top of the fully specified mt19937_64
// stream; std::uniform_int_distribution differs across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::size_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<std::size_t>(x % span);
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, 0, i - 1)]);
}

std::string fresh_label(std::string candidate, const std::set<std::string>& taken) {
  while (taken.contains(candidate)) candidate += "'";
  return candidate;
}

}  // namespace

std::string_view to_string(GraphClass tag) {
  switch (tag) {
    case GraphClass::star: return "Star";
    case GraphClass::star_triangle: return "StarTriangle";
    case GraphClass::cameron_walker: return "CameronWalker";
    case GraphClass::other: return "Other";
  }
  return "Other";
}

std::size_t CwDecomposition::f() const {
  std::size_t total = 0;
  for (const auto& l : leaves) total += l.size();
  return total;
}

std::size_t CwDecomposition::t() const {
  std::size_t total = 0;
  for (const auto& tr : triangles) total += tr.size();
  return total;
}

std::size_t CwDecomposition::m_prime() const {
  return static_cast<std::size_t>(
      std::count_if(triangles.begin(), triangles.end(), [](const auto& tr) { return !tr.empty(); }));
}

std::vector<std::size_t> CwDecomposition::leaf_counts() const {
  std::vector<std::size_t> out;
  for (const auto& l : leaves) out.push_back(l.size());
  return out;
}

std::vector<std::size_t> CwDecomposition::triangle_counts() const {
  std::vector<std::size_t> out;
  for (const auto& tr : triangles) out.push_back(tr.size());
  return out;
}

Graph CwDecomposition::support() const {
  std::vector<LabelPair> edges;
  for (const auto& [i, j] : support_edges) edges.emplace_back(left.at(i), right.at(j));
  std::vector<std::string> isolated = left;
  isolated.insert(isolated.end(), right.begin(), right.end());
  return Graph::from_edge_list(edges, isolated);
}

void validate(const CwDecomposition& dec) {
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_decomposition, why); };
  if (dec.n() == 0 || dec.m() == 0) fail("both sides of the support must be nonempty");
  if (dec.leaves.size() != dec.n()) fail("one leaf list per left vertex is required");
  if (dec.triangles.size() != dec.m()) fail("one triangle list per right vertex is required");
  for (std::size_t i = 0; i < dec.n(); ++i)
    if (dec.leaves[i].empty()) fail("left vertex '" + dec.left[i] + "' has no leaf");

  std::set<std::string> labels;
  auto claim = [&](const std::string& label) {
    if (label.empty()) fail("empty label");
    if (!labels.insert(label).second) fail("label '" + label + "' is used twice");
  };
  for (const auto& x : dec.left) claim(x);
  for (const auto& y : dec.right) claim(y);
  for (const auto& l : dec.leaves)
    for (const auto& z : l) claim(z);
  for (const auto& tr : dec.triangles)
    for (const auto& [a, b] : tr) {
      claim(a);
      claim(b);
    }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : dec.support_edges) {
    if (e.first >= dec.n() || e.second >= dec.m()) fail("support edge index out of range");
    if (!seen.insert(e).second) fail("duplicate support edge");
  }
  // Union-find over left (0..n-1) and right (n..n+m-1).
  std::vector<std::size_t> parent(dec.n() + dec.m());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = parent.size();
  for (const auto& [i, j] : dec.support_edges) {
    auto a = root(i);
    auto b = root(dec.n() + j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) fail("support graph is not connected");
}

CwDecomposition make_cw_decomposition(std::size_t n, std::size_t m,
                                      std::vector<std::pair<std::size_t, std::size_t>> support_edges,
                                      const std::vector<std::size_t>& leaf_counts,
                                      const std::vector<std::size_t>& triangle_counts) {
  if (leaf_counts.size() != n || triangle_counts.size() != m)
    throw Error(Errc::invalid_decomposition, "attachment counts do not match the support sides");
  CwDecomposition dec;
  for (std::size_t i = 0; i < n; ++i) {
    dec.left.push_back("x" + std::to_string(i + 1));
    std::vector<std::string> zs;
    for (std::size_t l = 0; l < leaf_counts[i]; ++l) zs.push_back(leaf_label(i, l));
    dec.leaves.push_back(std::move(zs));
  }
  for (std::size_t j = 0; j < m; ++j) {
    dec.right.push_back("y" + std::to_string(j + 1));
    std::vector<LabelPair> ws;
    for (std::size_t k = 0; k < triangle_counts[j]; ++k) ws.push_back(triangle_labels(j, k));
    dec.triangles.push_back(std::move(ws));
  }
  std::sort(support_edges.begin(), support_edges.end());
  dec.support_edges = std::move(support_edges);
  validate(dec);
  return dec;
}

CwDecomposition canonical_form(const CwDecomposition& dec) {
  validate(dec);
  std::vector<std::size_t> order(dec.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](std::size_t j) { return !dec.triangles[j].empty(); });
  std::vector<std::size_t> new_pos(dec.m());
  for (std::size_t k = 0; k < order.size(); ++k) new_pos[order[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [i, j] : dec.support_edges) edges.emplace_back(i, new_pos[j]);
  std::vector<std::size_t> t_counts;
  for (std::size_t j : order) t_counts.push_back(dec.triangles[j].size());
  return make_cw_decomposition(dec.n(), dec.m(), std::move(edges), dec.leaf_counts(), t_counts);
}

Classification classify(const Graph& g, const ClassifyOptions& options) {
  Classification out;
  if (!is_connected(g)) {
    out.tag = GraphClass::other;
    out.reason = "disconnected";
    out.detail = "graph is disconnected";
  } else if (is_star(g)) {
    out.tag = GraphClass::star;
  } else if (is_star_triangle(g)) {
    out.tag = GraphClass::star_triangle;
  } else {
    Attempt attempt = try_decompose(g);
    if (attempt.dec) {
      out.tag = GraphClass::cameron_walker;
      out.decomposition = std::move(attempt.dec);
    } else {
      out.tag = GraphClass::other;
      out.reason = "im != m";
      out.detail = attempt.failure;
    }
  }

  if (options.cross_check && out.reason != "disconnected") {
    auto stats = matching_stats(g, options.matching_vertex_cap, options.induced_matching_edge_cap);
    const bool in_family = out.tag != GraphClass::other;
    if (in_family != (stats.im == stats.m))
      throw std::logic_error("classification of a " + std::to_string(g.num_vertices()) +
                             "-vertex graph disagrees with im = " + std::to_string(stats.im) +
                             ", m = " + std::to_string(stats.m));
  }
  return out;
}

CwDecomposition decompose(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::not_cameron_walker, "graph is disconnected");
  if (is_star(g)) throw Error(Errc::not_cameron_walker, "graph is a star");
  if (is_star_triangle(g)) throw Error(Errc::not_cameron_walker, "graph is a star triangle");
  Attempt attempt = try_decompose(g);
  if (!attempt.dec) throw Error(Errc::not_cameron_walker, attempt.failure);
  return std::move(*attempt.dec);
}

Graph build_cw(const CwDecomposition& dec) {
  validate(dec);
  std::vector<LabelPair> edges;
  for (const auto& [i, j] : dec.support_edges) edges.emplace_back(dec.left[i], dec.right[j]);
  for (std::size_t i = 0; i < dec.n(); ++i)
    for (const auto& z : dec.leaves[i]) edges.emplace_back(dec.left[i], z);
  for (std::size_t j = 0; j < dec.m(); ++j)
    for (const auto& [a, b] : dec.triangles[j]) {
      edges.emplace_back(dec.right[j], a);
      edges.emplace_back(dec.right[j], b);
      edges.emplace_back(a, b);
    }
  return Graph::from_edge_list(edges);
}

Graph attach_cliques(const CliqueAttachmentSpec& spec) {
  const Graph& base = spec.base;
  if (spec.sizes.size() != base.num_vertices())
    throw Error(Errc::invalid_size, "expected one clique size per base vertex");
  std::set<std::string> taken(base.labels().begin(), base.labels().end());
  std::vector<LabelPair> edges = base.edge_labels();
  for (VertexId v = 0; v < base.num_vertices(); ++v) {
    if (spec.sizes[v] < 2)
      throw Error(Errc::invalid_size, "clique size at '" + base.label(v) + "' must be at least 2");
    std::vector<std::string> clique{base.label(v)};
    for (std::size_t j = 1; j < spec.sizes[v]; ++j) {
      std::string fresh = fresh_label(base.label(v) + "_k" + std::to_string(j), taken);
      taken.insert(fresh);
      clique.push_back(std::move(fresh));
    }
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
  }
  return Graph::from_edge_list(edges, base.labels());
}

Graph whisker_partition(const CliquePartition& partition) {
  const Graph& base = partition.base;
  std::vector<int> part_of(base.num_vertices(), -1);
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    const auto& part = partition.parts[p];
    for (const auto& label : part) {
      auto v = base.find(label);
      if (!v) throw Error(Errc::not_a_partition, "part contains unknown vertex '" + label + "'");
      if (part_of[*v] >= 0) throw Error(Errc::not_a_partition, "vertex '" + label + "' lies in two parts");
      part_of[*v] = static_cast<int>(p);
    }
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!base.adjacent(base.index_of(part[a]), base.index_of(part[b])))
          throw Error(Errc::not_a_clique, "part " + std::to_string(p + 1) + " is not a clique");
  }
  for (VertexId v = 0; v < base.num_vertices(); ++v)
    if (part_of[v] < 0) throw Error(Errc::not_a_partition, "vertex '" + base.label(v) + "' lies in no part");

  std::set<std::string> taken(base.labels().begin(), base.labels().end());
  std::vector<LabelPair> edges = base.edge_labels();
  std::vector<std::string> vertices = base.labels();
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    std::string w = fresh_label("w" + std::to_string(p + 1), taken);
    taken.insert(w);
    vertices.push_back(w);
    for (const auto& label : partition.parts[p]) edges.emplace_back(label, w);
  }
  return Graph::from_edge_list(edges, vertices);
}

CwDecomposition random_cw(const RandomCwParams& params) {
  const auto [n, m, max_f, max_t, density, seed] = params;
  if (n == 0 || m == 0) throw Error(Errc::invalid_params, "n and m must be at least 1");
  if (max_f == 0) throw Error(Errc::invalid_params, "max_f must be at least 1");
  if (!(density >= 0.0 && density <= 1.0)) throw Error(Errc::invalid_params, "edge density must lie in [0, 1]");
  if (n == 1 && max_t == 0) throw Error(Errc::invalid_params, "n = 1 with max_t = 0 only yields stars");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> lefts(n);
  std::vector<std::size_t> rights(m);
  std::iota(lefts.begin(), lefts.end(), 0);
  std::iota(rights.begin(), rights.end(), 0);
  shuffle(lefts, rng);
  shuffle(rights, rng);

  std::set<std::pair<std::size_t, std::size_t>> edges{{lefts[0], rights[0]}};
  std::vector<std::size_t> placed_left{lefts[0]};
  std::vector<std::size_t> placed_right{rights[0]};
  std::size_t next_left = 1;
  std::size_t next_right = 1;
  while (next_left < n || next_right < m) {
    const std::size_t remaining_left = n - next_left;
    const std::size_t remaining_right = m - next_right;
    if (draw(rng, 1, remaining_left + remaining_right) <= remaining_left) {
      std::size_t x = lefts[next_left++];
      edges.emplace(x, placed_right[draw(rng, 0, placed_right.size() - 1)]);
      placed_left.push_back(x);
    } else {
      std::size_t y = rights[next_right++];
      edges.emplace(placed_left[draw(rng, 0, placed_left.size() - 1)], y);
      placed_right.push_back(y);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!edges.contains({i, j}) && draw_unit(rng) < density) edges.emplace(i, j);

  std::vector<std::size_t> degree(m, 0);
  for (const auto& e : edges) ++degree[e.second];
  if (max_t == 0) {
    for (std::size_t j = 0; j < m; ++j) {
      if (degree[j] != 1) continue;
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < n; ++i)
        if (!edges.contains({i, j})) candidates.push_back(i);
      edges.emplace(candidates[draw(rng, 0, candidates.size() - 1)], j);
      degree[j] = 2;
    }
  }

  std::vector<std::size_t> f(n);
  for (auto& fi : f) fi = draw(rng, 1, max_f);
  std::vector<std::size_t> t(m);
  for (std::size_t j = 0; j < m; ++j) t[j] = draw(rng, degree[j] == 1 ? 1 : 0, max_t);

  return make_cw_decomposition(n, m, {edges.begin(), edges.end()}, f, t);
}

}  // namespace cwg
