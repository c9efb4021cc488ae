#include "cwg/complexes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cwg/error.hpp"

namespace cwg {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

template <typename F>
void for_each_bit(Mask m, F&& fn) {
  while (m) {
    fn(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

// Lexicographic order of the ascending index sequences.
bool sequence_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask low = (a ^ b) & ~((a ^ b) - 1);
  const Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<Mask> maximal_only(std::vector<Mask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Mask> out;
  for (Mask f : faces) {
    bool dominated = false;
    for (Mask g : faces)
      if (g != f && subset_of(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(f);
  }
  return out;
}

// Masks over an indexed ground set of labels.
class Indexed {
 public:
  Indexed(const VertexSet& vertices, std::string_view what) : vertices_(vertices) {
    if (vertices.size() > 64)
      throw Error(Errc::size_guard, std::string(what) + ": " + std::to_string(vertices.size()) +
                                        " vertices exceed the 64-vertex representation");
  }

  Mask mask(const VertexSet& face) const {
    Mask m = 0;
    for (const auto& v : face) m |= bit(index(v));
    return m;
  }

  std::size_t index(std::string_view v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const std::string& a, std::string_view b) { return label_less(a, b); });
    if (it == vertices_.end() || *it != v)
      throw Error(Errc::unknown_vertex, "unknown vertex '" + std::string(v) + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  VertexSet labels(Mask m) const {
    VertexSet out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(vertices_[i]); });
    return out;
  }

 private:
  const VertexSet& vertices_;
};

std::vector<Mask> facet_masks(const SimplicialComplex& c, const Indexed& idx) {
  std::vector<Mask> out;
  for (const auto& f : c.facets) out.push_back(idx.mask(f));
  return out;
}

SimplicialComplex make_complex(VertexSet vertices, std::vector<Mask> faces) {
  faces = maximal_only(std::move(faces));
  std::sort(faces.begin(), faces.end(), sequence_less);
  Indexed idx(vertices, "complex");
  SimplicialComplex c;
  for (Mask f : faces) c.facets.push_back(idx.labels(f));
  c.vertices = std::move(vertices);
  return c;
}

// Bron–Kerbosch with pivoting on the complement of a graph given by
// adjacency masks; `report` returns false to stop the enumeration.
class IndependentSets {
 public:
  IndependentSets(std::vector<Mask> adjacency, Mask universe)
      : adjacency_(std::move(adjacency)), universe_(universe) {}

  bool run(Mask candidates, const std::function<bool(Mask)>& report) {
    report_ = &report;
    return expand(0, candidates, 0);
  }

 private:
  Mask non_neighbors(std::size_t v) const { return universe_ & ~adjacency_[v] & ~bit(v); }

  bool expand(Mask chosen, Mask candidates, Mask excluded) {
    if (candidates == 0 && excluded == 0) return (*report_)(chosen);
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool first = true;
    for_each_bit(candidates | excluded, [&](std::size_t u) {
      std::size_t score = popcount(candidates & non_neighbors(u));
      if (first || score > best) {
        pivot = u;
        best = score;
        first = false;
      }
    });
    Mask branch = candidates & ~non_neighbors(pivot);
    while (branch) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(branch));
      branch &= branch - 1;
      if (!expand(chosen | bit(v), candidates & non_neighbors(v), excluded & non_neighbors(v))) return false;
      candidates &= ~bit(v);
      excluded |= bit(v);
    }
    return true;
  }

  std::vector<Mask> adjacency_;
  Mask universe_;
  const std::function<bool(Mask)>* report_ = nullptr;
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void check_cap(std::size_t size, std::size_t cap, std::string_view what) {
  if (size > cap || size > 64)
    throw Error(Errc::size_guard, std::string(what) + ": " + std::to_string(size) + " vertices exceed the cap of " +
                                      std::to_string(std::min<std::size_t>(cap, 64)));
}

// Complex-level vertex decomposability on facet masks.
class ComplexDecomposability {
 public:
  explicit ComplexDecomposability(std::size_t num_vertices) : num_vertices_(num_vertices) {}

  bool decide(const std::vector<Mask>& facets) {
    if (facets.size() <= 1) return true;
    auto key = canonical_key(facets);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (std::size_t x = 0; x < num_vertices_ && !result; ++x) {
      auto split = shed(facets, x);
      result = split && decide(split->first) && decide(split->second);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::shared_ptr<const SheddingTree> witness(const std::vector<Mask>& facets, const VertexSet& labels) {
    auto node = std::make_shared<SheddingTree>();
    if (facets.size() <= 1) return node;
    for (std::size_t x = 0; x < num_vertices_; ++x) {
      auto split = shed(facets, x);
      if (!split || !decide(split->first) || !decide(split->second)) continue;
      node->vertex = labels[x];
      node->deletion = witness(split->first, labels);
      node->link = witness(split->second, labels);
      return node;
    }
    return nullptr;
  }

 private:
  // When x is a shedding vertex, returns (facets of c \ x, facets of link(x));
  // the deletion's facets are then exactly the facets avoiding x.
  static std::optional<std::pair<std::vector<Mask>, std::vector<Mask>>> shed(const std::vector<Mask>& facets,
                                                                             std::size_t x) {
    std::vector<Mask> without;
    std::vector<Mask> link;
    for (Mask f : facets) (f & bit(x) ? link : without).push_back(f & ~bit(x));
    if (link.empty()) return std::nullopt;
    for (Mask l : link)
      if (std::none_of(without.begin(), without.end(), [&](Mask w) { return subset_of(l, w); }))
        return std::nullopt;
    return std::make_pair(std::move(without), std::move(link));
  }

  // Facets sorted, vertices renamed by first occurrence, facets re-sorted.
  static std::vector<Mask> canonical_key(std::vector<Mask> facets) {
    std::sort(facets.begin(), facets.end());
    std::array<int, 64> rename;
    rename.fill(-1);
    int next = 0;
    for (Mask f : facets)
      for_each_bit(f, [&](std::size_t v) {
        if (rename[v] < 0) rename[v] = next++;
      });
    for (Mask& f : facets) {
      Mask r = 0;
      for_each_bit(f, [&](std::size_t v) { r |= bit(static_cast<std::size_t>(rename[v])); });
      f = r;
    }
    std::sort(facets.begin(), facets.end());
    return facets;
  }

  std::size_t num_vertices_;
  std::map<std::vector<Mask>, bool> memo_;
};

// Graph-level vertex decomposability on induced subgraphs given by masks.
class GraphDecomposability {
 public:
  explicit GraphDecomposability(const Graph& g) : g_(g), adjacency_(adjacency_masks(g)) {}

  bool decide(Mask vertices) {
    if (auto it = memo_.find(vertices); it != memo_.end()) return it->second;
    bool result = true;
    if (has_edge(vertices)) {
      auto comps = components(vertices);
      if (comps.size() > 1) {
        for (Mask c : comps)
          if (!decide(c)) {
            result = false;
            break;
          }
      } else {
        result = false;
        for_each_bit(vertices, [&](std::size_t v) {
          if (!result && sheds(vertices, v)) result = decide(vertices & ~bit(v)) && decide(rest(vertices, v));
        });
      }
    }
    memo_.emplace(vertices, result);
    return result;
  }

  std::shared_ptr<const GraphSheddingTree> witness(Mask vertices) {
    auto node = std::make_shared<GraphSheddingTree>();
    for_each_bit(vertices, [&](std::size_t v) { node->vertices.push_back(g_.label(v)); });
    if (!has_edge(vertices)) return node;
    auto comps = components(vertices);
    if (comps.size() > 1) {
      node->kind = GraphSheddingTree::Kind::components;
      for (Mask c : comps) node->children.push_back(witness(c));
      return node;
    }
    node->kind = GraphSheddingTree::Kind::shedding;
    for (std::size_t v : bits_of(vertices)) {
      if (!sheds(vertices, v) || !decide(vertices & ~bit(v)) || !decide(rest(vertices, v))) continue;
      node->vertex = g_.label(v);
      node->children.push_back(witness(vertices & ~bit(v)));
      node->children.push_back(witness(rest(vertices, v)));
      return node;
    }
    return nullptr;
  }

 private:
  Mask rest(Mask vertices, std::size_t v) const { return vertices & ~adjacency_[v] & ~bit(v); }

  bool has_edge(Mask vertices) const {
    bool found = false;
    for_each_bit(vertices, [&](std::size_t v) { found = found || (adjacency_[v] & vertices) != 0; });
    return found;
  }

  std::vector<Mask> components(Mask vertices) const {
    std::vector<Mask> out;
    Mask left = vertices;
    while (left) {
      Mask comp = left & (~left + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](std::size_t v) { next |= adjacency_[v]; });
        next &= vertices & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  // No maximal independent set of G \ N[v] may dominate N(v), otherwise it
  // is maximal in G \ v as well.
  bool sheds(Mask vertices, std::size_t v) const {
    const Mask nbrs = adjacency_[v] & vertices;
    IndependentSets sets(adjacency_, rest(vertices, v));
    return sets.run(rest(vertices, v), [&](Mask s) {
      Mask dominated = 0;
      for_each_bit(s, [&](std::size_t u) { dominated |= adjacency_[u]; });
      return (nbrs & ~dominated) != 0;
    });
  }

  const Graph& g_;
  std::vector<Mask> adjacency_;
  std::unordered_map<Mask, bool> memo_;
};

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(VertexSet vertices, std::vector<VertexSet> faces) {
  std::sort(vertices.begin(), vertices.end(), LabelLess{});
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Indexed idx(vertices, "complex");
  std::vector<Mask> masks;
  for (const auto& f : faces) masks.push_back(idx.mask(f));
  return make_complex(std::move(vertices), std::move(masks));
}

SimplicialComplex independence_complex(const Graph& g, std::size_t vertex_cap) {
  check_cap(g.num_vertices(), vertex_cap, "independence complex");
  const Mask all = full_mask(g.num_vertices());
  std::vector<Mask> facets;
  IndependentSets(adjacency_masks(g), all).run(all, [&](Mask s) {
    facets.push_back(s);
    return true;
  });
  return make_complex(g.labels(), std::move(facets));
}

bool is_pure(const SimplicialComplex& c) {
  return std::adjacent_find(c.facets.begin(), c.facets.end(), [](const VertexSet& a, const VertexSet& b) {
           return a.size() != b.size();
         }) == c.facets.end();
}

SimplicialComplex link(const SimplicialComplex& c, std::string_view v) {
  Indexed idx(c.vertices, "link");
  const Mask x = bit(idx.index(v));
  std::vector<Mask> faces;
  for (Mask f : facet_masks(c, idx))
    if (f & x) faces.push_back(f & ~x);
  VertexSet rest;
  for (const auto& u : c.vertices)
    if (u != v) rest.push_back(u);
  Indexed rest_idx(rest, "link");
  std::vector<Mask> renamed;
  for (Mask f : faces) renamed.push_back(rest_idx.mask(idx.labels(f)));
  return make_complex(std::move(rest), std::move(renamed));
}

SimplicialComplex deletion(const SimplicialComplex& c, std::string_view v) {
  Indexed idx(c.vertices, "deletion");
  const Mask x = bit(idx.index(v));
  VertexSet rest;
  for (const auto& u : c.vertices)
    if (u != v) rest.push_back(u);
  Indexed rest_idx(rest, "deletion");
  std::vector<Mask> faces;
  for (Mask f : facet_masks(c, idx)) faces.push_back(rest_idx.mask(idx.labels(f & ~x)));
  return make_complex(std::move(rest), std::move(faces));
}

std::size_t SheddingTree::size() const {
  return 1 + (deletion ? deletion->size() : 0) + (link ? link->size() : 0);
}

VertexDecomposability is_vertex_decomposable(const SimplicialComplex& c, std::size_t vertex_cap) {
  check_cap(c.vertices.size(), vertex_cap, "vertex decomposability");
  Indexed idx(c.vertices, "vertex decomposability");
  auto facets = facet_masks(c, idx);
  ComplexDecomposability solver(c.vertices.size());
  if (!solver.decide(facets)) return {false, nullptr};
  return {true, solver.witness(facets, c.vertices)};
}

GraphVertexDecomposability is_vertex_decomposable_graph(const Graph& g, std::size_t vertex_cap) {
  check_cap(g.num_vertices(), vertex_cap, "vertex decomposability");
  GraphDecomposability solver(g);
  const Mask all = full_mask(g.num_vertices());
  if (!solver.decide(all)) return {false, nullptr};
  return {true, solver.witness(all)};
}

ShellingCheck verify_shelling(const SimplicialComplex& c, std::span<const VertexSet> order) {
  Indexed idx(c.vertices, "shelling check");
  std::vector<Mask> listed;
  for (const auto& f : order) {
    VertexSet sorted = f;
    std::sort(sorted.begin(), sorted.end(), LabelLess{});
    listed.push_back(idx.mask(sorted));
  }
  auto expected = facet_masks(c, idx);
  auto a = listed;
  std::sort(a.begin(), a.end());
  std::sort(expected.begin(), expected.end());
  if (a != expected) throw Error(Errc::not_a_permutation, "order is not a permutation of the facets");

  for (std::size_t i = 1; i < listed.size(); ++i) {
    const Mask current = listed[i];
    const std::size_t want = popcount(current) - 1;
    std::vector<Mask> codim_one;
    std::vector<Mask> smaller;
    for (std::size_t j = 0; j < i; ++j) {
      Mask meet = listed[j] & current;
      (popcount(meet) == want ? codim_one : smaller).push_back(meet);
    }
    for (Mask s : smaller)
      if (std::none_of(codim_one.begin(), codim_one.end(), [&](Mask t) { return subset_of(s, t); }))
        return {false, i + 1};
  }
  return {true, std::nullopt};
}

SignVector SignVector::parse(std::string_view text) {
  SignVector out;
  for (char ch : text) {
    if (ch != '+' && ch != '-') throw Error(Errc::parse, "sign vectors use only '+' and '-'");
    out.plus.push_back(ch == '+');
  }
  return out;
}

std::size_t SignVector::plus_count() const {
  return static_cast<std::size_t>(std::count(plus.begin(), plus.end(), true));
}

std::string SignVector::to_string() const {
  std::string out;
  for (bool p : plus) out += p ? '+' : '-';
  return out;
}

bool sign_vector_less(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size())
    throw Error(Errc::length_mismatch, "sign vectors of lengths " + std::to_string(a.size()) + " and " +
                                           std::to_string(b.size()) + " are not comparable");
  const std::size_t pa = a.plus_count();
  const std::size_t pb = b.plus_count();
  if (pa != pb) return pa < pb;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.plus[k] != b.plus[k]) return a.plus[k];
  return false;
}

bool subset_less(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::vector<std::size_t> sa(a.begin(), a.end());
  std::vector<std::size_t> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa.size() != sb.size()) return sb.size() < sa.size();
  std::vector<std::size_t> diff;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
  if (diff.empty()) return false;
  return std::binary_search(sb.begin(), sb.end(), diff.front());
}

namespace {

std::vector<SignVector> signs_descending(std::size_t length) {
  std::vector<SignVector> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
    SignVector v;
    for (std::size_t k = 0; k < length; ++k) v.plus.push_back(((code >> k) & 1) != 0);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const SignVector& a, const SignVector& b) { return sign_vector_less(b, a); });
  return out;
}

std::vector<std::vector<std::size_t>> subsets_descending(std::size_t ground, bool include_empty) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t code = include_empty ? 0 : 1; code < (std::uint64_t{1} << ground); ++code) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < ground; ++k)
      if ((code >> k) & 1) s.push_back(k + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return subset_less(b, a); });
  return out;
}

}  // namespace

ShellingOrder cw_shelling(const CwDecomposition& dec, std::size_t facet_cap) {
  validate(dec);
  if (!dec.has_complete_support())
    throw Error(Errc::not_complete_bipartite_support,
                "support has " + std::to_string(dec.support_edges.size()) + " edges, K_{" + std::to_string(dec.n()) +
                    "," + std::to_string(dec.m()) + "} has " + std::to_string(dec.n() * dec.m()));

  std::vector<std::size_t> tri_right;  // the triangle-bearing right vertices, in order
  for (std::size_t j = 0; j < dec.m(); ++j)
    if (!dec.triangles[j].empty()) tri_right.push_back(j);
  const std::size_t m_prime = tri_right.size();
  const std::size_t t = dec.t();

  if (t >= 32 || dec.n() >= 32 || m_prime >= 32)
    throw Error(Errc::size_guard, "shelling: too many facets to list");
  std::uint64_t total = (((std::uint64_t{1} << dec.n()) - 1) << t);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m_prime); ++code) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < m_prime; ++k)
      if (!((code >> k) & 1)) s += dec.triangles[tri_right[k]].size();
    total += std::uint64_t{1} << s;
  }
  if (total > facet_cap)
    throw Error(Errc::size_guard, "shelling: " + std::to_string(total) + " facets exceed the cap of " +
                                      std::to_string(facet_cap));

  // Pendant-triangle vertices of the given right positions (1-based in tri_right), in order.
  auto triangle_pairs = [&](const std::vector<std::size_t>& positions) {
    std::vector<const LabelPair*> out;
    for (std::size_t p : positions)
      for (const auto& pair : dec.triangles[tri_right[p - 1]]) out.push_back(&pair);
    return out;
  };
  auto finish = [](VertexSet facet) {
    std::sort(facet.begin(), facet.end(), LabelLess{});
    return facet;
  };

  ShellingOrder order;
  VertexSet f_base;
  for (std::size_t j = 0; j < dec.m(); ++j)
    if (dec.triangles[j].empty()) f_base.push_back(dec.right[j]);
  for (const auto& zs : dec.leaves) f_base.insert(f_base.end(), zs.begin(), zs.end());

  for (const auto& index_set : subsets_descending(m_prime, true)) {
    std::vector<std::size_t> complement;
    for (std::size_t p = 1; p <= m_prime; ++p)
      if (!std::binary_search(index_set.begin(), index_set.end(), p)) complement.push_back(p);
    auto pairs = triangle_pairs(complement);
    for (const auto& sign : signs_descending(pairs.size())) {
      VertexSet facet = f_base;
      for (std::size_t p : index_set) facet.push_back(dec.right[tri_right[p - 1]]);
      for (std::size_t k = 0; k < pairs.size(); ++k) facet.push_back(sign.plus[k] ? pairs[k]->first : pairs[k]->second);
      order.facets.push_back(finish(std::move(facet)));
      order.provenance.push_back({'F', index_set, sign});
    }
  }

  std::vector<std::size_t> all_positions(m_prime);
  std::iota(all_positions.begin(), all_positions.end(), 1);
  auto all_pairs = triangle_pairs(all_positions);
  for (const auto& index_set : subsets_descending(dec.n(), false)) {
    for (const auto& sign : signs_descending(t)) {
      VertexSet facet;
      for (std::size_t i = 1; i <= dec.n(); ++i) {
        if (std::binary_search(index_set.begin(), index_set.end(), i))
          facet.push_back(dec.left[i - 1]);
        else
          facet.insert(facet.end(), dec.leaves[i - 1].begin(), dec.leaves[i - 1].end());
      }
      for (std::size_t k = 0; k < t; ++k) facet.push_back(sign.plus[k] ? all_pairs[k]->first : all_pairs[k]->second);
      order.facets.push_back(finish(std::move(facet)));
      order.provenance.push_back({'G', index_set, sign});
    }
  }
  return order;
}

}  // namespace cwg
