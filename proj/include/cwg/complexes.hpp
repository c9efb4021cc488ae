#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwg/cw_structure.hpp"
#include "cwg/graph.hpp"

namespace cwg {

inline constexpr std::size_t kEnumerationVertexCap = 26;
inline constexpr std::size_t kDecomposabilityVertexCap = 40;
inline constexpr std::size_t kShellingFacetCap = 1u << 16;

/// Facet-list simplicial complex over a ground set of labels.
struct SimplicialComplex {
  VertexSet vertices;
  std::vector<VertexSet> facets;  // antichain, each sorted, list sorted

  /// Sorts the ground set and the faces and keeps only the maximal faces.
  /// Throws Error(unknown_vertex) for a face vertex outside the ground set.
  static SimplicialComplex from_faces(VertexSet vertices, std::vector<VertexSet> faces);

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Independence complex of g: its facets are the maximal independent sets,
/// found by pivoting Bron–Kerbosch on the complement. Throws Error(size_guard).
SimplicialComplex independence_complex(const Graph& g, std::size_t vertex_cap = kEnumerationVertexCap);

bool is_pure(const SimplicialComplex& c);

/// link_c(v) and c \ v. Both throw Error(unknown_vertex).
SimplicialComplex link(const SimplicialComplex& c, std::string_view v);
SimplicialComplex deletion(const SimplicialComplex& c, std::string_view v);

/// Shedding-vertex witness. A node without children certifies a simplex.
struct SheddingTree {
  std::string vertex;
  std::shared_ptr<const SheddingTree> deletion;
  std::shared_ptr<const SheddingTree> link;

  bool is_simplex() const { return deletion == nullptr; }
  std::size_t size() const;
};

struct VertexDecomposability {
  bool decomposable = false;
  std::shared_ptr<const SheddingTree> witness;  // set iff decomposable
};

/// Exact recursive test with memoization on relabeled facet lists. Shedding
/// vertices are tried in canonical order and the first success is kept.
VertexDecomposability is_vertex_decomposable(const SimplicialComplex& c,
                                             std::size_t vertex_cap = kDecomposabilityVertexCap);

struct GraphSheddingTree {
  enum class Kind { edgeless, components, shedding };
  Kind kind = Kind::edgeless;
  VertexSet vertices;
  std::string vertex;  // shedding vertex, for Kind::shedding
  /// components: one per connected component. shedding: G \ v then G \ N[v].
  std::vector<std::shared_ptr<const GraphSheddingTree>> children;
};

struct GraphVertexDecomposability {
  bool decomposable = false;
  std::shared_ptr<const GraphSheddingTree> witness;
};

/// Graph-level recursion: G is vertex decomposable iff it has no edge, or all
/// of its components are, or some v has G \ v and G \ N[v] vertex decomposable
/// and no independent set of G \ N[v] is maximal in G \ v.
GraphVertexDecomposability is_vertex_decomposable_graph(const Graph& g,
                                                        std::size_t vertex_cap = kDecomposabilityVertexCap);

struct ShellingCheck {
  bool shelling = false;
  /// 1-based position of the first facet whose intersection with the earlier
  /// ones is not pure of codimension one.
  std::optional<std::size_t> failing_position;
};

/// Throws Error(not_a_permutation) unless `order` lists every facet once.
ShellingCheck verify_shelling(const SimplicialComplex& c, std::span<const VertexSet> order);

/// Sequence over {+, -}.
struct SignVector {
  std::vector<bool> plus;

  static SignVector parse(std::string_view text);
  std::size_t size() const { return plus.size(); }
  std::size_t plus_count() const;
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// a < b iff a has fewer plus signs, or the same number and a has '+' where
/// the two first differ. Throws Error(length_mismatch).
bool sign_vector_less(const SignVector& a, const SignVector& b);

/// Order on finite sets of positive integers: larger sets are smaller; equal
/// sizes compare by the first index of the symmetric difference, the set
/// containing it being the larger.
bool subset_less(std::span<const std::size_t> a, std::span<const std::size_t> b);

struct FacetProvenance {
  char family = 'F';  // 'F' for the I-families, 'G' for the J-families
  /// I (1-based positions among the triangle-bearing right vertices, in
  /// decomposition order) or J (1-based left indices).
  std::vector<std::size_t> index_set;
  SignVector sign;

  friend bool operator==(const FacetProvenance&, const FacetProvenance&) = default;
};

struct ShellingOrder {
  std::vector<VertexSet> facets;
  std::vector<FacetProvenance> provenance;
};

/// Explicit shelling of the independence complex of a Cameron–Walker graph
/// whose support is complete bipartite: the F-families in descending subset
/// order starting from F_{} followed by the G-families, each listed by
/// descending sign vector. Throws Error(not_complete_bipartite_support) or
/// Error(size_guard).
ShellingOrder cw_shelling(const CwDecomposition& dec, std::size_t facet_cap = kShellingFacetCap);

}  // namespace cwg
