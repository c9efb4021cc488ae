#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cwg/complexes.hpp"
#include "cwg/cw_structure.hpp"
#include "cwg/graph.hpp"

namespace cwg {

/// Complements of the maximal independent sets, sorted canonically.
/// Throws Error(size_guard).
std::vector<VertexSet> minimal_vertex_covers(const Graph& g, std::size_t vertex_cap = kEnumerationVertexCap);

/// Throws Error(unknown_vertex).
bool is_minimal_vertex_cover(const Graph& g, std::span<const std::string> cover);

bool is_unmixed(const Graph& g, std::size_t vertex_cap = kEnumerationVertexCap);

/// The three covers used to decide unmixedness of a Cameron–Walker graph:
/// (i) all left vertices and both degree-2 vertices of every triangle,
/// (ii) all right vertices, all leaves and one vertex of every triangle,
/// (iii) the left vertices, the triangle-bearing right vertices and one vertex
/// of every triangle.
struct CoverCardinalities {
  std::array<std::size_t, 3> sizes{};  // n + 2t, m + f + t, n + m' + t
  std::array<VertexSet, 3> witnesses;
};

/// Throws Error(invalid_decomposition); a witness that is not a minimal cover
/// of build_cw(dec) is a logic_error.
CoverCardinalities cw_cover_cardinalities(const CwDecomposition& dec);

/// One leaf on every left vertex and one triangle on every right vertex.
bool is_cm_cw(const CwDecomposition& dec);

/// Induced subgraph of build_cw(dec) on the left and right vertices plus the
/// first vertex of the first triangle at each right vertex.
/// Throws Error(not_cohen_macaulay).
Graph g_prime(const CwDecomposition& dec);

struct CmType {
  std::uint64_t value = 0;  // 2^m
  /// Set when the maximal independent sets of G' were counted and matched;
  /// clear when G' exceeded the enumeration cap.
  bool enumerated = false;
};

/// Throws Error(not_cohen_macaulay).
CmType cm_type_cw(const CwDecomposition& dec, std::size_t vertex_cap = kEnumerationVertexCap);

bool is_gorenstein_cw(const CwDecomposition& dec);

struct IndependenceDomination {
  std::size_t value = 0;
  VertexSet witness;  // first minimum-size facet in canonical order
};

IndependenceDomination independence_domination_number(const Graph& g,
                                                       std::size_t vertex_cap = kEnumerationVertexCap);

/// |V| - i(G). Throws Error(not_cameron_walker) or Error(size_guard).
std::size_t projective_dimension_cw(const Graph& g, std::size_t vertex_cap = kEnumerationVertexCap);

/// m(G) for stars, star triangles and Cameron–Walker graphs.
/// Throws Error(not_in_family) or Error(size_guard).
std::size_t regularity_cw(const Graph& g, const ClassifyOptions& options = {});

struct ReportOptions {
  std::size_t matching_vertex_cap = kMatchingVertexCap;
  std::size_t induced_matching_edge_cap = kInducedMatchingEdgeCap;
  std::size_t enumeration_vertex_cap = kEnumerationVertexCap;
  std::size_t decomposability_vertex_cap = kDecomposabilityVertexCap;
};

struct InvariantReport {
  std::optional<std::size_t> im;
  std::optional<std::size_t> m;
  Classification classification;
  std::optional<bool> unmixed;
  std::optional<std::vector<std::size_t>> cover_cardinalities;
  std::optional<bool> cm;
  std::optional<std::uint64_t> cm_type;
  std::optional<bool> gorenstein;
  std::optional<bool> vertex_decomposable;
  std::optional<bool> sequentially_cm;  // true or unknown
  std::optional<std::size_t> i_g;
  std::optional<std::size_t> pd;
  std::optional<std::size_t> reg;
  // Certificates backing the numbers above, empty when not computed.
  std::vector<LabelPair> matching;
  std::vector<LabelPair> induced_matching;
  VertexSet independent_dominating_set;
  /// Why a field is missing, keyed by field name.
  std::map<std::string, std::string> reasons;
  /// Some field was dropped because a size guard fired.
  bool partial = false;
};

InvariantReport full_report(const Graph& g, const ReportOptions& options = {});

}  // namespace cwg
