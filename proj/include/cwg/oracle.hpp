#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cwg/complexes.hpp"
#include "cwg/graph.hpp"

namespace cwg::oracle {

// Brute-force reference answers. Nothing here calls into the modules it is
// used to check; only the Graph and SimplicialComplex containers are shared.

struct OracleBudget {
  std::size_t max_vertices = 20;
  std::size_t max_edges = 20;
  std::size_t max_facets = 12;
};

struct Matchings {
  std::size_t m = 0;
  std::size_t im = 0;
};

/// Maxima over all edge subsets. Throws Error(budget_exceeded).
Matchings oracle_matchings(const Graph& g, const OracleBudget& budget = {});

/// Every vertex subset tested for independence and maximality, in canonical
/// order. Throws Error(budget_exceeded).
std::vector<VertexSet> oracle_max_independent_sets(const Graph& g, const OracleBudget& budget = {});

struct ShellingSearch {
  bool exists = false;
  std::vector<VertexSet> order;  // a shelling when exists
};

/// Backtracking over facet orders. Throws Error(budget_exceeded).
ShellingSearch oracle_shelling_exists(const SimplicialComplex& c, const OracleBudget& budget = {});

/// Connectivity by depth-first search over the edge list.
bool oracle_connected(const Graph& g);

/// All 2^(n choose 2) graphs on v1..vn; graph k contains the i-th pair of
/// {(1,2), (1,3), ..., (n-1,n)} iff bit i of k is set. Throws
/// Error(budget_exceeded) for n > 6 and Error(empty_graph) for n = 0.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_labeled_graphs(std::size_t n);

}  // namespace cwg::oracle
