#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cwg/cw_structure.hpp"
#include "cwg/graph.hpp"

namespace testing {

using cwg::Graph;
using cwg::LabelPair;

// "a-b b-c" style edge list split at the first inner dash; a bare token
// declares an isolated vertex.
inline Graph graph(const std::string& spec) {
  std::vector<LabelPair> edges;
  std::vector<std::string> isolated;
  std::istringstream in(spec);
  for (std::string token; in >> token;) {
    const auto dash = token.find('-', 1);
    if (dash == std::string::npos)
      isolated.push_back(token);
    else
      edges.emplace_back(token.substr(0, dash), token.substr(dash + 1));
  }
  return Graph::from_edge_list(edges, isolated);
}

inline Graph from_pairs(const std::vector<LabelPair>& edges, const std::vector<std::string>& isolated = {}) {
  return Graph::from_edge_list(edges, isolated);
}

inline Graph complete(std::size_t n) {
  std::vector<LabelPair> edges;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
  return Graph::from_edge_list(edges, names);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<LabelPair> edges;
  for (std::size_t i = 1; i <= a; ++i)
    for (std::size_t j = 1; j <= b; ++j) edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  return Graph::from_edge_list(edges);
}

inline Graph petersen() {
  std::vector<LabelPair> edges;
  auto p = [](int i) { return "p" + std::to_string(i); };
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(p(i), p((i + 1) % 5));
    edges.emplace_back(p(i), p(i + 5));
    edges.emplace_back(p(i + 5), p(5 + (i + 2) % 5));
  }
  return Graph::from_edge_list(edges);
}

// Three triangles glued at vertex 1.
inline Graph star_triangle7() { return graph("1-2 1-3 2-3 1-4 1-5 4-5 1-6 1-7 6-7"); }

inline Graph g5() { return graph("x1-y1 x1-z1_1 y1-w1_1+ y1-w1_1- w1_1+-w1_1-"); }

inline Graph p5() { return graph("a-b b-c c-d d-e"); }

inline Graph cm8() {
  return graph("x1-z1_1 x1-y1 x1-y2 y1-w1_1+ y1-w1_1- w1_1+-w1_1- y2-w2_1+ y2-w2_1- w2_1+-w2_1-");
}

// Uniform below `bound` (slightly biased; fine for test generators).
inline std::size_t below(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<LabelPair> edges;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(names[i], names[j]);
  return Graph::from_edge_list(edges, names);
}

inline cwg::RandomCwParams random_params(std::mt19937_64& rng, std::size_t max_side = 3) {
  cwg::RandomCwParams p;
  p.n = 1 + below(rng, max_side);
  p.m = 1 + below(rng, max_side);
  p.max_f = 1 + below(rng, 2);
  p.max_t = below(rng, 3);
  p.edge_density = static_cast<double>(below(rng, 5)) / 4.0;
  p.seed = rng();
  if (p.n == 1 && p.max_t == 0) p.max_t = 1;
  return p;
}

}  // namespace testing
