#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cwg/error.hpp"
#include "cwg/invariants.hpp"
#include "cwg/matchings.hpp"
#include "cwg/oracle.hpp"
#include "support.hpp"

using namespace cwg;
using testing::graph;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::parse;
}

CwDecomposition g5_dec() { return make_cw_decomposition(1, 1, {{0, 0}}, {1}, {1}); }
CwDecomposition p5_dec() { return make_cw_decomposition(2, 1, {{0, 0}, {1, 0}}, {1, 1}, {0}); }
CwDecomposition cm8_dec() { return make_cw_decomposition(1, 2, {{0, 0}, {0, 1}}, {1}, {1, 1}); }
CwDecomposition two_leaves_dec() { return make_cw_decomposition(1, 1, {{0, 0}}, {2}, {1}); }

std::vector<std::size_t> sizes(const std::vector<VertexSet>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(s.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal vertex covers straight from the definition.
std::vector<VertexSet> brute_covers(const Graph& g) {
  std::vector<VertexSet> out;
  const std::size_t n = g.num_vertices();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    VertexSet c;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) c.push_back(g.label(v));
    if (is_minimal_vertex_cover(g, c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LabelLess{});
  });
  return out;
}

bool independent_dominating(const Graph& g, const VertexSet& a) {
  std::vector<bool> in(g.num_vertices(), false);
  for (const auto& v : a) in[g.index_of(v)] = true;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    const auto& nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](VertexId u) { return in[u]; })) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("minimal vertex covers") {
  CHECK(minimal_vertex_covers(graph("a-b")) == std::vector<VertexSet>{{"a"}, {"b"}});
  CHECK(sizes(minimal_vertex_covers(testing::g5())) == std::vector<std::size_t>{3, 3, 3, 3, 3});
  CHECK(sizes(minimal_vertex_covers(testing::p5())) == std::vector<std::size_t>{2, 3, 3, 3});
  CHECK(code_of([] { minimal_vertex_covers(testing::complete(6), 5); }) == Errc::size_guard);

  VertexSet not_minimal{"a", "b"};
  CHECK_FALSE(is_minimal_vertex_cover(graph("a-b"), not_minimal));
  VertexSet not_cover{"a"};
  CHECK_FALSE(is_minimal_vertex_cover(graph("a-b b-c c-d"), not_cover));
}

TEST_CASE("unmixedness") {
  CHECK(is_unmixed(testing::g5()));
  CHECK_FALSE(is_unmixed(testing::p5()));
  CHECK_FALSE(is_unmixed(build_cw(two_leaves_dec())));
}

TEST_CASE("cover cardinalities of the three witness covers") {
  CHECK(cw_cover_cardinalities(g5_dec()).sizes == std::array<std::size_t, 3>{3, 3, 3});
  CHECK(cw_cover_cardinalities(two_leaves_dec()).sizes == std::array<std::size_t, 3>{3, 4, 3});
  CHECK(cw_cover_cardinalities(p5_dec()).sizes == std::array<std::size_t, 3>{2, 3, 2});

  auto w = cw_cover_cardinalities(g5_dec()).witnesses;
  CHECK(w[0] == VertexSet{"w1_1+", "w1_1-", "x1"});
  CHECK(w[1] == VertexSet{"w1_1+", "y1", "z1_1"});
  CHECK(w[2] == VertexSet{"w1_1+", "x1", "y1"});

  auto bad = g5_dec();
  bad.leaves[0].clear();
  CHECK(code_of([&] { cw_cover_cardinalities(bad); }) == Errc::invalid_decomposition);
}

TEST_CASE("Cohen–Macaulay test, G' and type") {
  CHECK(is_cm_cw(g5_dec()));
  CHECK_FALSE(is_cm_cw(p5_dec()));
  CHECK(is_cm_cw(cm8_dec()));

  CHECK(g_prime(g5_dec()) == graph("x1-y1 y1-w1_1+"));
  CHECK(g_prime(cm8_dec()) == graph("x1-y1 x1-y2 y1-w1_1+ y2-w2_1+"));
  CHECK(code_of([] { g_prime(p5_dec()); }) == Errc::not_cohen_macaulay);

  auto g5_type = cm_type_cw(g5_dec());
  CHECK(g5_type.value == 2);
  CHECK(g5_type.enumerated);
  CHECK(oracle::oracle_max_independent_sets(g_prime(g5_dec())) == std::vector<VertexSet>{{"w1_1+", "x1"}, {"y1"}});

  CHECK(cm_type_cw(cm8_dec()).value == 4);
  CHECK(oracle::oracle_max_independent_sets(g_prime(cm8_dec())) ==
        std::vector<VertexSet>{{"w1_1+", "w2_1+", "x1"}, {"w1_1+", "y2"}, {"w2_1+", "y1"}, {"y1", "y2"}});

  auto m3 = make_cw_decomposition(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}, {1, 1}, {1, 1, 1});
  CHECK(cm_type_cw(m3).value == 8);
  auto unchecked = cm_type_cw(m3, 4);
  CHECK(unchecked.value == 8);
  CHECK_FALSE(unchecked.enumerated);
  CHECK(code_of([] { cm_type_cw(p5_dec()); }) == Errc::not_cohen_macaulay);

  CHECK_FALSE(is_gorenstein_cw(g5_dec()));
  CHECK_FALSE(is_gorenstein_cw(p5_dec()));
  CHECK_FALSE(is_gorenstein_cw(m3));
}

TEST_CASE("independence domination number") {
  auto edge = independence_domination_number(graph("a-b"));
  CHECK(edge.value == 1);

  auto g5 = independence_domination_number(testing::g5());
  CHECK(g5.value == 2);
  CHECK(g5.witness == VertexSet{"w1_1+", "x1"});
  CHECK(independent_dominating(testing::g5(), {"y1", "z1_1"}));

  auto p5 = independence_domination_number(testing::p5());
  CHECK(p5.value == 2);
  CHECK(independent_dominating(testing::p5(), p5.witness));
  CHECK(independent_dominating(testing::p5(), {"b", "d"}));
}

TEST_CASE("projective dimension and regularity") {
  CHECK(projective_dimension_cw(testing::g5()) == 3);
  CHECK(projective_dimension_cw(testing::p5()) == 3);
  CHECK(projective_dimension_cw(testing::cm8()) == 5);
  CHECK(code_of([] { projective_dimension_cw(testing::petersen()); }) == Errc::not_cameron_walker);

  CHECK(regularity_cw(testing::g5()) == 2);
  CHECK(regularity_cw(testing::star_triangle7()) == 3);
  CHECK(regularity_cw(graph("c-l1 c-l2")) == 1);
  CHECK(code_of([] { regularity_cw(testing::petersen()); }) == Errc::not_in_family);
}

TEST_CASE("full reports") {
  auto g5 = full_report(testing::g5());
  CHECK(g5.im == 2u);
  CHECK(g5.m == 2u);
  CHECK(g5.classification.tag == GraphClass::cameron_walker);
  CHECK(g5.unmixed == true);
  CHECK(g5.cm == true);
  CHECK(g5.cm_type == 2u);
  CHECK(g5.gorenstein == false);
  CHECK(g5.vertex_decomposable == true);
  CHECK(g5.sequentially_cm == true);
  CHECK(g5.i_g == 2u);
  CHECK(g5.pd == 3u);
  CHECK(g5.reg == 2u);
  CHECK_FALSE(g5.partial);

  auto p5 = full_report(testing::p5());
  CHECK(p5.im == 2u);
  CHECK(p5.m == 2u);
  CHECK(p5.classification.tag == GraphClass::cameron_walker);
  CHECK(p5.unmixed == false);
  CHECK(p5.cm == false);
  CHECK_FALSE(p5.cm_type);
  CHECK(p5.reasons.contains("cm_type"));
  CHECK(p5.vertex_decomposable == true);
  CHECK(p5.i_g == 2u);
  CHECK(p5.pd == 3u);
  CHECK(p5.reg == 2u);

  auto k4 = full_report(testing::complete(4));
  CHECK(k4.im == 1u);
  CHECK(k4.m == 2u);
  CHECK(k4.classification.tag == GraphClass::other);
  CHECK(k4.classification.reason == "im != m");
  CHECK_FALSE(k4.reg);
  CHECK(k4.reasons.contains("reg"));
  CHECK_FALSE(k4.cm);
  CHECK_FALSE(k4.pd);

  auto c4 = full_report(graph("a-b b-c c-d d-a"));
  CHECK(c4.vertex_decomposable == false);
  CHECK_FALSE(c4.sequentially_cm);

  ReportOptions tight;
  tight.enumeration_vertex_cap = 4;
  tight.decomposability_vertex_cap = 4;
  auto partial = full_report(testing::g5(), tight);
  CHECK(partial.partial);
  CHECK(partial.im == 2u);
  CHECK_FALSE(partial.unmixed);
  CHECK_FALSE(partial.vertex_decomposable);
  CHECK(partial.reasons.contains("unmixed"));
}

TEST_CASE("property: covers match the definition and the oracle") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 150; ++round) {
    auto g = testing::random_graph(rng, 1 + testing::below(rng, 9), 0.3);
    auto covers = minimal_vertex_covers(g);
    CHECK(covers == brute_covers(g));
    CHECK(covers.size() == oracle::oracle_max_independent_sets(g).size());
    CHECK(is_unmixed(g) == is_pure(independence_complex(g)));
    auto idn = independence_domination_number(g);
    CHECK(independent_dominating(g, idn.witness));
    for (const auto& mis : oracle::oracle_max_independent_sets(g)) CHECK(mis.size() >= idn.value);
  }
}

TEST_CASE("property: Cameron–Walker invariants on random decompositions") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 150; ++round) {
    auto dec = random_cw(testing::random_params(rng));
    auto g = build_cw(dec);
    if (g.num_vertices() > 16) continue;
    const bool cm = is_cm_cw(dec);
    CHECK(cm == is_unmixed(g));
    CHECK(cm == is_pure(independence_complex(g)));

    auto cov = cw_cover_cardinalities(dec);
    for (const auto& w : cov.witnesses) CHECK(is_minimal_vertex_cover(g, w));

    auto vd = is_vertex_decomposable_graph(g);
    CHECK(vd.decomposable);
    auto pd = projective_dimension_cw(g);
    CHECK(pd == g.num_vertices() - independence_domination_number(g).value);
    auto stats = matching_stats(g);
    CHECK(regularity_cw(g) == stats.m);
    CHECK(stats.im == stats.m);
    CHECK_FALSE(is_gorenstein_cw(dec));
    if (cm) {
      CHECK(independence_domination_number(g).value == dec.n() + dec.m());
      CHECK(pd == dec.n() + 2 * dec.m());
      auto type = cm_type_cw(dec);
      CHECK(type.enumerated);
      CHECK(type.value >= 2);
    }
  }
}

TEST_CASE("property: clique attachments and clique-partition whiskers are unmixed and vertex decomposable") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 60; ++round) {
    auto base = testing::random_graph(rng, 1 + testing::below(rng, 6), 0.4);
    std::vector<std::size_t> k(base.num_vertices());
    for (auto& x : k) x = 2 + testing::below(rng, 2);
    auto attached = attach_cliques({base, k});
    CHECK(is_unmixed(attached));
    CHECK(is_vertex_decomposable_graph(attached).decomposable);

    // Greedy random clique partition.
    std::vector<VertexId> order(base.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<VertexSet> parts;
    std::vector<std::vector<VertexId>> ids;
    for (VertexId v : order) {
      bool placed = false;
      for (std::size_t p = 0; p < parts.size() && !placed; ++p) {
        if (rng() % 2) continue;
        if (std::all_of(ids[p].begin(), ids[p].end(), [&](VertexId u) { return base.adjacent(u, v); })) {
          ids[p].push_back(v);
          parts[p].push_back(base.label(v));
          placed = true;
        }
      }
      if (!placed) {
        ids.push_back({v});
        parts.push_back({base.label(v)});
      }
    }
    for (auto& p : parts) std::sort(p.begin(), p.end(), LabelLess{});
    auto whiskered = whisker_partition({base, parts});
    CHECK(is_unmixed(whiskered));
    CHECK(is_vertex_decomposable_graph(whiskered).decomposable);
  }
}
