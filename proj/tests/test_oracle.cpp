#include "doctest.h"

#include "cwg/error.hpp"
#include "cwg/oracle.hpp"
#include "support.hpp"

using namespace cwg;
using namespace cwg::oracle;
using testing::graph;

TEST_CASE("oracle matchings") {
  auto p5 = oracle_matchings(testing::p5());
  CHECK(p5.m == 2);
  CHECK(p5.im == 2);
  auto k4 = oracle_matchings(testing::complete(4));
  CHECK(k4.m == 2);
  CHECK(k4.im == 1);
  auto st = oracle_matchings(testing::star_triangle7());
  CHECK(st.m == 3);
  CHECK(st.im == 3);
  auto petersen = oracle_matchings(testing::petersen());
  CHECK(petersen.m == 5);
  CHECK(petersen.im == 3);

  OracleBudget tight;
  tight.max_edges = 3;
  try {
    oracle_matchings(testing::p5(), tight);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("oracle independent sets") {
  CHECK(oracle_max_independent_sets(graph("a-b")) == std::vector<VertexSet>{{"a"}, {"b"}});
  CHECK(oracle_max_independent_sets(testing::g5()).size() == 5);
  CHECK(oracle_max_independent_sets(graph("a")) == std::vector<VertexSet>{{"a"}});
  OracleBudget tight;
  tight.max_vertices = 4;
  CHECK_THROWS_AS(oracle_max_independent_sets(testing::g5(), tight), Error);
}

TEST_CASE("oracle shelling search") {
  auto c4 = SimplicialComplex::from_faces({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}});
  CHECK_FALSE(oracle_shelling_exists(c4).exists);
  auto one = SimplicialComplex::from_faces({"a"}, {{"a"}});
  auto found = oracle_shelling_exists(one);
  CHECK(found.exists);
  CHECK(found.order == std::vector<VertexSet>{{"a"}});

  std::vector<VertexSet> many;
  std::vector<std::string> names;
  for (int i = 0; i < 13; ++i) {
    names.push_back("v" + std::to_string(i));
    many.push_back({names.back()});
  }
  CHECK_THROWS_AS(oracle_shelling_exists(SimplicialComplex::from_faces(names, many)), Error);
}

TEST_CASE("labeled graph enumeration") {
  CHECK(enumerate_labeled_graphs(1).size() == 1);
  CHECK(enumerate_labeled_graphs(2).size() == 2);
  CHECK(enumerate_labeled_graphs(3).size() == 8);
  CHECK(enumerate_labeled_graphs(5).size() == 1024);
  auto three = enumerate_labeled_graphs(3);
  CHECK(three[0].num_edges() == 0);
  CHECK(three[1] == graph("v1-v2 v3"));
  CHECK(three[7].num_edges() == 3);
  for (const auto& g : three) CHECK(g.num_vertices() == 3);
  CHECK_THROWS_AS(enumerate_labeled_graphs(7), Error);
}

TEST_CASE("oracle connectivity") {
  CHECK(oracle_connected(graph("a")));
  CHECK(oracle_connected(testing::petersen()));
  CHECK_FALSE(oracle_connected(graph("a-b c")));
}
