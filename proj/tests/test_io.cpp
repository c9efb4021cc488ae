#include "doctest.h"

#include <random>

#include "cwg/error.hpp"
#include "cwg/io.hpp"
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

}  // namespace

TEST_CASE("edge-list parsing") {
  auto g = io::parse_edge_list("# comment\n\nx1 y1   # trailing\nvertex q\n  y1\tz\n");
  CHECK(g == graph("x1-y1 y1-z q"));

  try {
    io::parse_edge_list("a b\nb c\nthis line is malformed\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { io::parse_edge_list("a a\n"); }) == Errc::loop_edge);
  CHECK(code_of([] { io::parse_edge_list("# nothing\n"); }) == Errc::empty_graph);
}

TEST_CASE("edge-list round trip") {
  auto g = graph("a-b c x10-x2");
  CHECK(io::parse_edge_list(io::write_edge_list(g)) == g);
  CHECK(io::write_edge_list(g) == "vertex c\na b\nx2 x10\n");
}

TEST_CASE("graph JSON") {
  auto g = io::parse_graph_json(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"]]})");
  CHECK(g == graph("a-b c"));
  CHECK(io::parse_graph_json(io::to_json(g).dump()) == g);
  CHECK(io::parse_graph_json(R"({"edges": [["a", "b"]]})") == graph("a-b"));
  CHECK(code_of([] { io::parse_graph_json("{"); }) == Errc::parse);
  CHECK(code_of([] { io::parse_graph_json(R"({"edges": [["a"]]})"); }) == Errc::parse);
  CHECK(code_of([] { io::parse_graph_json(R"({"vertices": []})"); }) == Errc::parse);
}

TEST_CASE("decomposition JSON") {
  auto dec = make_cw_decomposition(1, 2, {{0, 0}, {0, 1}}, {1}, {1, 0});
  auto j = io::to_json(dec);
  CHECK(j["left"] == io::Json::array({"x1"}));
  CHECK(j["leaves"]["x1"] == 1);
  CHECK(j["triangles"]["y1"] == 1);
  CHECK(j["triangles"]["y2"] == 0);
  CHECK(j["support_edges"][1] == io::Json::array({"x1", "y2"}));
  CHECK(io::decomposition_from_json(j) == dec);

  // Counts alone regenerate the generated labels.
  j.erase("leaf_vertices");
  j.erase("triangle_vertices");
  CHECK(io::decomposition_from_json(j) == dec);

  j["leaves"]["x1"] = 0;
  CHECK(code_of([&] { io::decomposition_from_json(j); }) == Errc::invalid_decomposition);
}

TEST_CASE("property: decomposition JSON round trip") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 100; ++round) {
    auto dec = random_cw(testing::random_params(rng));
    auto text = io::to_json(dec).dump();
    CHECK(io::decomposition_from_json(io::Json::parse(text)) == dec);
    auto g = build_cw(dec);
    CHECK(io::parse_edge_list(io::write_edge_list(g)) == g);
  }
}

TEST_CASE("shelling and report JSON") {
  auto order = cw_shelling(make_cw_decomposition(1, 1, {{0, 0}}, {1}, {1}));
  auto j = io::to_json(order);
  CHECK(j["facets"].size() == 5);
  CHECK(j["provenance"][0] == io::Json::parse(R"({"family": "F", "I": [], "sign": "+"})"));
  CHECK(j["provenance"][4] == io::Json::parse(R"({"family": "G", "J": [1], "sign": "-"})"));

  auto report = io::to_json(full_report(testing::complete(4)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : report.items()) keys.push_back(k);
  CHECK(keys.front() == "im");
  CHECK(report["reg"].is_null());
  CHECK(report["reg_reason"].is_string());
  CHECK(report["classification"]["tag"] == "Other");
  CHECK(report["classification"]["reason"] == "im != m");
  CHECK(report.dump() == io::to_json(full_report(testing::complete(4))).dump());

  auto g5 = io::to_json(full_report(testing::g5()));
  CHECK(g5["cm_type"] == 2);
  CHECK(g5["cover_cardinalities"] == io::Json::array({3, 3, 3, 3, 3}));
  CHECK(g5["classification"]["decomposition"]["triangles"]["y1"] == 1);
}
