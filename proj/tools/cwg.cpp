// Command-line front end: analyze | classify | shelling | generate | oracle.
// stdout carries JSON (or the text rendering of it), stderr carries messages.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cwg/complexes.hpp"
#include "cwg/cw_structure.hpp"
#include "cwg/error.hpp"
#include "cwg/invariants.hpp"
#include "cwg/io.hpp"
#include "cwg/matchings.hpp"
#include "cwg/oracle.hpp"

namespace {

using cwg::Errc;
using cwg::io::Json;

enum Exit { ok = 0, input = 1, budget = 2, refusal = 3, mismatch = 4 };

struct Config {
  std::string path = "-";
  std::string format;
  std::string output = "json";
  std::optional<std::size_t> max_vertices;
  std::uint64_t seed = 0;
  // generate
  std::string prefix;
  std::size_t n = 2;
  std::size_t m = 2;
  std::size_t max_f = 2;
  std::size_t max_t = 2;
  double density = 0.5;
};

int exit_for(Errc code) {
  switch (code) {
    case Errc::size_guard:
    case Errc::budget_exceeded:
      return budget;
    case Errc::not_cameron_walker:
    case Errc::not_complete_bipartite_support:
    case Errc::not_in_family:
    case Errc::not_cohen_macaulay:
      return refusal;
    default:
      return input;
  }
}

void emit(const Config& cfg, const Json& j) {
  if (cfg.output == "text") {
    for (const auto& [key, value] : j.items())
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Json error_json(const cwg::Error& e) {
  Json j;
  j["error"] = std::string(cwg::errc_name(e.code()));
  j["message"] = e.what();
  return j;
}

cwg::Graph read_graph(const Config& cfg) {
  std::string text;
  if (cfg.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.path);
    if (!in) throw cwg::Error(Errc::parse, "cannot open " + cfg.path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::string format = cfg.format;
  if (format.empty()) format = cfg.path.ends_with(".json") ? "json" : "edgelist";
  return format == "json" ? cwg::io::parse_graph_json(text) : cwg::io::parse_edge_list(text);
}

cwg::ReportOptions report_options(const Config& cfg) {
  cwg::ReportOptions o;
  if (cfg.max_vertices) {
    o.matching_vertex_cap = *cfg.max_vertices;
    o.enumeration_vertex_cap = *cfg.max_vertices;
    o.decomposability_vertex_cap = *cfg.max_vertices;
  }
  return o;
}

int cmd_analyze(const Config& cfg) {
  auto g = read_graph(cfg);
  auto report = cwg::full_report(g, report_options(cfg));
  emit(cfg, cwg::io::to_json(report));
  if (report.partial) {
    std::cerr << "size guard hit; the report is partial\n";
    return budget;
  }
  return ok;
}

int cmd_classify(const Config& cfg) {
  auto g = read_graph(cfg);
  cwg::ClassifyOptions o;
  if (cfg.max_vertices) o.matching_vertex_cap = *cfg.max_vertices;
  emit(cfg, cwg::io::to_json(cwg::classify(g, o)));
  return ok;
}

int cmd_shelling(const Config& cfg) {
  auto g = read_graph(cfg);
  auto dec = cwg::decompose(g);
  auto order = cwg::cw_shelling(dec);
  Json j = cwg::io::to_json(order);
  const std::size_t cap = cfg.max_vertices.value_or(cwg::kEnumerationVertexCap);
  if (g.num_vertices() <= cap) {
    auto complex = cwg::independence_complex(g, cap);
    j["verified"] = cwg::verify_shelling(complex, order.facets).shelling;
  } else {
    j["verified"] = nullptr;
  }
  emit(cfg, j);
  return ok;
}

int cmd_generate(const Config& cfg) {
  if (cfg.prefix.empty()) throw cwg::Error(Errc::invalid_params, "generate needs an output prefix");
  auto dec = cwg::random_cw({cfg.n, cfg.m, cfg.max_f, cfg.max_t, cfg.density, cfg.seed});
  auto g = cwg::build_cw(dec);
  const std::string edges_path = cfg.prefix + ".edges";
  const std::string json_path = cfg.prefix + ".json";
  std::ofstream(edges_path) << cwg::io::write_edge_list(g);
  std::ofstream(json_path) << cwg::io::to_json(dec).dump(2) << "\n";
  Json j;
  j["edges"] = edges_path;
  j["decomposition"] = json_path;
  j["vertices"] = g.num_vertices();
  j["seed"] = cfg.seed;
  emit(cfg, j);
  return ok;
}

class OracleRun {
 public:
  void agree(const std::string& name, bool same, const std::string& detail = "") {
    add(name, same ? "agree" : "mismatch", detail);
    if (!same) failed_ = true;
  }
  void skip(const std::string& name, const std::string& why) { add(name, "skipped", why); }
  bool failed() const { return failed_; }
  Json json() const {
    Json j;
    j["checks"] = checks_;
    j["agree"] = !failed_;
    return j;
  }

 private:
  void add(const std::string& name, const char* status, const std::string& detail) {
    Json c;
    c["check"] = name;
    c["status"] = status;
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
  }

  Json checks_ = Json::array();
  bool failed_ = false;
};

int cmd_oracle(const Config& cfg) {
  auto g = read_graph(cfg);
  cwg::oracle::OracleBudget b;
  if (cfg.max_vertices) b.max_vertices = *cfg.max_vertices;
  OracleRun run;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const cwg::Error& e) {
      if (e.code() != Errc::size_guard && e.code() != Errc::budget_exceeded) throw;
      run.skip(name, e.what());
    }
  };

  guarded("matchings", [&] {
    auto fast = cwg::matching_stats(g);
    auto slow = cwg::oracle::oracle_matchings(g, b);
    run.agree("matchings", fast.m == slow.m && fast.im == slow.im,
              "m " + std::to_string(slow.m) + ", im " + std::to_string(slow.im));
    auto c = cwg::classify(g);
    const bool in_family = c.tag != cwg::GraphClass::other;
    run.agree("classification", in_family == (cwg::oracle::oracle_connected(g) && slow.im == slow.m),
              std::string(cwg::to_string(c.tag)));
  });

  std::optional<cwg::SimplicialComplex> complex;
  guarded("independent_sets", [&] {
    auto slow = cwg::oracle::oracle_max_independent_sets(g, b);
    complex = cwg::independence_complex(g);
    run.agree("independent_sets", complex->facets == slow, std::to_string(slow.size()) + " facets");
  });

  auto c = cwg::classify(g, {.cross_check = false});
  if (c.decomposition && complex) {
    const auto& dec = *c.decomposition;
    run.agree("unmixed", cwg::is_cm_cw(dec) == cwg::is_pure(*complex));
    guarded("vertex_decomposable", [&] {
      auto vd = cwg::is_vertex_decomposable_graph(g).decomposable;
      auto vd_complex = cwg::is_vertex_decomposable(*complex).decomposable;
      run.agree("vertex_decomposable", vd && vd_complex);
    });
    guarded("shelling", [&] {
      if (dec.has_complete_support()) {
        auto order = cwg::cw_shelling(dec);
        std::set<cwg::VertexSet> listed(order.facets.begin(), order.facets.end());
        std::set<cwg::VertexSet> facets(complex->facets.begin(), complex->facets.end());
        run.agree("shelling", listed == facets && order.facets.size() == facets.size() &&
                                  cwg::verify_shelling(*complex, order.facets).shelling);
      } else {
        auto found = cwg::oracle::oracle_shelling_exists(*complex, b);
        run.agree("shelling", found.exists && cwg::verify_shelling(*complex, found.order).shelling);
      }
    });
  }

  emit(cfg, run.json());
  if (run.failed()) {
    std::cerr << "oracle disagreement\n";
    return mismatch;
  }
  return ok;
}

void add_common(CLI::App* sub, Config& cfg, bool with_input = true) {
  if (with_input) sub->add_option("input", cfg.path, "graph file, or - for stdin")->required();
  sub->add_option("--format", cfg.format, "input format")->check(CLI::IsMember({"edgelist", "json"}));
  sub->add_option("--output", cfg.output, "output rendering")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--max-vertices", cfg.max_vertices, "size budget")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cameron–Walker graph toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto* analyze = app.add_subcommand("analyze", "invariant report");
  auto* classify = app.add_subcommand("classify", "star / star triangle / Cameron–Walker / other");
  auto* shelling = app.add_subcommand("shelling", "explicit shelling order");
  auto* generate = app.add_subcommand("generate", "random Cameron–Walker graph");
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  for (auto* sub : {analyze, classify, shelling, oracle}) add_common(sub, cfg);
  add_common(generate, cfg, false);
  generate->add_option("prefix", cfg.prefix, "writes PREFIX.edges and PREFIX.json")->required();
  generate->add_option("--n", cfg.n, "left vertices");
  generate->add_option("--m", cfg.m, "right vertices");
  generate->add_option("--max-f", cfg.max_f, "most leaves per left vertex");
  generate->add_option("--max-t", cfg.max_t, "most triangles per right vertex");
  generate->add_option("--density", cfg.density, "extra support edge probability")->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (shelling->parsed()) return cmd_shelling(cfg);
    if (generate->parsed()) return cmd_generate(cfg);
    return cmd_oracle(cfg);
  } catch (const cwg::Error& e) {
    std::cerr << cwg::errc_name(e.code()) << ": " << e.what() << "\n";
    const int code = exit_for(e.code());
    if (code == refusal) emit(cfg, error_json(e));
    return code;
  } catch (const std::logic_error& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return mismatch;
  }
}
