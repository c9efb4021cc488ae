#include "cwg/io.hpp"

#include <algorithm>
#include <sstream>

#include "cwg/error.hpp"

namespace cwg::io {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] void bad_json(const std::string& what) { throw Error(Errc::parse, "json: " + what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_json(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) bad_json(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) bad_json(std::string(what) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

LabelPair label_pair(const Json& j, const char* what) {
  auto items = string_list(j, what);
  if (items.size() != 2) bad_json(std::string(what) + " entries must be pairs");
  return {items[0], items[1]};
}

std::size_t count_of(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad_json(std::string(what) + " counts must be non-negative integers");
  return j.get<std::size_t>();
}

std::size_t position(const std::vector<std::string>& side, const std::string& v, const char* what) {
  auto it = std::find(side.begin(), side.end(), v);
  if (it == side.end()) bad_json(std::string(what) + " names unknown vertex '" + v + "'");
  return static_cast<std::size_t>(it - side.begin());
}

Json pairs_json(const std::vector<LabelPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

template <typename T>
void put(Json& out, const InvariantReport& r, const char* field, const std::optional<T>& value) {
  if (value) {
    out[field] = *value;
    return;
  }
  out[field] = nullptr;
  auto it = r.reasons.find(field);
  out[std::string(field) + "_reason"] = it == r.reasons.end() ? "not computed" : it->second;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<LabelPair> edges;
  std::vector<std::string> isolated;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    std::istringstream words(strip_comment(line));
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (tokens.size() == 2 && tokens[0] == "vertex")
      isolated.push_back(tokens[1]);
    else if (tokens.size() == 2)
      edges.emplace_back(tokens[0], tokens[1]);
    else
      throw Error(Errc::parse, "line " + std::to_string(number) + ": expected \"u v\" or \"vertex u\", got \"" +
                                   line + "\"");
  }
  return Graph::from_edge_list(edges, isolated);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  std::vector<bool> touched(g.num_vertices(), false);
  for (const Edge& e : g.edges()) touched[e.u] = touched[e.v] = true;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!touched[v]) out += "vertex " + g.label(v) + "\n";
  for (const auto& [a, b] : g.edge_labels()) out += a + " " + b + "\n";
  return out;
}

Graph parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_json(e.what());
  }
  std::vector<LabelPair> edges;
  const Json& list = member(j, "edges");
  if (!list.is_array()) bad_json("\"edges\" must be an array");
  for (const auto& e : list) edges.push_back(label_pair(e, "\"edges\""));
  std::vector<std::string> vertices;
  if (j.contains("vertices")) vertices = string_list(j.at("vertices"), "\"vertices\"");
  return Graph::from_edge_list(edges, vertices);
}

Json to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.labels();
  out["edges"] = pairs_json(g.edge_labels());
  return out;
}

Json to_json(const CwDecomposition& dec) {
  Json out;
  out["left"] = dec.left;
  out["right"] = dec.right;
  Json support = Json::array();
  for (const auto& [i, j] : dec.support_edges) support.push_back({dec.left[i], dec.right[j]});
  out["support_edges"] = std::move(support);
  Json leaves = Json::object();
  Json leaf_vertices = Json::object();
  for (std::size_t i = 0; i < dec.n(); ++i) {
    leaves[dec.left[i]] = dec.leaves[i].size();
    leaf_vertices[dec.left[i]] = dec.leaves[i];
  }
  Json triangles = Json::object();
  Json triangle_vertices = Json::object();
  for (std::size_t j = 0; j < dec.m(); ++j) {
    triangles[dec.right[j]] = dec.triangles[j].size();
    triangle_vertices[dec.right[j]] = pairs_json(dec.triangles[j]);
  }
  out["leaves"] = std::move(leaves);
  out["triangles"] = std::move(triangles);
  out["leaf_vertices"] = std::move(leaf_vertices);
  out["triangle_vertices"] = std::move(triangle_vertices);
  return out;
}

CwDecomposition decomposition_from_json(const Json& j) {
  CwDecomposition dec;
  dec.left = string_list(member(j, "left"), "\"left\"");
  dec.right = string_list(member(j, "right"), "\"right\"");
  const Json& support = member(j, "support_edges");
  if (!support.is_array()) bad_json("\"support_edges\" must be an array");
  for (const auto& e : support) {
    auto [a, b] = label_pair(e, "\"support_edges\"");
    dec.support_edges.emplace_back(position(dec.left, a, "\"support_edges\""),
                                   position(dec.right, b, "\"support_edges\""));
  }
  std::sort(dec.support_edges.begin(), dec.support_edges.end());

  dec.leaves.resize(dec.n());
  dec.triangles.resize(dec.m());
  const Json& leaves = member(j, "leaves");
  const Json& triangles = member(j, "triangles");
  if (!leaves.is_object() || !triangles.is_object()) bad_json("\"leaves\" and \"triangles\" must be objects");
  for (const auto& [x, count] : leaves.items()) {
    std::size_t i = position(dec.left, x, "\"leaves\"");
    for (std::size_t l = 1; l <= count_of(count, "\"leaves\""); ++l)
      dec.leaves[i].push_back("z" + std::to_string(i + 1) + "_" + std::to_string(l));
  }
  for (const auto& [y, count] : triangles.items()) {
    std::size_t k = position(dec.right, y, "\"triangles\"");
    for (std::size_t l = 1; l <= count_of(count, "\"triangles\""); ++l) {
      std::string stem = "w" + std::to_string(k + 1) + "_" + std::to_string(l);
      dec.triangles[k].emplace_back(stem + "+", stem + "-");
    }
  }

  if (j.contains("leaf_vertices")) {
    for (const auto& [x, labels] : j.at("leaf_vertices").items()) {
      std::size_t i = position(dec.left, x, "\"leaf_vertices\"");
      dec.leaves[i] = string_list(labels, "\"leaf_vertices\"");
    }
  }
  if (j.contains("triangle_vertices")) {
    for (const auto& [y, pairs] : j.at("triangle_vertices").items()) {
      std::size_t k = position(dec.right, y, "\"triangle_vertices\"");
      if (!pairs.is_array()) bad_json("\"triangle_vertices\" entries must be arrays");
      dec.triangles[k].clear();
      for (const auto& p : pairs) dec.triangles[k].push_back(label_pair(p, "\"triangle_vertices\""));
    }
  }
  for (std::size_t i = 0; i < dec.n(); ++i)
    if (leaves.contains(dec.left[i]) && leaves.at(dec.left[i]).get<std::size_t>() != dec.leaves[i].size())
      bad_json("leaf count of " + dec.left[i] + " disagrees with \"leaf_vertices\"");
  for (std::size_t k = 0; k < dec.m(); ++k)
    if (triangles.contains(dec.right[k]) &&
        triangles.at(dec.right[k]).get<std::size_t>() != dec.triangles[k].size())
      bad_json("triangle count of " + dec.right[k] + " disagrees with \"triangle_vertices\"");
  validate(dec);
  return dec;
}

Json to_json(const Classification& c) {
  Json out;
  out["tag"] = std::string(to_string(c.tag));
  if (c.decomposition) out["decomposition"] = to_json(*c.decomposition);
  if (c.tag == GraphClass::other) {
    out["reason"] = c.reason;
    out["detail"] = c.detail;
  }
  return out;
}

Json to_json(const SimplicialComplex& c) {
  Json out;
  out["vertices"] = c.vertices;
  out["facets"] = c.facets;
  return out;
}

Json to_json(const ShellingOrder& order) {
  Json provenance = Json::array();
  for (const auto& p : order.provenance) {
    Json entry;
    entry["family"] = std::string(1, p.family);
    entry[p.family == 'F' ? "I" : "J"] = p.index_set;
    entry["sign"] = p.sign.to_string();
    provenance.push_back(std::move(entry));
  }
  Json out;
  out["facets"] = order.facets;
  out["provenance"] = std::move(provenance);
  return out;
}

Json to_json(const InvariantReport& r) {
  Json out;
  put(out, r, "im", r.im);
  put(out, r, "m", r.m);
  out["classification"] = to_json(r.classification);
  put(out, r, "unmixed", r.unmixed);
  put(out, r, "cover_cardinalities", r.cover_cardinalities);
  put(out, r, "cm", r.cm);
  put(out, r, "cm_type", r.cm_type);
  put(out, r, "gorenstein", r.gorenstein);
  put(out, r, "vertex_decomposable", r.vertex_decomposable);
  put(out, r, "sequentially_cm", r.sequentially_cm);
  put(out, r, "i_g", r.i_g);
  put(out, r, "pd", r.pd);
  put(out, r, "reg", r.reg);
  Json certificates;
  certificates["matching"] = pairs_json(r.matching);
  certificates["induced_matching"] = pairs_json(r.induced_matching);
  certificates["independent_dominating_set"] = r.independent_dominating_set;
  out["certificates"] = std::move(certificates);
  out["partial"] = r.partial;
  return out;
}

}  // namespace cwg::io
