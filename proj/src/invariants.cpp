#include "cwg/invariants.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

#include "cwg/error.hpp"
#include "cwg/matchings.hpp"

namespace cwg {

namespace {

VertexSet complement(const VertexSet& all, const VertexSet& part) {
  VertexSet out;
  std::set_difference(all.begin(), all.end(), part.begin(), part.end(), std::back_inserter(out), LabelLess{});
  return out;
}

void sort_set(VertexSet& s) { std::sort(s.begin(), s.end(), LabelLess{}); }

bool is_cover(const Graph& g, const std::vector<bool>& in) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LabelLess{});
}

}  // namespace

std::vector<VertexSet> minimal_vertex_covers(const Graph& g, std::size_t vertex_cap) {
  auto complex = independence_complex(g, vertex_cap);
  std::vector<VertexSet> out;
  for (const auto& facet : complex.facets) out.push_back(complement(complex.vertices, facet));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_minimal_vertex_cover(const Graph& g, std::span<const std::string> cover) {
  std::vector<bool> in(g.num_vertices(), false);
  for (const auto& v : cover) in[g.index_of(v)] = true;
  if (!is_cover(g, in)) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) continue;
    in[v] = false;
    const bool still = is_cover(g, in);
    in[v] = true;
    if (still) return false;
  }
  return true;
}

bool is_unmixed(const Graph& g, std::size_t vertex_cap) {
  auto covers = minimal_vertex_covers(g, vertex_cap);
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexSet& c) { return c.size() == covers.front().size(); });
}

CoverCardinalities cw_cover_cardinalities(const CwDecomposition& dec) {
  validate(dec);
  CoverCardinalities out;
  out.sizes = {dec.n() + 2 * dec.t(), dec.m() + dec.f() + dec.t(), dec.n() + dec.m_prime() + dec.t()};

  auto& [leaf_side, right_side, mixed] = out.witnesses;
  leaf_side = dec.left;
  right_side = dec.right;
  mixed = dec.left;
  for (const auto& ls : dec.leaves) right_side.insert(right_side.end(), ls.begin(), ls.end());
  for (std::size_t j = 0; j < dec.m(); ++j) {
    if (!dec.triangles[j].empty()) mixed.push_back(dec.right[j]);
    for (const auto& [a, b] : dec.triangles[j]) {
      leaf_side.push_back(a);
      leaf_side.push_back(b);
      right_side.push_back(a);
      mixed.push_back(a);
    }
  }

  const Graph g = build_cw(dec);
  for (std::size_t k = 0; k < 3; ++k) {
    sort_set(out.witnesses[k]);
    if (out.witnesses[k].size() != out.sizes[k] || !is_minimal_vertex_cover(g, out.witnesses[k]))
      throw std::logic_error("cover witness " + std::to_string(k + 1) + " is not a minimal vertex cover of size " +
                             std::to_string(out.sizes[k]));
  }
  return out;
}

bool is_cm_cw(const CwDecomposition& dec) {
  validate(dec);
  auto f = dec.leaf_counts();
  auto t = dec.triangle_counts();
  return std::all_of(f.begin(), f.end(), [](std::size_t c) { return c == 1; }) &&
         std::all_of(t.begin(), t.end(), [](std::size_t c) { return c == 1; });
}

Graph g_prime(const CwDecomposition& dec) {
  if (!is_cm_cw(dec))
    throw Error(Errc::not_cohen_macaulay, "G' is defined for Cohen–Macaulay Cameron–Walker graphs only");
  VertexSet keep = dec.left;
  keep.insert(keep.end(), dec.right.begin(), dec.right.end());
  for (const auto& tris : dec.triangles) keep.push_back(tris.front().first);
  return induced_subgraph(build_cw(dec), keep);
}

CmType cm_type_cw(const CwDecomposition& dec, std::size_t vertex_cap) {
  const Graph gp = g_prime(dec);
  CmType out;
  out.value = std::uint64_t{1} << dec.m();
  if (gp.num_vertices() > vertex_cap) return out;

  // A maximal independent set of G' is fixed by the right vertices it
  // contains, so the facets and the subsets of the right side correspond.
  auto complex = independence_complex(gp, vertex_cap);
  std::set<VertexSet> traces;
  const std::set<std::string> right(dec.right.begin(), dec.right.end());
  for (const auto& facet : complex.facets) {
    VertexSet trace;
    std::copy_if(facet.begin(), facet.end(), std::back_inserter(trace),
                 [&](const std::string& v) { return right.contains(v); });
    traces.insert(trace);
  }
  if (complex.facets.size() != out.value || traces.size() != out.value)
    throw std::logic_error("G' has " + std::to_string(complex.facets.size()) + " maximal independent sets with " +
                           std::to_string(traces.size()) + " distinct right traces, expected " +
                           std::to_string(out.value));
  out.enumerated = true;
  return out;
}

bool is_gorenstein_cw(const CwDecomposition& dec) {
  if (!is_cm_cw(dec)) return false;
  return cm_type_cw(dec).value == 1;
}

IndependenceDomination independence_domination_number(const Graph& g, std::size_t vertex_cap) {
  auto complex = independence_complex(g, vertex_cap);
  IndependenceDomination out;
  for (const auto& facet : complex.facets)
    if (out.witness.empty() || facet.size() < out.witness.size()) out.witness = facet;
  out.value = out.witness.size();
  return out;
}

std::size_t projective_dimension_cw(const Graph& g, std::size_t vertex_cap) {
  auto c = classify(g, {.cross_check = false});
  if (c.tag != GraphClass::cameron_walker)
    throw Error(Errc::not_cameron_walker, "projective dimension is computed for Cameron–Walker graphs only");
  return g.num_vertices() - independence_domination_number(g, vertex_cap).value;
}

std::size_t regularity_cw(const Graph& g, const ClassifyOptions& options) {
  auto c = classify(g, {.cross_check = false});
  if (c.tag == GraphClass::other)
    throw Error(Errc::not_in_family, "regularity is only pinned down when im = m (" + c.detail + ")");
  auto stats = matching_stats(g, options.matching_vertex_cap, options.induced_matching_edge_cap);
  if (stats.im != stats.m)
    throw std::logic_error("graph in the family with im = " + std::to_string(stats.im) +
                           " and m = " + std::to_string(stats.m));
  return stats.m;
}

InvariantReport full_report(const Graph& g, const ReportOptions& options) {
  InvariantReport r;
  auto guarded = [&](const std::vector<std::string>& fields, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      if (e.code() != Errc::size_guard) throw;
      r.partial = true;
      for (const auto& f : fields) r.reasons[f] = e.what();
    }
  };

  guarded({"im", "m", "reg"}, [&] {
    auto stats = matching_stats(g, options.matching_vertex_cap, options.induced_matching_edge_cap);
    r.im = stats.im;
    r.m = stats.m;
    r.matching = std::move(stats.witness_m);
    r.induced_matching = std::move(stats.witness_im);
  });
  r.classification = classify(g, {.cross_check = false});
  const bool in_family = r.classification.tag != GraphClass::other;
  if (r.im && r.classification.reason != "disconnected" && in_family != (*r.im == *r.m))
    throw std::logic_error("classification disagrees with the matching numbers");

  const auto& dec = r.classification.decomposition;
  std::optional<SimplicialComplex> complex;
  guarded({"unmixed", "cover_cardinalities", "i_g", "pd"}, [&] {
    complex = independence_complex(g, options.enumeration_vertex_cap);
    r.unmixed = is_pure(*complex);
    std::vector<std::size_t> sizes;
    for (const auto& facet : complex->facets) sizes.push_back(g.num_vertices() - facet.size());
    std::sort(sizes.begin(), sizes.end());
    r.cover_cardinalities = std::move(sizes);
    for (const auto& facet : complex->facets)
      if (r.independent_dominating_set.empty() || facet.size() < r.independent_dominating_set.size())
        r.independent_dominating_set = facet;
    r.i_g = r.independent_dominating_set.size();
  });

  if (dec) {
    r.cm = is_cm_cw(*dec);
    r.gorenstein = false;
    if (*r.cm) {
      auto type = cm_type_cw(*dec, options.enumeration_vertex_cap);
      r.cm_type = type.value;
      r.gorenstein = type.value == 1;
    } else {
      r.reasons["cm_type"] = "not Cohen–Macaulay";
    }
    if (r.i_g) r.pd = g.num_vertices() - *r.i_g;
  } else {
    const std::string why = "not a Cameron–Walker graph";
    for (const char* f : {"cm", "cm_type", "gorenstein", "pd"}) r.reasons.try_emplace(f, why);
  }

  guarded({"vertex_decomposable", "sequentially_cm"}, [&] {
    r.vertex_decomposable = is_vertex_decomposable_graph(g, options.decomposability_vertex_cap).decomposable;
    if (*r.vertex_decomposable)
      r.sequentially_cm = true;
    else
      r.reasons["sequentially_cm"] = "no vertex decomposability certificate";
  });

  if (!in_family)
    r.reasons.try_emplace("reg", "im != m, so the regularity is not determined");
  else if (r.m)
    r.reg = r.m;
  return r;
}

}  // namespace cwg
