#include "cwg/error.hpp"

namespace cwg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "ParseError";
    case Errc::loop_edge: return "LoopEdge";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::disconnected: return "Disconnected";
    case Errc::not_an_edge: return "NotAnEdge";
    case Errc::size_guard: return "SizeGuard";
    case Errc::not_cameron_walker: return "NotCameronWalker";
    case Errc::invalid_decomposition: return "InvalidDecomposition";
    case Errc::invalid_size: return "InvalidSize";
    case Errc::not_a_clique: return "NotAClique";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::not_complete_bipartite_support: return "NotCompleteBipartiteSupport";
    case Errc::not_cohen_macaulay: return "NotCohenMacaulay";
    case Errc::not_in_family: return "NotInFamily";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Error";
}

}  // namespace cwg
