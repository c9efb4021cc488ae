#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwg {

enum class Errc {
  parse,
  loop_edge,
  empty_graph,
  unknown_vertex,
  disconnected,
  not_an_edge,
  size_guard,
  not_cameron_walker,
  invalid_decomposition,
  invalid_size,
  not_a_clique,
  not_a_partition,
  invalid_params,
  length_mismatch,
  not_a_permutation,
  not_complete_bipartite_support,
  not_cohen_macaulay,
  not_in_family,
  budget_exceeded,
};

/// Stable identifier used in JSON output and CLI messages ("SizeGuard", ...).
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cwg
