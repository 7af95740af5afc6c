#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gnorm/graph.hpp"

namespace gnorm {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> part_sizes);
/// (n/2) K_2; n must be even.
Graph perfect_matching(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Paley graph on Z_q: q prime, q = 1 (mod 4).
Graph paley_graph(int q);

bool is_prime(int q) noexcept;

/// Named-family dispatcher used by the CLI and C API. Kinds:
///   complete n | empty n | multipartite s1 s2 ... | matching n | cycle n |
///   path n | paley q | star n (K_{1,n})
/// Throws BadFamilyParams on an unknown kind or invalid parameters.
Graph family(std::string_view kind, std::span<const int> params);

}  // namespace gnorm
