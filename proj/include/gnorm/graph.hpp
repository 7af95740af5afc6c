#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gnorm/cmatrix.hpp"

namespace gnorm {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..order-1 with bitset adjacency rows.
/// Symmetric and loop-free by construction.
class Graph {
 public:
  explicit Graph(int order);

  static Graph from_edge_list(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept;
  bool adjacent(int u, int v) const noexcept {
    return (rows_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const noexcept;
  std::vector<Edge> edges() const;

  /// Bitset row of v, little-endian words.
  std::span<const std::uint64_t> row(int v) const noexcept {
    return {rows_.data() + row_offset(v), words_};
  }

  CMatrix adjacency_matrix() const;
  /// Row-major 0/1 adjacency as doubles.
  std::vector<double> adjacency_real() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::size_t row_offset(int v) const noexcept {
    return static_cast<std::size_t>(v) * words_;
  }
  void set_edge(int u, int v) noexcept;

  int order_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Mutable staging area for graph construction; validates every edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : graph_(order) {}

  GraphBuilder& add_edge(int u, int v);
  int order() const noexcept { return graph_.order(); }
  Graph build() && { return std::move(graph_); }
  Graph build() const& { return graph_; }

 private:
  Graph graph_;
};

/// Number of vertex pairs, C(n, 2).
constexpr std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Largest order whose pair set fits one 64-bit code.
inline constexpr int kMaxCodedOrder = 11;

/// Packs the upper triangle in graph6 column order, first pair in the most
/// significant position, so comparing codes compares graph6 bodies.
std::uint64_t pair_code(const Graph& g);
Graph from_pair_code(int order, std::uint64_t code);

// graph6 interchange format.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Replaces every vertex by an independent set of size t; adjacency becomes
/// A(G) (x) J_t.
Graph blow_up(const Graph& g, int t);

/// Appends t isolated vertices.
Graph with_isolated(const Graph& g, int t);

inline constexpr int kMaxExactChromaticOrder = 32;

/// Exact chromatic number by branch and bound. Throws TooLargeForExact above
/// kMaxExactChromaticOrder vertices.
int chromatic_number(const Graph& g);

/// trace(A^length) in exact integer arithmetic. length must be even and at
/// most 16; throws OverflowRisk when n * maxdeg^length could exceed 2^63.
std::uint64_t closed_walks(const Graph& g, int length);

struct SrgParameters {
  int n;
  int k;
  int lambda;
  int mu;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters (n, k, lambda, mu) when g is strongly regular. Vacuous
/// parameters (lambda without edges, mu without non-adjacent pairs) are 0.
std::optional<SrgParameters> is_strongly_regular(const Graph& g);

}  // namespace gnorm
