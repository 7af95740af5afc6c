#include "gnorm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "gnorm/error.hpp"

namespace gnorm {

Graph::Graph(int order)
    : order_(order), words_(order > 0 ? (static_cast<std::size_t>(order) + 63) / 64 : 0) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "graph order must be positive");
  rows_.assign(static_cast<std::size_t>(order) * words_, 0);
}

void Graph::set_edge(int u, int v) noexcept {
  rows_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = graph_.order();
  if (u < 0 || v < 0 || u >= n || v >= n)
    fail(ErrorCode::VertexOutOfRange,
         "edge (" + std::to_string(u) + "," + std::to_string(v) +
             ") outside order " + std::to_string(n));
  if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
  graph_.set_edge(u, v);
  return *this;
}

Graph Graph::from_edge_list(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (std::uint64_t w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

CMatrix Graph::adjacency_matrix() const {
  const auto n = static_cast<std::size_t>(order_);
  CMatrix a(n, n);
  for (int u = 0; u < order_; ++u)
    for (int v = 0; v < order_; ++v)
      if (adjacent(u, v)) a(u, v) = 1.0;
  return a;
}

std::vector<double> Graph::adjacency_real() const {
  const auto n = static_cast<std::size_t>(order_);
  std::vector<double> a(n * n, 0.0);
  for (int u = 0; u < order_; ++u)
    for (int v = 0; v < order_; ++v)
      if (adjacent(u, v)) a[u * n + v] = 1.0;
  return a;
}

std::uint64_t pair_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCodedOrder)
    fail(ErrorCode::TooLarge, "pair code supports order <= 11");
  const std::size_t total = pair_count(n);
  std::uint64_t code = 0;
  std::size_t t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << (total - 1 - t);
  return code;
}

Graph from_pair_code(int order, std::uint64_t code) {
  if (order > kMaxCodedOrder)
    fail(ErrorCode::TooLarge, "pair code supports order <= 11");
  GraphBuilder b(order);
  const std::size_t total = pair_count(order);
  std::size_t t = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((code >> (total - 1 - t)) & 1u) b.add_edge(i, j);
  return std::move(b).build();
}

Graph blow_up(const Graph& g, int t) {
  if (t < 1) fail(ErrorCode::InvalidArgument, "blow-up factor must be positive");
  GraphBuilder b(g.order() * t);
  for (const auto& [u, v] : g.edges())
    for (int a = 0; a < t; ++a)
      for (int c = 0; c < t; ++c) b.add_edge(u * t + a, v * t + c);
  return std::move(b).build();
}

Graph with_isolated(const Graph& g, int t) {
  if (t < 0) fail(ErrorCode::InvalidArgument, "isolated vertex count is negative");
  GraphBuilder b(g.order() + t);
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

// Vertices are relabelled so that masks fit 32 bits.
struct ColoringSearch {
  int n;
  std::vector<std::uint32_t> adj;  // in search order
  std::vector<int> color;

  bool extend(int idx, int k, int used) {
    if (idx == n) return true;
    std::uint32_t forbidden = 0;
    for (int j = 0; j < idx; ++j)
      if ((adj[idx] >> j) & 1u) forbidden |= std::uint32_t{1} << color[j];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1u) continue;
      color[idx] = c;
      if (extend(idx + 1, k, std::max(used, c + 1))) return true;
    }
    return false;
  }
};

int greedy_clique(const std::vector<std::uint32_t>& adj, int n) {
  int best = 1;
  for (int start = 0; start < n; ++start) {
    std::uint32_t cand = adj[start];
    int size = 1;
    while (cand) {
      // Pick the candidate with most neighbours inside the candidate set.
      int pick = -1, pick_deg = -1;
      for (std::uint32_t c = cand; c; c &= c - 1) {
        const int v = std::countr_zero(c);
        const int d = std::popcount(adj[v] & cand);
        if (d > pick_deg) pick = v, pick_deg = d;
      }
      ++size;
      cand &= adj[pick];
    }
    best = std::max(best, size);
  }
  return best;
}

int greedy_color_count(const std::vector<std::uint32_t>& adj, int n) {
  std::vector<int> color(n, -1);
  int used = 0;
  for (int v = 0; v < n; ++v) {
    std::uint32_t forbidden = 0;
    for (int u = 0; u < v; ++u)
      if ((adj[v] >> u) & 1u) forbidden |= std::uint32_t{1} << color[u];
    int c = std::countr_one(forbidden);
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExactChromaticOrder)
    fail(ErrorCode::TooLargeForExact,
         "exact chromatic number supports order <= 32, got " + std::to_string(n));
  if (g.edge_count() == 0) return 1;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(order[i], order[j])) adj[i] |= std::uint32_t{1} << j;

  const int lower = greedy_clique(adj, n);
  const int upper = greedy_color_count(adj, n);
  ColoringSearch search{n, adj, std::vector<int>(n, 0)};
  for (int k = lower; k < upper; ++k)
    if (search.extend(0, k, 0)) return k;
  return upper;
}

std::uint64_t closed_walks(const Graph& g, int length) {
  if (length <= 0 || length % 2 != 0)
    fail(ErrorCode::InvalidArgument, "walk length must be even and positive");
  if (length > 16) fail(ErrorCode::OverflowRisk, "walk length above 16");
  const int n = g.order();
  if (n > 64) fail(ErrorCode::OverflowRisk, "closed walks support order <= 64");
  int max_deg = 0;
  for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg == 0) return 0;
  const double log_bound = std::log2(static_cast<double>(n)) +
                           length * std::log2(static_cast<double>(max_deg));
  if (log_bound >= 63.0)
    fail(ErrorCode::OverflowRisk, "n * maxdeg^length may exceed 2^63");

  const auto N = static_cast<std::size_t>(n);
  std::vector<std::uint64_t> power(N * N, 0);  // A^1
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) power[u * N + v] = g.adjacent(u, v) ? 1 : 0;
  for (int step = 1; step < length / 2; ++step) {
    std::vector<std::uint64_t> next(N * N, 0);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        for (std::size_t v = 0; v < N; ++v) next[u * N + v] += power[w * N + v];
      }
    power.swap(next);
  }
  // B = A^(length/2) is symmetric, so trace(B^2) = sum of squared entries.
  std::uint64_t trace = 0;
  for (std::uint64_t x : power) trace += x * x;
  return trace;
}

std::optional<SrgParameters> is_strongly_regular(const Graph& g) {
  const int n = g.order();
  const int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      const auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < ru.size(); ++w) common += std::popcount(ru[w] & rv[w]);
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = common;
      else if (slot != common) return std::nullopt;
    }
  return SrgParameters{n, k, std::max(lambda, 0), std::max(mu, 0)};
}

}  // namespace gnorm
