#include "gnorm/families.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "gnorm/error.hpp"

namespace gnorm {

namespace {

[[noreturn]] void bad(const std::string& why) {
  fail(ErrorCode::BadFamilyParams, why);
}

void require_order(int n, int min, const char* kind) {
  if (n < min)
    bad(std::string(kind) + " needs order >= " + std::to_string(min));
}

}  // namespace

bool is_prime(int q) noexcept {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph complete_graph(int n) {
  require_order(n, 1, "complete");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(int n) {
  require_order(n, 1, "empty");
  return Graph(n);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.empty()) bad("multipartite needs at least one part");
  for (int s : part_sizes)
    if (s < 1) bad("multipartite part sizes must be >= 1");
  const int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  std::vector<int> part(n);
  int v = 0;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part[v++] = static_cast<int>(p);
  GraphBuilder b(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (part[x] != part[y]) b.add_edge(x, y);
  return std::move(b).build();
}

Graph perfect_matching(int n) {
  if (n < 2 || n % 2 != 0) bad("perfect matching needs a positive even order");
  GraphBuilder b(n);
  for (int v = 0; v < n; v += 2) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  require_order(n, 3, "cycle");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  require_order(n, 1, "path");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph paley_graph(int q) {
  if (!is_prime(q)) bad("paley order " + std::to_string(q) + " is not prime");
  if (q % 4 != 1) bad("paley order " + std::to_string(q) + " is not 1 mod 4");
  std::vector<bool> residue(q, false);
  for (long x = 1; x < q; ++x) residue[(x * x) % q] = true;
  GraphBuilder b(q);
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      if (residue[(y - x) % q]) b.add_edge(x, y);
  return std::move(b).build();
}

Graph family(std::string_view kind, std::span<const int> params) {
  auto single = [&](const char* name) {
    if (params.size() != 1) bad(std::string(name) + " takes exactly one parameter");
    return params[0];
  };
  if (kind == "complete") return complete_graph(single("complete"));
  if (kind == "empty") return empty_graph(single("empty"));
  if (kind == "multipartite") return complete_multipartite(params);
  if (kind == "matching") return perfect_matching(single("matching"));
  if (kind == "cycle") return cycle_graph(single("cycle"));
  if (kind == "path") return path_graph(single("path"));
  if (kind == "paley") return paley_graph(single("paley"));
  if (kind == "star") {
    const int leaves = single("star");
    if (leaves < 1) bad("star needs at least one leaf");
    const int sizes[] = {1, leaves};
    return complete_multipartite(sizes);
  }
  bad("unknown graph family '" + std::string(kind) + "'");
}

}  // namespace gnorm
