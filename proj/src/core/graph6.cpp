#include <string>
#include <string_view>

#include "gnorm/error.hpp"
#include "gnorm/graph.hpp"

namespace gnorm {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxGraph6Order = 258047;

[[noreturn]] void malformed(const std::string& why) {
  fail(ErrorCode::MalformedGraph6, "malformed graph6: " + why);
}

int sextet(char c) {
  if (c < 63 || c > 126) malformed("byte outside 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) malformed("empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    malformed("orders above 258047 are not supported");
  } else {
    if (text.size() < 4) malformed("truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) malformed("long order form used for order below 63");
    pos = 4;
  }
  if (n == 0) malformed("order 0 is not supported");

  const std::size_t bits = pair_count(static_cast<int>(n));
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    malformed("expected " + std::to_string(body) + " body bytes, got " +
              std::to_string(text.size() - pos));

  GraphBuilder b(static_cast<int>(n));
  std::size_t t = 0;
  int i = 0, j = 1;
  for (std::size_t c = 0; c < body; ++c) {
    const int x = sextet(text[pos + c]);
    for (int bit = 5; bit >= 0; --bit, ++t) {
      const bool set = (x >> bit) & 1;
      if (t >= bits) {
        if (set) malformed("nonzero padding bits");
        continue;
      }
      if (set) b.add_edge(i, j);
      if (++i == j) i = 0, ++j;
    }
  }
  return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) fail(ErrorCode::TooLarge, "order too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace gnorm
