#include "gnorm/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

#include "gnorm/error.hpp"

namespace gnorm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

[[noreturn]] void bad_literal(std::string_view cell) {
  fail(ErrorCode::BadComplexLiteral, "cannot parse matrix entry '" + std::string(cell) + "'");
}

bool parse_int(std::string_view s, long long& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  return trim(line.substr(0, line.find('#')));
}

bool is_graph6_line(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) return false;
  for (char c : line)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126) return false;
  return true;
}

bool looks_like_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    line = strip_comment(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2) return false;
  long long v = 0;
  auto first = tokens(lines[0]);
  if (first.size() != 1 || !parse_int(first[0], v)) return false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto t = tokens(lines[i]);
    if (t.size() != 2 || !parse_int(t[0], v) || !parse_int(t[1], v)) return false;
  }
  return true;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Complex parse_complex_literal(std::string_view cell) {
  const std::string_view s = trim(cell);
  if (s.empty()) bad_literal(cell);
  double re = 0.0, im = 0.0;
  if (s.back() != 'i') {
    if (!parse_real(s, re)) bad_literal(cell);
    return {re, 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  std::string_view re_part, im_part = body;
  if (split_at != std::string_view::npos) {
    re_part = body.substr(0, split_at);
    im_part = body.substr(split_at);
    if (!parse_real(re_part, re)) bad_literal(cell);
  }
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else if (!parse_real(im_part, im)) {
    bad_literal(cell);
  }
  return {re, im};
}

CMatrix parse_matrix_file(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::InvalidArgument, "matrix input is empty");
  std::vector<Complex> data;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto cells = split(lines[r], ',');
    if (r == 0) cols = cells.size();
    if (cells.size() != cols)
      fail(ErrorCode::RaggedRows, "row " + std::to_string(r + 1) + " has " +
                                      std::to_string(cells.size()) + " entries, expected " +
                                      std::to_string(cols));
    for (auto cell : cells) data.push_back(parse_complex_literal(cell));
  }
  return CMatrix(lines.size(), cols, std::move(data));
}

std::string write_matrix(const CMatrix& a) {
  const bool real = a.is_real();
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ',';
      const Complex z = a(i, j);
      out += format_double(z.real());
      if (!real) {
        out += std::signbit(z.imag()) ? '-' : '+';
        out += format_double(std::abs(z.imag()));
        out += 'i';
      }
    }
    out += '\n';
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    line = strip_comment(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) fail(ErrorCode::InvalidArgument, "edge list is empty");
  long long n = 0;
  const auto head = tokens(lines[0]);
  if (head.size() != 1 || !parse_int(head[0], n) || n < 1 || n > 1 << 20)
    fail(ErrorCode::InvalidArgument, "edge list must start with a positive vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = tokens(lines[i]);
    long long u = 0, v = 0;
    if (t.size() != 2 || !parse_int(t[0], u) || !parse_int(t[1], v))
      fail(ErrorCode::InvalidArgument, "edge list line " + std::to_string(i + 1) + " is not 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorCode::VertexOutOfRange, "edge list line " + std::to_string(i + 1) + " names a vertex outside [0, n)");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

InputKind detect_input(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() == 1 && is_graph6_line(lines[0])) return InputKind::Graph6;
  if (looks_like_edge_list(text)) return InputKind::EdgeList;
  return InputKind::Matrix;
}

Subject load_subject(std::string_view text) {
  switch (detect_input(text)) {
    case InputKind::Graph6:
      return Subject::from_graph(parse_graph6(content_lines(text)[0]));
    case InputKind::EdgeList:
      return Subject::from_graph(parse_edge_list(text));
    case InputKind::Matrix:
      break;
  }
  return Subject::from_matrix(parse_matrix_file(text));
}

}  // namespace gnorm
