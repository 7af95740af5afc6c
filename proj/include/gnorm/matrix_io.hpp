#pragma once

#include <string>
#include <string_view>

#include "gnorm/cmatrix.hpp"
#include "gnorm/graph.hpp"
#include "gnorm/subject.hpp"

namespace gnorm {

/// CSV matrix: one row per line, cells `a`, `a+bi`, `a-bi` or `bi` (a bare
/// `i` means 1i). Blank lines are ignored. Throws RaggedRows,
/// BadComplexLiteral, InvalidArgument for empty input.
CMatrix parse_matrix_file(std::string_view text);

/// Parses a single cell.
Complex parse_complex_literal(std::string_view cell);

/// Inverse of parse_matrix_file with 17 significant digits, so values
/// round-trip exactly. Real matrices print without imaginary parts.
std::string write_matrix(const CMatrix& a);

/// First line: vertex count. Every following line: "u v". '#' starts a comment.
Graph parse_edge_list(std::string_view text);

enum class InputKind { Graph6, EdgeList, Matrix };

/// A single line of graph6 bytes is graph6; a lone integer line followed by
/// lines of two integers is an edge list; anything else is a CSV matrix.
InputKind detect_input(std::string_view text);

Subject load_subject(std::string_view text);

}  // namespace gnorm
