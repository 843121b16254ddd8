#pragma once

// Text formats. Vertex ids are 1-based everywhere; '#' starts a comment
// line. Parsers throw ParseError with the offending line number.
//
//   graph:          p <n> <m>, then m lines  e <u> <v>
//   sequence:       s <n> <k>, then k lines  c <u> <v>   (line i creates n+i)
//   decomposition:  t <nodes>, then  n <id> <parent|0>  or  l <id> <parent> <vertex>, optional  lin
//   matrix:         m <r> <c>, then r lines of c symbols

#include "tww/decomposition.hpp"
#include "tww/graph.hpp"
#include "tww/matrix.hpp"
#include "tww/sequence.hpp"

#include <iosfwd>
#include <string>

namespace tww::io {

[[nodiscard]] Graph parse_graph(std::istream& in);
[[nodiscard]] ContractionSequence parse_sequence(std::istream& in);
[[nodiscard]] BranchDecomposition parse_decomposition(std::istream& in);
[[nodiscard]] Matrix parse_matrix(std::istream& in);

[[nodiscard]] Graph parse_graph(const std::string& text);
[[nodiscard]] ContractionSequence parse_sequence(const std::string& text);
[[nodiscard]] BranchDecomposition parse_decomposition(const std::string& text);
[[nodiscard]] Matrix parse_matrix(const std::string& text);

[[nodiscard]] std::string serialize(const Graph& g);
[[nodiscard]] std::string serialize(const ContractionSequence& s);
[[nodiscard]] std::string serialize(const BranchDecomposition& t);
[[nodiscard]] std::string serialize(const Matrix& m);

/// Reads a whole file; throws InvalidInput if it cannot be opened.
[[nodiscard]] std::string read_file(const std::string& path);

} // namespace tww::io
