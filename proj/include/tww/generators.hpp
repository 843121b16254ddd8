#pragma once

#include "tww/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tww::gen {

[[nodiscard]] Graph path(int n);
[[nodiscard]] Graph cycle(int n);
[[nodiscard]] Graph clique(int n);
[[nodiscard]] Graph biclique(int a, int b);
/// rows x cols grid, vertex (i, j) -> i*cols + j + 1.
[[nodiscard]] Graph grid(int rows, int cols);
/// Grid where every 4-cycle face also gets both diagonals (a K4 per cell).
[[nodiscard]] Graph diagonal_grid(int rows, int cols);
[[nodiscard]] Graph erdos_renyi(int n, double p, std::uint64_t seed);
/// Every vertex of base becomes a clique module of the given size.
[[nodiscard]] Graph blowup(const Graph& base, int size);
[[nodiscard]] Graph icosahedron();
[[nodiscard]] Graph petersen();
/// Stacked triangulation followed by random edge flips; planar, 3n-6 edges.
[[nodiscard]] Graph planar_triangulation(int n, std::uint64_t seed);
/// Random cograph built by recursive disjoint unions and joins.
[[nodiscard]] Graph cograph(int n, std::uint64_t seed);

/// Dispatch by name for the command line. Kinds: path, cycle, clique,
/// biclique, grid, diagonal-grid, er, blowup, icosahedron, petersen,
/// triangulation, cograph. `params` are the kind's numeric arguments; for
/// blowup the first token is the base kind followed by its params and the
/// module size last. Throws InvalidInput on bad params.
[[nodiscard]] Graph generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed);

} // namespace tww::gen
