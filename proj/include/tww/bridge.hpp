#pragma once

// Conversions between branch decompositions and contraction sequences.

#include "tww/decomposition.hpp"
#include "tww/graph.hpp"
#include "tww/sequence.hpp"

namespace tww {

/// Sequence of component width <= 2^(d+1) from a decomposition of
/// boolean-width <= d. Contracts same-neighbourhood pairs inside the deepest
/// subtree with more than 2^d leaves until at most 2^(d+1) parts remain,
/// then merges the rest in ascending id order. Throws
/// DecompositionWidthExceeded if the decomposition is wider than d.
[[nodiscard]] ContractionSequence bd_to_sequence(const Graph& g, const BranchDecomposition& t, int d);

/// Decomposition of boolean-width <= 2^c from a full sequence of component
/// width c. Throws InvalidInput on a partial sequence.
[[nodiscard]] BranchDecomposition sequence_to_bd(const Graph& g, const ContractionSequence& s);

/// Linear variant: total width <= 2^d + 1 + C(2^d + 1, 2). The guided phase
/// runs down to 2^d parts and ranks candidate pairs by leaf position along
/// the path instead of part-id. Throws InvalidInput if t is not linear.
[[nodiscard]] ContractionSequence linear_bd_to_sequence(const Graph& g, const BranchDecomposition& t, int d);

/// Linear decomposition ordering vertices by the step at which they first
/// join a non-singleton part (ties by id). Boolean-width <= 2^w for a
/// sequence of total width w.
[[nodiscard]] BranchDecomposition sequence_to_linear_bd(const Graph& g, const ContractionSequence& s);

} // namespace tww
