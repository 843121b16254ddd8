#pragma once

#include "tww/decomposition.hpp"
#include "tww/graph.hpp"
#include "tww/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace tww {

inline constexpr std::int64_t default_closure_cap = std::int64_t{1} << 20;

/// Neighbourhood statistics of the cut (X, V \ X).
struct CutProfile {
    VertexSet side;                       // X
    int distinct_neighborhoods = 0;       // q: distinct traces N(x) & (V \ X), x in X
    std::int64_t union_closure_size = 0;  // exact when `exact`, otherwise only known to exceed the cap
    bool exact = false;

    /// log2 of the closure size; when inexact, the upper end of the bracket.
    [[nodiscard]] double boolean_width() const;
    [[nodiscard]] double lower() const; // log2 q, or the exact value
    [[nodiscard]] double upper() const; // q, or the exact value
};

/// Throws InvalidInput unless X is a proper nonempty subset of V(g).
[[nodiscard]] CutProfile cut_profile(const Graph& g, const VertexSet& x, std::int64_t cap = default_closure_cap);

/// Width of a decomposition: max over tree edges.
struct WidthBracket {
    double lower = 0;
    double upper = 0;
    bool exact = true;
    std::int64_t max_closure = 1; // largest exact closure seen
    int max_q = 0;

    [[nodiscard]] double value() const noexcept { return upper; }
    /// True iff every cut was exact with closure size <= 2^d.
    [[nodiscard]] bool at_most(int d) const noexcept;
};

[[nodiscard]] WidthBracket bd_boolean_width(const Graph& g, const BranchDecomposition& t,
                                            std::int64_t cap = default_closure_cap);
/// Cheaper yes/no test: closures stop growing past 2^d.
[[nodiscard]] bool bd_boolean_width_at_most(const Graph& g, const BranchDecomposition& t, int d);

} // namespace tww
