#pragma once

#include "tww/graph.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"
#include "tww/widths.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace tww {

enum class BuildOutcome {
    done,             // full sequence built
    budget_exceeded,  // exact search gave up; width is an upper bound
    stuck,            // contractible builder found no admissible pair of small degree
    target_reached,   // partial builder reached the degree target
    no_admissible     // partial builder ran out of admissible contractions
};

[[nodiscard]] std::string_view to_string(BuildOutcome o) noexcept;

struct BuildReport {
    ContractionSequence sequence;
    Measure measure = Measure::degree;
    int achieved_width = 0;          // sequence_width(sequence, measure), re-verified
    int lower_bound = 0;             // proven lower bound on the graph's width (exact search)
    bool exact = false;              // achieved_width is the graph's true width under measure
    std::int64_t nodes_explored = 0; // exact search only
    BuildOutcome outcome = BuildOutcome::done;
    int stuck_degree = 0;            // smallest merged degree available when stuck

    [[nodiscard]] bool complete() const noexcept { return sequence.complete() || sequence.n() <= 1; }
};

/// Largest n accepted by exact_width.
inline constexpr int exact_width_cap = 16;

/// Minimum width over all contraction sequences of g, by depth-first search
/// over partitions with memoized dead ends and an increasing width bound.
/// On budget exhaustion the greedy sequence is returned with exact = false
/// and lower_bound set to the last bound proven infeasible plus one.
/// Throws CapExceeded when g.n() > exact_width_cap.
[[nodiscard]] BuildReport exact_width(const Graph& g, Measure m, std::int64_t node_budget = 50'000'000);

/// Repeatedly contracts the pair giving the smallest next-step width; ties go
/// to the lexicographically smallest (u, v).
[[nodiscard]] BuildReport greedy_sequence(const Graph& g, Measure m);

/// Decides whether (u, v) may be merged, looking only at the total graph of t.
using PairPredicate = std::function<bool(const Trigraph& t, int u, int v)>;

namespace pairs {
[[nodiscard]] PairPredicate any_pair();
/// Non-adjacent with equal neighborhoods, or adjacent, in the total graph.
[[nodiscard]] PairPredicate twins_or_adjacent();
} // namespace pairs

/// Contracts admissible pairs whose merged vertex has total degree <= d,
/// smallest merged degree first. The result has oriented width <= d; when
/// no such pair exists the report is `stuck` with the best degree seen.
[[nodiscard]] BuildReport contractible_sequence(const Graph& g, int d, const PairPredicate& pred);

/// Greedy partial sequence keeping red degree <= d, stopping once the total
/// graph has maximum degree <= delta. Scores pairs by (merged red degree,
/// merged total degree). Red degree here ignores loops.
[[nodiscard]] BuildReport partial_sequence_to_degree(const Graph& g, int d, int delta);

} // namespace tww
