#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a plain serial reference that tests and benchmarks compare
// against.

#include "tww/boolean_width.hpp"
#include "tww/coloring.hpp"
#include "tww/sequence.hpp"
#include "tww/widths.hpp"

#include <vector>

namespace tww::kernels {

/// Outcome of contracting one live pair (u < v) of a replay state.
struct PairScore {
    int u = 0;
    int v = 0;
    int width = 0;        // whole-trigraph width under the scored measure after the merge
    int merged_red = 0;   // red degree of the merged part, loops excluded
    int merged_total = 0; // black + red degree of the merged part
    friend bool operator==(const PairScore&, const PairScore&) = default;
};

/// Scores every live pair, in lexicographic (u, v) order.
[[nodiscard]] std::vector<PairScore> score_pairs(const ContractionState& state, Measure m);

/// cut_profile of each side, one tree edge per task.
[[nodiscard]] std::vector<CutProfile> cut_profiles(const Graph& g, const std::vector<VertexSet>& sides,
                                                   std::int64_t cap);

struct FusionResult {
    ProfileSet set;
    std::uint64_t combinations = 0;
};

/// Enumerates the cartesian product of the plan's inputs, keeps conflict-free
/// combinations and deduplicates their union profiles. Profiles appear in
/// order of their first combination, so the result does not depend on the
/// thread count.
[[nodiscard]] FusionResult fuse_profiles(const FusionPlan& plan);

namespace serial {
/// Reference: contracts each pair on a copy of the state and recomputes.
[[nodiscard]] std::vector<PairScore> score_pairs(const ContractionState& state, Measure m);
[[nodiscard]] std::vector<CutProfile> cut_profiles(const Graph& g, const std::vector<VertexSet>& sides,
                                                   std::int64_t cap);
[[nodiscard]] FusionResult fuse_profiles(const FusionPlan& plan);
} // namespace serial

} // namespace tww::kernels
