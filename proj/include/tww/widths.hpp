#pragma once

#include "tww/graph.hpp"
#include "tww/partition.hpp"
#include "tww/sequence.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tww {

/// Which red-graph statistic a sequence is scored by. Each measure has a
/// fixed loop convention: oriented and degree ignore loops, component and
/// total count them.
enum class Measure { oriented, degree, component, total };

[[nodiscard]] LoopConvention convention_of(Measure m) noexcept;
[[nodiscard]] std::string_view to_string(Measure m) noexcept;
/// Accepts "oriented", "degree", "component", "total". Throws InvalidInput.
[[nodiscard]] Measure parse_measure(std::string_view name);

struct StepWidths {
    int oriented = 0;  // max red out-degree of the directed quotient
    int degree = 0;    // max red degree
    int component = 0; // max red component size, in parts
    int total = 0;     // number of red edges

    [[nodiscard]] int get(Measure m) const noexcept;
    friend bool operator==(const StepWidths&, const StepWidths&) = default;
};

/// The four widths of G/P, each under its measure's own loop convention.
[[nodiscard]] StepWidths step_widths(const Graph& g, const Partition& p);
/// The four widths of G/P all under one convention (with_loops: a loop adds
/// one to out-degree, degree and the edge count).
[[nodiscard]] StepWidths step_widths(const Graph& g, const Partition& p, LoopConvention convention);

/// Same values as step_widths(g, state.partition()), read off the replay state.
[[nodiscard]] StepWidths step_widths(const ContractionState& state);
[[nodiscard]] StepWidths step_widths(const ContractionState& state, LoopConvention convention);

/// Max of the measure over steps 0..s.size(). Throws SequenceError.
[[nodiscard]] int sequence_width(const Graph& g, const ContractionSequence& s, Measure m);
/// Per-step values, index = number of contractions done.
[[nodiscard]] std::vector<StepWidths> width_profile(const Graph& g, const ContractionSequence& s);

struct Violation {
    int step = 0;            // contractions performed when the width first exceeded d
    std::vector<int> parts;  // part-ids responsible for the excess
    int value = 0;           // observed width at that step
};

struct VerifyResult {
    std::optional<Violation> violation;
    [[nodiscard]] bool ok() const noexcept { return !violation; }
};

/// ok iff every step has width <= d under m; otherwise the first failing step.
/// Replay problems throw SequenceError rather than reporting a violation.
[[nodiscard]] VerifyResult verify_d_sequence(const Graph& g, const ContractionSequence& s, int d, Measure m);

} // namespace tww
