#pragma once

#include "tww/graph.hpp"
#include "tww/sequence.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace tww {

using ColorMask = std::uint32_t; // bit c-1 = color c

/// Largest q the profile DP accepts.
inline constexpr int max_colors = 16;

/// Every realizable color-set assignment of one red component.
struct ProfileSet {
    std::vector<int> parts;                        // sorted part-ids of the component
    std::vector<std::vector<ColorMask>> profiles;  // aligned with parts; distinct, in insertion order
    std::vector<std::vector<std::uint8_t>> witnesses; // witness[v] = color of original v (0 outside); optional

    [[nodiscard]] std::size_t size() const noexcept { return profiles.size(); }
    [[nodiscard]] bool empty() const noexcept { return profiles.empty(); }
};

/// Red components keyed by an id that changes whenever the component does.
using ProfileMap = std::map<int, std::shared_ptr<const ProfileSet>>;

/// Recipe for the profiles of a component formed by one contraction.
struct FusionPlan {
    struct Slot {
        int input = 0; // index into inputs
        int part = 0;  // index into that input's parts
    };
    struct Conflict {
        Slot a, b; // black edge: the two color sets must be disjoint
    };
    std::vector<std::shared_ptr<const ProfileSet>> inputs;
    std::vector<Conflict> conflicts;
    std::vector<int> parts;                // output parts, sorted
    std::vector<std::vector<Slot>> sources; // per output part: the union of these slots
    bool witnesses = false;
};

struct ColoringOptions {
    bool witnesses = false;
    bool check_soundness = false; // validate every stored witness (needs witnesses)
    bool parallel = true;
};

struct ColoringStats {
    std::uint64_t max_combinations = 0;   // largest per-contraction product examined
    std::uint64_t total_combinations = 0;
    std::uint64_t combination_bound = 0;  // (2^q - 1)^(d+1), saturating
    std::size_t max_profiles = 0;         // largest stored set
    int steps = 0;                        // contractions processed
};

struct ColoringResult {
    bool colorable = false;
    std::optional<std::vector<int>> coloring; // by vertex, entry 0 unused
    int failed_step = -1;                     // contraction whose component had no profile
    ColoringStats stats;
};

/// q-colorability along a full sequence of component width <= d.
class QColoringDp {
public:
    /// Called after initialization (step 0) and after each contraction.
    using Observer = std::function<void(int step, const ContractionState& state, const ProfileMap& profiles)>;

    /// Throws InvalidInput on a partial sequence or q > max_colors and
    /// WidthExceeded if the sequence's component width exceeds d.
    QColoringDp(const Graph& g, const ContractionSequence& s, int q, int d, ColoringOptions options = {});

    void set_observer(Observer obs) { observer_ = std::move(obs); }
    [[nodiscard]] ColoringResult run();

private:
    const Graph& g_;
    const ContractionSequence& s_;
    int q_;
    int d_;
    ColoringOptions options_;
    Observer observer_;
};

[[nodiscard]] bool q_coloring(const Graph& g, const ContractionSequence& s, int q, int d);
/// Proper coloring with colors 1..q (index 0 unused), or nullopt.
[[nodiscard]] std::optional<std::vector<int>> q_coloring_extract(const Graph& g, const ContractionSequence& s, int q,
                                                                 int d);

/// Brute-force decision, for testing. Throws CapExceeded when n > 12 or q > 4.
[[nodiscard]] bool chromatic_oracle(const Graph& g, int q);

[[nodiscard]] bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int q);

} // namespace tww
