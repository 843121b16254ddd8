#include "tww/coloring.hpp"

#include "tww/errors.hpp"
#include "tww/kernels.hpp"
#include "tww/widths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tww {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::uint64_t saturating_pow(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

void check_witnesses(const Graph& g, const ContractionState& st, const ProfileSet& set, int q)
{
    VertexSet area = g.empty_set();
    for (int x : set.parts)
        area |= st.members(x);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& w = set.witnesses.at(i);
        for (int v = 1; v <= g.n(); ++v) {
            int c = w[at(v)];
            if (area.test(v) != (c != 0) || c > q)
                throw std::logic_error("witness colors the wrong vertex set");
        }
        area.for_each([&](int v) {
            (g.neighbors(v) & area).for_each([&](int x) {
                if (w[at(v)] == w[at(x)])
                    throw std::logic_error("witness is not a proper coloring");
            });
        });
        for (std::size_t k = 0; k < set.parts.size(); ++k) {
            ColorMask used = 0;
            st.members(set.parts[k]).for_each([&](int v) { used |= ColorMask{1} << (w[at(v)] - 1); });
            if (used != set.profiles[i][k])
                throw std::logic_error("witness color sets differ from the profile");
        }
    }
}

} // namespace

QColoringDp::QColoringDp(const Graph& g, const ContractionSequence& s, int q, int d, ColoringOptions options)
    : g_(g), s_(s), q_(q), d_(d), options_(options)
{
    if (q < 0 || q > max_colors)
        throw InvalidInput("q must lie in 0.." + std::to_string(max_colors));
    if (d < 0)
        throw InvalidInput("d must be nonnegative");
    if (s.n() != g.n())
        throw InvalidInput("sequence and graph disagree on the vertex count");
    if (g.n() > 1 && !s.complete())
        throw InvalidInput("coloring needs a full sequence");
    if (options_.check_soundness)
        options_.witnesses = true;
    auto verdict = verify_d_sequence(g, s, d, Measure::component);
    if (!verdict.ok())
        throw WidthExceeded("step " + std::to_string(verdict.violation->step) + ": red component of size " +
                            std::to_string(verdict.violation->value) + " exceeds d = " + std::to_string(d));
}

ColoringResult QColoringDp::run()
{
    const int n = g_.n();
    ColoringResult result;
    result.stats.combination_bound = saturating_pow((std::uint64_t{1} << q_) - 1, d_ + 1);

    ContractionState st(g_);
    ProfileMap map;
    std::vector<int> comp_of(2 * at(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        auto set = std::make_shared<ProfileSet>();
        set->parts = {v};
        for (int c = 1; c <= q_; ++c) {
            set->profiles.push_back({ColorMask{1} << (c - 1)});
            if (options_.witnesses) {
                set->witnesses.emplace_back(at(n) + 1, 0);
                set->witnesses.back()[at(v)] = static_cast<std::uint8_t>(c);
            }
        }
        result.stats.max_profiles = std::max(result.stats.max_profiles, set->size());
        map[v] = std::move(set);
        comp_of[at(v)] = v;
    }
    if (observer_)
        observer_(0, st, map);
    if (n >= 1 && q_ == 0) {
        result.failed_step = 0;
        return result;
    }

    for (int k = 1; k <= s_.size(); ++k) {
        int u = s_.step(k).u, v = s_.step(k).v;
        VertexSet bu = st.trigraph().black_neighbors(u);
        VertexSet bv = st.trigraph().black_neighbors(v);
        int z = st.contract(u, v);

        auto label = st.component_labels();
        std::vector<int> comp;
        st.live().for_each([&](int x) {
            if (label[at(x)] == label[at(z)])
                comp.push_back(x);
        });

        std::vector<int> keys{comp_of[at(u)], comp_of[at(v)]};
        for (int x : comp)
            if (x != z)
                keys.push_back(comp_of[at(x)]);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

        FusionPlan plan;
        plan.witnesses = options_.witnesses;
        plan.parts = comp;
        std::vector<FusionPlan::Slot> slot_of(comp_of.size());
        std::vector<int> old_parts; // parts of G_{i+1} in the fusing components
        for (std::size_t j = 0; j < keys.size(); ++j) {
            const auto& in = map.at(keys[j]);
            plan.inputs.push_back(in);
            for (std::size_t idx = 0; idx < in->parts.size(); ++idx) {
                slot_of[at(in->parts[idx])] = {static_cast<int>(j), static_cast<int>(idx)};
                old_parts.push_back(in->parts[idx]);
            }
        }
        auto black_before = [&](int x, int y) {
            if (x == u)
                return bu.test(y);
            if (x == v)
                return bv.test(y);
            if (y == u)
                return bu.test(x);
            if (y == v)
                return bv.test(x);
            return st.trigraph().black(x, y);
        };
        for (std::size_t i = 0; i < old_parts.size(); ++i)
            for (std::size_t j = i + 1; j < old_parts.size(); ++j) {
                int x = old_parts[i], y = old_parts[j];
                if (slot_of[at(x)].input != slot_of[at(y)].input && black_before(x, y))
                    plan.conflicts.push_back({slot_of[at(x)], slot_of[at(y)]});
            }
        for (int x : comp)
            plan.sources.push_back(x == z ? std::vector<FusionPlan::Slot>{slot_of[at(u)], slot_of[at(v)]}
                                          : std::vector<FusionPlan::Slot>{slot_of[at(x)]});

        auto fused = options_.parallel ? kernels::fuse_profiles(plan) : kernels::serial::fuse_profiles(plan);
        result.stats.max_combinations = std::max(result.stats.max_combinations, fused.combinations);
        result.stats.total_combinations += fused.combinations;
        result.stats.max_profiles = std::max(result.stats.max_profiles, fused.set.size());
        result.stats.steps = k;
        if (options_.check_soundness)
            check_witnesses(g_, st, fused.set, q_);

        for (int key : keys)
            map.erase(key);
        bool dead = fused.set.empty();
        map[z] = std::make_shared<const ProfileSet>(std::move(fused.set));
        for (int x : comp)
            comp_of[at(x)] = z;
        if (observer_)
            observer_(k, st, map);
        if (dead) {
            result.failed_step = k;
            return result;
        }
    }

    const auto& last = *map.begin()->second;
    result.colorable = !last.empty();
    if (result.colorable && options_.witnesses) {
        std::vector<int> coloring(at(n) + 1, 0);
        for (int x = 1; x <= n; ++x)
            coloring[at(x)] = last.witnesses.front()[at(x)];
        if (!is_proper_coloring(g_, coloring, q_))
            throw std::logic_error("assembled coloring is not proper");
        result.coloring = std::move(coloring);
    }
    return result;
}

bool q_coloring(const Graph& g, const ContractionSequence& s, int q, int d)
{
    return QColoringDp(g, s, q, d).run().colorable;
}

std::optional<std::vector<int>> q_coloring_extract(const Graph& g, const ContractionSequence& s, int q, int d)
{
    ColoringOptions opt;
    opt.witnesses = true;
    return QColoringDp(g, s, q, d, opt).run().coloring;
}

bool chromatic_oracle(const Graph& g, int q)
{
    if (g.n() > 12 || q > 4)
        throw CapExceeded("chromatic oracle is limited to 12 vertices and 4 colors");
    if (q < 0)
        throw InvalidInput("q must be nonnegative");
    const int n = g.n();
    if (n == 0)
        return true;
    std::vector<int> color(at(n) + 1, 0);
    // colors are introduced in increasing order, so vertex 1 always gets color 1
    auto place = [&](auto&& self, int v, int used) -> bool {
        if (v > n)
            return true;
        for (int c = 1; c <= std::min(q, used + 1); ++c) {
            bool clash = false;
            for (int x = 1; x < v && !clash; ++x)
                clash = g.adjacent(v, x) && color[at(x)] == c;
            if (clash)
                continue;
            color[at(v)] = c;
            if (self(self, v + 1, std::max(used, c)))
                return true;
        }
        color[at(v)] = 0;
        return false;
    };
    return place(place, 1, 0);
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int q)
{
    if (coloring.size() != at(g.n()) + 1)
        return false;
    for (int v = 1; v <= g.n(); ++v)
        if (coloring[at(v)] < 1 || coloring[at(v)] > q)
            return false;
    for (auto [a, b] : g.edges())
        if (coloring[at(a)] == coloring[at(b)])
            return false;
    return true;
}

} // namespace tww
