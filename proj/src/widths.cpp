#include "tww/widths.hpp"

#include "tww/errors.hpp"
#include "tww/homogeneity.hpp"

#include <algorithm>
#include <map>

namespace tww {

LoopConvention convention_of(Measure m) noexcept
{
    return (m == Measure::oriented || m == Measure::degree) ? LoopConvention::without_loops
                                                             : LoopConvention::with_loops;
}

std::string_view to_string(Measure m) noexcept
{
    switch (m) {
    case Measure::oriented:
        return "oriented";
    case Measure::degree:
        return "degree";
    case Measure::component:
        return "component";
    case Measure::total:
        return "total";
    }
    return "?";
}

Measure parse_measure(std::string_view name)
{
    for (auto m : {Measure::oriented, Measure::degree, Measure::component, Measure::total})
        if (to_string(m) == name)
            return m;
    throw InvalidInput("unknown measure '" + std::string(name) + "'");
}

int StepWidths::get(Measure m) const noexcept
{
    switch (m) {
    case Measure::oriented:
        return oriented;
    case Measure::degree:
        return degree;
    case Measure::component:
        return component;
    case Measure::total:
        return total;
    }
    return 0;
}

namespace {

int max_component(const Trigraph& t)
{
    std::size_t best = 0;
    for (const auto& c : red_components(t))
        best = std::max(best, c.size());
    return static_cast<int>(best);
}

StepWidths widths_of(const Trigraph& looped, const DirectedTrigraph& d, LoopConvention convention)
{
    bool loops = convention == LoopConvention::with_loops;
    StepWidths w;
    looped.vertices().for_each([&](int x) {
        int loop = loops && looped.has_loop(x) ? 1 : 0;
        w.oriented = std::max(w.oriented, d.out_degree(x) + loop);
        w.degree = std::max(w.degree, looped.red_neighbors(x).count() + loop);
    });
    w.component = max_component(looped);
    w.total = loops ? looped.red_edge_count() : static_cast<int>(looped.red_edges().size());
    return w;
}

StepWidths conventioned(const StepWidths& plain, const StepWidths& looped)
{
    return {plain.oriented, plain.degree, looped.component, looped.total};
}

} // namespace

StepWidths step_widths(const Graph& g, const Partition& p, LoopConvention convention)
{
    return widths_of(quotient(g, p, LoopConvention::with_loops), directed_red(g, p), convention);
}

StepWidths step_widths(const Graph& g, const Partition& p)
{
    auto looped = quotient(g, p, LoopConvention::with_loops);
    auto d = directed_red(g, p);
    return conventioned(widths_of(looped, d, LoopConvention::without_loops),
                        widths_of(looped, d, LoopConvention::with_loops));
}

StepWidths step_widths(const ContractionState& state, LoopConvention convention)
{
    bool loops = convention == LoopConvention::with_loops;
    const Trigraph& t = state.trigraph();
    StepWidths w;
    t.vertices().for_each([&](int x) {
        int loop = loops && t.has_loop(x) ? 1 : 0;
        w.oriented = std::max(w.oriented, state.out_arcs(x).count() + loop);
        w.degree = std::max(w.degree, t.red_neighbors(x).count() + loop);
    });
    w.component = max_component(t);
    w.total = t.red_edge_count() - (loops ? 0 : t.loops().count());
    return w;
}

StepWidths step_widths(const ContractionState& state)
{
    return conventioned(step_widths(state, LoopConvention::without_loops),
                        step_widths(state, LoopConvention::with_loops));
}

std::vector<StepWidths> width_profile(const Graph& g, const ContractionSequence& s)
{
    std::vector<StepWidths> out;
    replay(g, s, [&](int, const ContractionState& st) {
        out.push_back(step_widths(st));
        return true;
    });
    return out;
}

int sequence_width(const Graph& g, const ContractionSequence& s, Measure m)
{
    int best = 0;
    for (const auto& w : width_profile(g, s))
        best = std::max(best, w.get(m));
    return best;
}

namespace {

std::vector<int> offenders(const ContractionState& st, Measure m, int d)
{
    const Trigraph& t = st.trigraph();
    std::vector<int> parts;
    switch (m) {
    case Measure::oriented:
        t.vertices().for_each([&](int x) {
            if (st.out_arcs(x).count() > d)
                parts.push_back(x);
        });
        break;
    case Measure::degree:
        t.vertices().for_each([&](int x) {
            if (t.red_neighbors(x).count() > d)
                parts.push_back(x);
        });
        break;
    case Measure::component:
        for (const auto& c : red_components(t))
            if (static_cast<int>(c.size()) > d)
                parts.insert(parts.end(), c.begin(), c.end());
        std::sort(parts.begin(), parts.end());
        break;
    case Measure::total:
        t.vertices().for_each([&](int x) {
            if (t.has_loop(x) || t.red_neighbors(x).any())
                parts.push_back(x);
        });
        break;
    }
    return parts;
}

} // namespace

VerifyResult verify_d_sequence(const Graph& g, const ContractionSequence& s, int d, Measure m)
{
    validate_sequence(g, s);
    VerifyResult result;
    replay(g, s, [&](int step, const ContractionState& st) {
        int value = step_widths(st).get(m);
        if (value <= d)
            return true;
        result.violation = Violation{step, offenders(st, m, d), value};
        return false;
    });
    return result;
}

} // namespace tww
