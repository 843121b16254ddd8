#include "tww/sequence.hpp"

#include "tww/errors.hpp"

#include <string>

namespace tww {

ContractionSequence ContractionSequence::prefix(int k) const
{
    if (k < 0 || k > size())
        throw InvalidInput("prefix length out of range");
    return ContractionSequence(n_, std::vector<Contraction>(steps_.begin(), steps_.begin() + k));
}

ContractionState::ContractionState(const Graph& g)
    : g_(&g), t_(from_graph(g, LoopConvention::with_loops))
{
    auto cap = static_cast<std::size_t>(2 * g.n() + 1);
    members_.assign(cap, VertexSet(static_cast<std::size_t>(g.n()) + 1));
    for (int v = 1; v <= g.n(); ++v)
        members_[static_cast<std::size_t>(v)].set(v);
    out_.assign(cap, VertexSet(cap));
}

Trigraph ContractionState::trigraph(LoopConvention convention) const
{
    return convention == LoopConvention::with_loops ? t_ : t_.without_loops();
}

int ContractionState::contract(int u, int v)
{
    int z = next_id();
    if (u < 1 || v < 1 || u >= z || v >= z)
        throw InvalidContraction("part-id out of range in contraction " + std::to_string(u) + " " + std::to_string(v));
    t_.contract(u, v, z);
    ++steps_;

    auto at = [](int id) { return static_cast<std::size_t>(id); };
    members_[at(z)] = members_[at(u)] | members_[at(v)];

    // Arcs into the merged part: W -> Z iff W -> U or W -> V.
    t_.vertices().for_each([&](int w) {
        if (w == z)
            return;
        auto& row = out_[at(w)];
        bool into = row.test(u) || row.test(v);
        row.reset(u);
        row.reset(v);
        if (into)
            row.set(z);
    });

    // Arcs out of Z: on every red neighbor Y, Z is not homogeneous to Y when
    // either half was not, or the halves see different subsets of Y.
    VertexSet arcs(out_[at(z)].size());
    int ru = members_[at(u)].first(), rv = members_[at(v)].first();
    t_.red_neighbors(z).for_each([&](int y) {
        if (out_[at(u)].test(y) || out_[at(v)].test(y) ||
            !g_->neighbors(ru).equal_on(g_->neighbors(rv), members_[at(y)]))
            arcs.set(y);
    });
    out_[at(z)] = std::move(arcs);
    out_[at(u)].clear();
    out_[at(v)].clear();
    return z;
}

Partition ContractionState::partition() const
{
    std::map<int, VertexSet> parts;
    t_.vertices().for_each([&](int id) { parts.emplace(id, members(id)); });
    return Partition(g_->n(), std::move(parts));
}

DirectedTrigraph ContractionState::directed() const
{
    DirectedTrigraph d(t_.without_loops());
    t_.vertices().for_each([&](int x) { out_arcs(x).for_each([&](int y) { d.add_arc(x, y); }); });
    return d;
}

std::vector<int> ContractionState::component_labels() const
{
    std::vector<int> label(static_cast<std::size_t>(t_.capacity()), 0);
    for (const auto& comp : red_components(t_))
        for (int id : comp)
            label[static_cast<std::size_t>(id)] = comp.front();
    return label;
}

std::pair<Trigraph, Partition> apply_sequence(const Graph& g, const ContractionSequence& s, int k,
                                              LoopConvention convention)
{
    if (k < 0 || k > s.size())
        throw InvalidInput("step count " + std::to_string(k) + " out of range");
    std::pair<Trigraph, Partition> out;
    replay(g, s.prefix(k), [&](int step, const ContractionState& st) {
        if (step == k)
            out = {st.trigraph(convention), st.partition()};
        return true;
    });
    return out;
}

void validate_sequence(const Graph& g, const ContractionSequence& s)
{
    replay(g, s, [](int, const ContractionState&) { return true; });
}

} // namespace tww
