#include "tww/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace tww::kernels {

namespace {

struct Snapshot {
    const ContractionState& st;
    std::vector<int> live;
    std::vector<int> red_deg;    // by id, loops excluded
    std::vector<int> out_deg;    // by id
    std::vector<int> comp;       // component label by id
    std::vector<int> comp_size;  // by label
    std::vector<int> by_red_deg; // live ids, descending red degree
    std::vector<int> by_out_deg;
    std::vector<int> comps_by_size; // labels, descending size
    int red_edges = 0;
    int loops = 0;

    explicit Snapshot(const ContractionState& s) : st(s), live(s.live().members())
    {
        const Trigraph& t = st.trigraph();
        auto cap = static_cast<std::size_t>(t.capacity());
        red_deg.assign(cap, 0);
        out_deg.assign(cap, 0);
        comp_size.assign(cap, 0);
        for (int x : live) {
            red_deg[idx(x)] = t.red_neighbors(x).count();
            out_deg[idx(x)] = st.out_arcs(x).count();
            red_edges += red_deg[idx(x)];
        }
        red_edges /= 2;
        loops = t.loops().count();
        comp = st.component_labels();
        for (int x : live)
            if (comp_size[idx(comp[idx(x)])]++ == 0)
                comps_by_size.push_back(comp[idx(x)]);
        std::stable_sort(comps_by_size.begin(), comps_by_size.end(),
                         [&](int a, int b) { return comp_size[idx(a)] > comp_size[idx(b)]; });
        by_red_deg = live;
        std::stable_sort(by_red_deg.begin(), by_red_deg.end(),
                         [&](int a, int b) { return red_deg[idx(a)] > red_deg[idx(b)]; });
        by_out_deg = live;
        std::stable_sort(by_out_deg.begin(), by_out_deg.end(),
                         [&](int a, int b) { return out_deg[idx(a)] > out_deg[idx(b)]; });
    }

    static std::size_t idx(int id) { return static_cast<std::size_t>(id); }

    PairScore score(int u, int v, Measure m) const
    {
        const Trigraph& t = st.trigraph();
        const VertexSet& bu = t.black_neighbors(u);
        const VertexSet& bv = t.black_neighbors(v);
        VertexSet adj = bu | bv | t.red_neighbors(u) | t.red_neighbors(v);
        adj.reset(u);
        adj.reset(v);
        VertexSet red_z = adj - (bu & bv);

        PairScore out{u, v, 0, red_z.count(), adj.count()};
        switch (m) {
        case Measure::degree:
            out.width = degree_after(u, v, red_z);
            break;
        case Measure::oriented:
            out.width = oriented_after(u, v, red_z);
            break;
        case Measure::component:
            out.width = component_after(u, v, red_z);
            break;
        case Measure::total: {
            int e = red_edges - red_deg[idx(u)] - red_deg[idx(v)] + (t.red(u, v) ? 1 : 0) + out.merged_red;
            int l = loops - (t.has_loop(u) ? 1 : 0) - (t.has_loop(v) ? 1 : 0) + 1;
            out.width = e + l;
            break;
        }
        }
        return out;
    }

    int degree_after(int u, int v, const VertexSet& red_z) const
    {
        const Trigraph& t = st.trigraph();
        const VertexSet& ru = t.red_neighbors(u);
        const VertexSet& rv = t.red_neighbors(v);
        int best = red_z.count();
        VertexSet touched = ru | rv | red_z;
        touched.for_each([&](int x) {
            if (x == u || x == v)
                return;
            int deg = red_deg[idx(x)] - (ru.test(x) ? 1 : 0) - (rv.test(x) ? 1 : 0) + (red_z.test(x) ? 1 : 0);
            best = std::max(best, deg);
        });
        for (int x : by_red_deg) {
            if (red_deg[idx(x)] <= best)
                break;
            if (x != u && x != v && !touched.test(x)) {
                best = red_deg[idx(x)];
                break;
            }
        }
        return best;
    }

    int oriented_after(int u, int v, const VertexSet& red_z) const
    {
        const Graph& g = st.graph();
        const VertexSet& ou = st.out_arcs(u);
        const VertexSet& ov = st.out_arcs(v);
        int ru = st.members(u).first(), rv = st.members(v).first();
        int best = 0;
        red_z.for_each([&](int y) {
            if (ou.test(y) || ov.test(y) || !g.neighbors(ru).equal_on(g.neighbors(rv), st.members(y)))
                ++best;
        });
        for (int w : by_out_deg) {
            if (out_deg[idx(w)] <= best)
                break;
            if (w == u || w == v)
                continue;
            const VertexSet& ow = st.out_arcs(w);
            best = std::max(best, out_deg[idx(w)] - (ow.test(u) && ow.test(v) ? 1 : 0));
        }
        return best;
    }

    int component_after(int u, int v, const VertexSet& red_z) const
    {
        // components only merge: the new one absorbs those of u, v and z's red neighbors
        std::vector<int> merged{comp[idx(u)], comp[idx(v)]};
        red_z.for_each([&](int x) { merged.push_back(comp[idx(x)]); });
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        int size = -1;
        for (int c : merged)
            size += comp_size[idx(c)];
        for (int c : comps_by_size) {
            if (comp_size[idx(c)] <= size)
                break;
            if (!std::binary_search(merged.begin(), merged.end(), c))
                return comp_size[idx(c)];
        }
        return size;
    }
};

std::vector<std::pair<int, int>> live_pairs(const std::vector<int>& live)
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(live.size() * (live.size() - (live.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            pairs.emplace_back(live[i], live[j]);
    return pairs;
}

} // namespace

std::vector<PairScore> score_pairs(const ContractionState& state, Measure m)
{
    Snapshot snap(state);
    auto pairs = live_pairs(snap.live);
    std::vector<PairScore> out(pairs.size());
    auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) {
        auto [u, v] = pairs[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = snap.score(u, v, m);
    }
    return out;
}

namespace serial {

std::vector<PairScore> score_pairs(const ContractionState& state, Measure m)
{
    std::vector<PairScore> out;
    for (auto [u, v] : live_pairs(state.live().members())) {
        ContractionState trial = state;
        int z = trial.contract(u, v);
        const Trigraph& t = trial.trigraph();
        out.push_back({u, v, step_widths(trial).get(m), t.red_neighbors(z).count(), t.total_degree(z)});
    }
    return out;
}

} // namespace serial

} // namespace tww::kernels
