#include "tww/builders.hpp"

#include "tww/errors.hpp"
#include "tww/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tww {

std::string_view to_string(BuildOutcome o) noexcept
{
    switch (o) {
    case BuildOutcome::done:
        return "done";
    case BuildOutcome::budget_exceeded:
        return "budget-exceeded";
    case BuildOutcome::stuck:
        return "stuck";
    case BuildOutcome::target_reached:
        return "target-reached";
    case BuildOutcome::no_admissible:
        return "no-admissible-pair";
    }
    return "?";
}

namespace {

using Mask = std::uint32_t;

// Exhaustive search works on vertex masks (bit v-1 = vertex v).
struct SmallGraph {
    int n = 0;
    std::array<Mask, exact_width_cap> adj{};

    explicit SmallGraph(const Graph& g) : n(g.n())
    {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u - 1)] |= Mask{1} << (v - 1);
            adj[static_cast<std::size_t>(v - 1)] |= Mask{1} << (u - 1);
        }
    }

    // Traces of the members of x on y all agree.
    [[nodiscard]] bool homogeneous_to(Mask x, Mask y) const
    {
        int first = std::countr_zero(x);
        Mask trace = adj[static_cast<std::size_t>(first)] & y;
        for (Mask rest = x & (x - 1); rest; rest &= rest - 1)
            if ((adj[static_cast<std::size_t>(std::countr_zero(rest))] & y) != trace)
                return false;
        return true;
    }

    [[nodiscard]] int width(const std::vector<Mask>& parts, Measure m) const
    {
        std::size_t k = parts.size();
        bool loops = convention_of(m) == LoopConvention::with_loops;
        std::vector<int> deg(k, 0);
        std::vector<std::size_t> root(k);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](std::size_t x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        int red = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                bool ij = !homogeneous_to(parts[i], parts[j]);
                bool ji = !homogeneous_to(parts[j], parts[i]);
                if (!ij && !ji)
                    continue;
                ++red;
                if (m == Measure::oriented) {
                    deg[i] += ij ? 1 : 0;
                    deg[j] += ji ? 1 : 0;
                } else {
                    ++deg[i];
                    ++deg[j];
                }
                root[find(i)] = find(j);
            }
        switch (m) {
        case Measure::oriented:
        case Measure::degree: {
            int best = 0;
            for (std::size_t i = 0; i < k; ++i)
                best = std::max(best, deg[i] + (loops && std::popcount(parts[i]) > 1 ? 1 : 0));
            return best;
        }
        case Measure::component: {
            std::vector<int> size(k, 0);
            int best = 0;
            for (std::size_t i = 0; i < k; ++i)
                best = std::max(best, ++size[find(i)]);
            return best;
        }
        case Measure::total:
            for (auto p : parts)
                red += std::popcount(p) > 1 ? 1 : 0;
            return red;
        }
        return 0;
    }
};

std::uint64_t canonical_key(const std::vector<Mask>& parts)
{
    // parts are kept ordered by smallest member, so part index is the
    // restricted-growth label of each vertex
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Mask rest = parts[i]; rest; rest &= rest - 1)
            key |= std::uint64_t{i} << (4 * std::countr_zero(rest));
    return key;
}

struct BudgetHit {};

class ExactSearch {
public:
    ExactSearch(const Graph& g, Measure m, std::int64_t budget) : g_(g), m_(m), budget_(budget) {}

    std::int64_t nodes() const { return nodes_; }

    // Merge path reaching one part with every state's width <= bound, if any.
    bool feasible(int bound)
    {
        bound_ = bound;
        dead_.clear();
        path_.clear();
        std::vector<Mask> parts;
        for (int v = 0; v < g_.n; ++v)
            parts.push_back(Mask{1} << v);
        if (g_.width(parts, m_) > bound)
            return false;
        return dfs(parts);
    }

    ContractionSequence sequence() const
    {
        ContractionSequence s(g_.n);
        std::unordered_map<Mask, int> id;
        for (int v = 0; v < g_.n; ++v)
            id[Mask{1} << v] = v + 1;
        for (auto [a, b] : path_) {
            int ia = id.at(a), ib = id.at(b);
            id[a | b] = s.push(std::min(ia, ib), std::max(ia, ib));
        }
        return s;
    }

private:
    bool dfs(const std::vector<Mask>& parts)
    {
        if (++nodes_ > budget_)
            throw BudgetHit{};
        if (parts.size() <= 1)
            return true;

        struct Child {
            int width;
            std::size_t i, j;
        };
        std::vector<Child> children;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                auto next = merged(parts, i, j);
                int w = g_.width(next, m_);
                if (w <= bound_)
                    children.push_back({w, i, j});
            }
        std::stable_sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.width < b.width; });
        for (const auto& c : children) {
            auto next = merged(parts, c.i, c.j);
            auto key = canonical_key(next);
            if (dead_.contains(key))
                continue;
            path_.emplace_back(parts[c.i], parts[c.j]);
            if (dfs(next))
                return true;
            path_.pop_back();
            dead_.insert(key);
        }
        return false;
    }

    static std::vector<Mask> merged(const std::vector<Mask>& parts, std::size_t i, std::size_t j)
    {
        std::vector<Mask> next = parts;
        next[i] |= next[j];
        next.erase(next.begin() + static_cast<long>(j));
        return next;
    }

    SmallGraph g_;
    Measure m_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    int bound_ = 0;
    std::unordered_set<std::uint64_t> dead_;
    std::vector<std::pair<Mask, Mask>> path_;
};

BuildReport finish(const Graph& g, ContractionSequence seq, Measure m, BuildOutcome outcome)
{
    BuildReport r;
    r.achieved_width = sequence_width(g, seq, m);
    r.sequence = std::move(seq);
    r.measure = m;
    r.outcome = outcome;
    return r;
}

} // namespace

BuildReport exact_width(const Graph& g, Measure m, std::int64_t node_budget)
{
    if (g.n() > exact_width_cap)
        throw CapExceeded("exact search is limited to " + std::to_string(exact_width_cap) + " vertices");
    BuildReport greedy = greedy_sequence(g, m);
    ExactSearch search(g, m, node_budget);
    int lower = SmallGraph(g).width([&] {
        std::vector<Mask> parts;
        for (int v = 0; v < g.n(); ++v)
            parts.push_back(Mask{1} << v);
        return parts;
    }(), m);

    for (int bound = lower; bound < greedy.achieved_width; ++bound) {
        try {
            if (search.feasible(bound)) {
                BuildReport r = finish(g, search.sequence(), m, BuildOutcome::done);
                r.exact = true;
                r.lower_bound = r.achieved_width;
                r.nodes_explored = search.nodes();
                return r;
            }
        } catch (const BudgetHit&) {
            greedy.outcome = BuildOutcome::budget_exceeded;
            greedy.lower_bound = bound;
            greedy.nodes_explored = search.nodes();
            return greedy;
        }
    }
    greedy.exact = true;
    greedy.lower_bound = greedy.achieved_width;
    greedy.nodes_explored = search.nodes();
    return greedy;
}

BuildReport greedy_sequence(const Graph& g, Measure m)
{
    ContractionState st(g);
    ContractionSequence seq(g.n());
    while (st.order() > 1) {
        auto scores = kernels::score_pairs(st, m);
        auto best = std::min_element(scores.begin(), scores.end(),
                                     [](const auto& a, const auto& b) { return a.width < b.width; });
        st.contract(best->u, best->v);
        seq.push(best->u, best->v);
    }
    return finish(g, std::move(seq), m, BuildOutcome::done);
}

namespace pairs {

PairPredicate any_pair()
{
    return [](const Trigraph&, int, int) { return true; };
}

PairPredicate twins_or_adjacent()
{
    return [](const Trigraph& t, int u, int v) {
        if (t.black(u, v) || t.red(u, v))
            return true;
        return (t.black_neighbors(u) | t.red_neighbors(u)) == (t.black_neighbors(v) | t.red_neighbors(v));
    };
}

} // namespace pairs

BuildReport contractible_sequence(const Graph& g, int d, const PairPredicate& pred)
{
    ContractionState st(g);
    ContractionSequence seq(g.n());
    while (st.order() > 1) {
        const Trigraph& t = st.trigraph();
        auto live = st.live().members();
        int best = std::numeric_limits<int>::max(), bu = 0, bv = 0;
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                int u = live[i], v = live[j];
                if (!pred(t, u, v))
                    continue;
                VertexSet adj = t.black_neighbors(u) | t.red_neighbors(u) | t.black_neighbors(v) | t.red_neighbors(v);
                adj.reset(u);
                adj.reset(v);
                int deg = adj.count();
                if (deg < best) {
                    best = deg;
                    bu = u;
                    bv = v;
                }
            }
        if (best > d) {
            BuildReport r = finish(g, std::move(seq), Measure::oriented, BuildOutcome::stuck);
            r.stuck_degree = best == std::numeric_limits<int>::max() ? -1 : best;
            return r;
        }
        st.contract(bu, bv);
        seq.push(bu, bv);
    }
    return finish(g, std::move(seq), Measure::oriented, BuildOutcome::done);
}

BuildReport partial_sequence_to_degree(const Graph& g, int d, int delta)
{
    ContractionState st(g);
    ContractionSequence seq(g.n());
    BuildOutcome outcome = BuildOutcome::target_reached;
    while (st.trigraph().max_total_degree() > delta) {
        auto scores = kernels::score_pairs(st, Measure::degree);
        const kernels::PairScore* best = nullptr;
        for (const auto& s : scores) {
            if (s.width > d)
                continue;
            if (!best || std::pair(s.merged_red, s.merged_total) < std::pair(best->merged_red, best->merged_total))
                best = &s;
        }
        if (!best) {
            outcome = BuildOutcome::no_admissible;
            break;
        }
        int u = best->u, v = best->v;
        st.contract(u, v);
        seq.push(u, v);
    }
    return finish(g, std::move(seq), Measure::degree, outcome);
}

} // namespace tww
