#include "tww/homogeneity.hpp"

#include "tww/errors.hpp"

#include <algorithm>

namespace tww {

namespace {

void require_disjoint_nonempty(const VertexSet& x, const VertexSet& y)
{
    if (x.empty() || y.empty())
        throw InvalidInput("homogeneity test on an empty set");
    if (x.intersects(y))
        throw InvalidInput("homogeneity test on overlapping sets");
}

enum class Relation { none, complete, mixed };

Relation relation(const Graph& g, const VertexSet& x, const VertexSet& y)
{
    int size_y = y.count();
    bool saw_none = false, saw_all = false;
    bool mixed = false;
    x.for_each([&](int v) {
        if (mixed)
            return;
        int k = g.neighbors(v).count_and(y);
        if (k == 0)
            saw_none = true;
        else if (k == size_y)
            saw_all = true;
        else
            mixed = true;
    });
    if (mixed || (saw_none && saw_all))
        return Relation::mixed;
    return saw_all ? Relation::complete : Relation::none;
}

} // namespace

bool is_homogeneous(const Graph& g, const VertexSet& x, const VertexSet& y)
{
    if (x == y) {
        if (x.empty())
            throw InvalidInput("homogeneity test on an empty set");
        return x.count() == 1;
    }
    require_disjoint_nonempty(x, y);
    return relation(g, x, y) != Relation::mixed;
}

bool is_homogeneous_to(const Graph& g, const VertexSet& y, const VertexSet& x)
{
    require_disjoint_nonempty(x, y);
    int rep = y.first();
    bool same = true;
    y.for_each([&](int v) { same = same && g.neighbors(v).equal_on(g.neighbors(rep), x); });
    return same;
}

DirectedTrigraph::DirectedTrigraph(Trigraph undirected)
    : base_(std::move(undirected)),
      out_(static_cast<std::size_t>(base_.capacity()), VertexSet(static_cast<std::size_t>(base_.capacity())))
{
}

void DirectedTrigraph::add_arc(int x, int y)
{
    if (!base_.red(x, y))
        throw InvalidInput("arc without a red edge");
    out_[static_cast<std::size_t>(x)].set(y);
}

int DirectedTrigraph::max_out_degree() const noexcept
{
    int best = 0;
    vertices().for_each([&](int x) { best = std::max(best, out_degree(x)); });
    return best;
}

std::vector<Edge> DirectedTrigraph::arcs() const
{
    std::vector<Edge> out;
    vertices().for_each([&](int x) { this->out(x).for_each([&](int y) { out.emplace_back(x, y); }); });
    return out;
}

Trigraph quotient(const Graph& g, const Partition& p, LoopConvention convention)
{
    int capacity = std::max(g.n() + 1, p.parts().empty() ? 0 : p.parts().rbegin()->first + 1);
    Trigraph t(capacity, convention);
    for (const auto& [id, members] : p.parts()) {
        t.add_vertex(id);
        if (members.count() > 1)
            t.add_loop(id);
    }
    for (auto a = p.parts().begin(); a != p.parts().end(); ++a)
        for (auto b = std::next(a); b != p.parts().end(); ++b)
            switch (relation(g, a->second, b->second)) {
            case Relation::complete:
                t.add_black(a->first, b->first);
                break;
            case Relation::mixed:
                t.add_red(a->first, b->first);
                break;
            case Relation::none:
                break;
            }
    return t;
}

DirectedTrigraph directed_red(const Graph& g, const Partition& p)
{
    DirectedTrigraph d(quotient(g, p, LoopConvention::without_loops));
    for (const auto& [x, xs] : p.parts())
        for (const auto& [y, ys] : p.parts())
            if (x != y && d.undirected().red(x, y) && !is_homogeneous_to(g, xs, ys))
                d.add_arc(x, y);
    return d;
}

std::vector<std::vector<int>> red_components(const Trigraph& t)
{
    std::vector<std::vector<int>> out;
    VertexSet unseen = t.vertices();
    for (int start = unseen.first(); start >= 0; start = unseen.first()) {
        VertexSet comp(unseen.size());
        comp.set(start);
        VertexSet frontier = comp;
        while (frontier.any()) {
            VertexSet next(unseen.size());
            frontier.for_each([&](int u) { next |= t.red_neighbors(u); });
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        unseen -= comp;
        out.push_back(comp.members());
    }
    return out;
}

} // namespace tww
