#include "tww/graph.hpp"

#include "tww/errors.hpp"

#include <algorithm>
#include <string>

namespace tww {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1, VertexSet(static_cast<std::size_t>(n) + 1))
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n)
{
    for (auto [u, v] : edges)
        if (!add_edge(u, v))
            throw InvalidInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

bool Graph::add_edge(int u, int v)
{
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw InvalidInput("loop on vertex " + std::to_string(u));
    if (adjacent(u, v))
        return false;
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
    ++m_;
    return true;
}

int Graph::max_degree() const noexcept
{
    int best = 0;
    for (int v = 1; v <= n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

VertexSet Graph::all() const
{
    VertexSet s = empty_set();
    for (int v = 1; v <= n_; ++v)
        s.set(v);
    return s;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw InvalidInput("permutation size mismatch");
    Graph h(n_);
    for (auto [u, v] : edges())
        h.add_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
    if (h.m() != m_)
        throw InvalidInput("not a permutation");
    return h;
}

Graph Graph::induced(const VertexSet& keep) const
{
    std::vector<int> index(static_cast<std::size_t>(n_) + 1, 0);
    int k = 0;
    keep.for_each([&](int v) { index[static_cast<std::size_t>(v)] = ++k; });
    Graph h(k);
    for (auto [u, v] : edges())
        if (keep.test(u) && keep.test(v))
            h.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return h;
}

} // namespace tww
