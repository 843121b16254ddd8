#pragma once

#include "tww/vertex_set.hpp"

#include <utility>
#include <vector>

namespace tww {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n, stored as bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws InvalidInput on loops, out-of-range ids or duplicate edges.
    Graph(int n, const std::vector<Edge>& edges);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int m() const noexcept { return m_; }

    /// Adds {u,v}; returns false if already present. Loops and bad ids throw.
    bool add_edge(int u, int v);
    [[nodiscard]] bool adjacent(int u, int v) const noexcept { return adj_[static_cast<std::size_t>(u)].test(v); }
    [[nodiscard]] const VertexSet& neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(int v) const noexcept { return neighbors(v).count(); }
    [[nodiscard]] int max_degree() const noexcept;

    /// All vertices as a set of size n+1.
    [[nodiscard]] VertexSet all() const;
    [[nodiscard]] VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_) + 1); }

    /// Sorted (u < v) edge list.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Relabels vertex v as perm[v-1]; perm is a permutation of 1..n.
    [[nodiscard]] Graph relabeled(const std::vector<int>& perm) const;
    [[nodiscard]] Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_; // index 0 unused
};

} // namespace tww
