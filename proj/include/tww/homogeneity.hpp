#pragma once

#include "tww/graph.hpp"
#include "tww/partition.hpp"
#include "tww/trigraph.hpp"

#include <vector>

namespace tww {

/// X and Y are fully joined or fully disjoint. For X == Y: true iff |X| = 1.
/// Distinct overlapping sets throw InvalidInput.
[[nodiscard]] bool is_homogeneous(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Y is homogeneous to X: every y in Y sees the same subset of X, i.e. Y is a
/// module of G[X u Y]. Sets must be disjoint and nonempty.
[[nodiscard]] bool is_homogeneous_to(const Graph& g, const VertexSet& y, const VertexSet& x);

/// Trigraph with arcs X -> Y on red edges where X is not homogeneous to Y.
/// Some red edges carry arcs in both directions.
class DirectedTrigraph {
public:
    DirectedTrigraph() = default;
    explicit DirectedTrigraph(Trigraph undirected);

    [[nodiscard]] const Trigraph& undirected() const noexcept { return base_; }
    [[nodiscard]] const VertexSet& vertices() const noexcept { return base_.vertices(); }
    /// Requires a red edge {x, y}.
    void add_arc(int x, int y);
    [[nodiscard]] bool has_arc(int x, int y) const noexcept { return out_[static_cast<std::size_t>(x)].test(y); }
    [[nodiscard]] const VertexSet& out(int x) const noexcept { return out_[static_cast<std::size_t>(x)]; }
    [[nodiscard]] int out_degree(int x) const noexcept { return out(x).count(); }
    [[nodiscard]] int max_out_degree() const noexcept;
    /// All arcs sorted by (tail, head).
    [[nodiscard]] std::vector<Edge> arcs() const;

    friend bool operator==(const DirectedTrigraph& a, const DirectedTrigraph& b)
    {
        return a.base_ == b.base_ && a.arcs() == b.arcs();
    }

private:
    Trigraph base_;
    std::vector<VertexSet> out_;
};

/// G/P: parts are vertices, black = complete bipartite, red = non-homogeneous.
/// with_loops adds a red loop on every non-singleton part.
[[nodiscard]] Trigraph quotient(const Graph& g, const Partition& p, LoopConvention convention);

/// Directed quotient of G/P (loops dropped).
[[nodiscard]] DirectedTrigraph directed_red(const Graph& g, const Partition& p);

/// Connected components of the red graph, each sorted, ordered by smallest id.
[[nodiscard]] std::vector<std::vector<int>> red_components(const Trigraph& t);

} // namespace tww
