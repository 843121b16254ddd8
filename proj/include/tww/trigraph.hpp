#pragma once

#include "tww/graph.hpp"
#include "tww/vertex_set.hpp"

#include <vector>

namespace tww {

/// Whether contracted (non-singleton) parts carry a red loop.
///
/// Oriented and degree widths are computed without loops; component and
/// total widths with them.
enum class LoopConvention { with_loops, without_loops };

/// A graph whose edges are black or red, on a sparse set of part-ids.
///
/// Adjacency is kept as bit rows over the id range [0, capacity). Black and
/// red edge sets are disjoint and black never has loops.
class Trigraph {
public:
    Trigraph() = default;
    Trigraph(int capacity, LoopConvention convention);

    [[nodiscard]] LoopConvention convention() const noexcept { return convention_; }
    [[nodiscard]] int capacity() const noexcept { return static_cast<int>(black_.size()); }
    [[nodiscard]] const VertexSet& vertices() const noexcept { return vertices_; }
    [[nodiscard]] int order() const noexcept { return vertices_.count(); }
    [[nodiscard]] bool alive(int id) const noexcept { return vertices_.test(id); }

    void add_vertex(int id);
    /// Both ends must be alive and distinct; a red edge is replaced.
    void add_black(int u, int v);
    void add_red(int u, int v);
    /// No-op under without_loops.
    void add_loop(int u);

    [[nodiscard]] bool black(int u, int v) const noexcept { return alive(u) && black_[idx(u)].test(v); }
    [[nodiscard]] bool red(int u, int v) const noexcept { return alive(u) && red_[idx(u)].test(v); }
    [[nodiscard]] bool has_loop(int u) const noexcept { return loops_.test(u); }
    [[nodiscard]] const VertexSet& black_neighbors(int u) const noexcept { return black_[idx(u)]; }
    [[nodiscard]] const VertexSet& red_neighbors(int u) const noexcept { return red_[idx(u)]; }
    [[nodiscard]] const VertexSet& loops() const noexcept { return loops_; }

    /// Red degree; a loop counts 1.
    [[nodiscard]] int red_degree(int u) const noexcept { return red_[idx(u)].count() + (has_loop(u) ? 1 : 0); }
    [[nodiscard]] int max_red_degree() const noexcept;
    /// Black plus red edges to other vertices (loops excluded).
    [[nodiscard]] int total_degree(int u) const noexcept { return black_[idx(u)].count() + red_[idx(u)].count(); }
    [[nodiscard]] int max_total_degree() const noexcept;
    /// Red edges, loops counted as edges.
    [[nodiscard]] int red_edge_count() const noexcept;

    [[nodiscard]] std::vector<Edge> black_edges() const;
    /// Non-loop red edges, (u < v) sorted.
    [[nodiscard]] std::vector<Edge> red_edges() const;

    /// Merges u and v into new_id in place.
    void contract(int u, int v, int new_id);
    /// Same trigraph with loops dropped and convention set to without_loops.
    [[nodiscard]] Trigraph without_loops() const;

    friend bool operator==(const Trigraph& a, const Trigraph& b) noexcept;

private:
    [[nodiscard]] static std::size_t idx(int id) noexcept { return static_cast<std::size_t>(id); }
    void ensure_capacity(int id);

    LoopConvention convention_ = LoopConvention::without_loops;
    VertexSet vertices_;
    VertexSet loops_;
    VertexSet retired_;
    std::vector<VertexSet> black_;
    std::vector<VertexSet> red_;
};

/// All-black trigraph on ids 1..n.
[[nodiscard]] Trigraph from_graph(const Graph& g, LoopConvention convention = LoopConvention::without_loops);

/// Returns t with u and v merged into new_id. Throws InvalidContraction on
/// dead, equal or non-fresh ids.
[[nodiscard]] Trigraph contract(const Trigraph& t, int u, int v, int new_id);

} // namespace tww
