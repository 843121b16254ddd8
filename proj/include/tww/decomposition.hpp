#pragma once

#include "tww/graph.hpp"
#include "tww/sequence.hpp"
#include "tww/vertex_set.hpp"

#include <vector>

namespace tww {

/// Rooted branch decomposition. Nodes are 1..size(); parent 0 marks the
/// root; leaves carry a vertex id, internal nodes carry 0. The root may
/// have any arity >= 2, every other internal node has exactly two children.
class BranchDecomposition {
public:
    BranchDecomposition() = default;
    /// parent[k] and vertex[k] describe node k+1. Throws InvalidInput.
    BranchDecomposition(int n, std::vector<int> parent, std::vector<int> vertex, bool linear = false);

    /// Caterpillar: the deepest node holds order[0] and order[1], the root holds the last vertex.
    [[nodiscard]] static BranchDecomposition linear(const std::vector<int>& order);
    /// The merge tree of a full sequence: vertex v is node v, step k creates node n+k.
    [[nodiscard]] static BranchDecomposition merge_tree(const ContractionSequence& s);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(parent_.size()); }
    [[nodiscard]] int root() const noexcept { return root_; }
    [[nodiscard]] int parent(int node) const { return parent_.at(idx(node)); }
    [[nodiscard]] const std::vector<int>& children(int node) const { return children_.at(idx(node)); }
    [[nodiscard]] int vertex(int node) const { return vertex_.at(idx(node)); }
    [[nodiscard]] bool is_leaf(int node) const { return vertex(node) != 0; }
    [[nodiscard]] int leaf_of(int v) const { return leaf_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] bool is_linear() const noexcept { return linear_; }
    [[nodiscard]] const std::vector<int>& parents() const noexcept { return parent_; }
    [[nodiscard]] const std::vector<int>& vertices() const noexcept { return vertex_; }

    /// True iff the internal nodes induce a path of the underlying tree.
    [[nodiscard]] bool linear_shape() const;
    /// Leaf order along the internal path, starting from the end furthest
    /// from the root; leaves at one node ascend by id. Requires linear_shape().
    [[nodiscard]] std::vector<int> linear_order() const;

    /// Vertex set below each node, indexed by node (entry 0 unused).
    [[nodiscard]] std::vector<VertexSet> leaf_sets() const;
    /// One side of every edge's bipartition (the side below the edge),
    /// skipping the duplicate edge below a binary root.
    [[nodiscard]] std::vector<VertexSet> cut_sides() const;

    friend bool operator==(const BranchDecomposition& a, const BranchDecomposition& b)
    {
        return a.n_ == b.n_ && a.parent_ == b.parent_ && a.vertex_ == b.vertex_ && a.linear_ == b.linear_;
    }

private:
    static std::size_t idx(int node) { return static_cast<std::size_t>(node - 1); }

    int n_ = 0;
    int root_ = 0;
    bool linear_ = false;
    std::vector<int> parent_;
    std::vector<int> vertex_;
    std::vector<std::vector<int>> children_;
    std::vector<int> leaf_; // by vertex, entry 0 unused
};

} // namespace tww
