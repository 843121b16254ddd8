#include "tww/decomposition.hpp"

#include "tww/errors.hpp"

#include <algorithm>
#include <functional>

namespace tww {

BranchDecomposition::BranchDecomposition(int n, std::vector<int> parent, std::vector<int> vertex, bool linear)
    : n_(n), linear_(linear), parent_(std::move(parent)), vertex_(std::move(vertex))
{
    auto fail = [](const std::string& why) { throw InvalidInput("branch decomposition: " + why); };
    int size = static_cast<int>(parent_.size());
    if (n < 1)
        fail("needs at least one vertex");
    if (vertex_.size() != parent_.size())
        fail("parent and vertex tables differ in length");

    children_.assign(parent_.size(), {});
    leaf_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int node = 1; node <= size; ++node) {
        int p = parent_[idx(node)];
        if (p < 0 || p > size || p == node)
            fail("node " + std::to_string(node) + " has bad parent " + std::to_string(p));
        if (p == 0) {
            if (root_ != 0)
                fail("more than one root");
            root_ = node;
        } else {
            children_[idx(p)].push_back(node);
        }
        int v = vertex_[idx(node)];
        if (v < 0 || v > n)
            fail("node " + std::to_string(node) + " maps to bad vertex " + std::to_string(v));
        if (v != 0) {
            if (leaf_[static_cast<std::size_t>(v)] != 0)
                fail("vertex " + std::to_string(v) + " sits on two leaves");
            leaf_[static_cast<std::size_t>(v)] = node;
        }
    }
    if (root_ == 0)
        fail("no root");
    for (int v = 1; v <= n; ++v)
        if (leaf_[static_cast<std::size_t>(v)] == 0)
            fail("vertex " + std::to_string(v) + " has no leaf");

    // every node must reach the root; a cycle leaves some node unvisited
    std::vector<char> seen(parent_.size(), 0);
    std::vector<int> stack{root_};
    int reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        seen[idx(x)] = 1;
        ++reached;
        for (int c : children_[idx(x)])
            stack.push_back(c);
    }
    if (reached != size)
        fail("parent links contain a cycle");

    for (int node = 1; node <= size; ++node) {
        auto arity = children_[idx(node)].size();
        bool leaf = vertex_[idx(node)] != 0;
        if (leaf && arity != 0)
            fail("leaf " + std::to_string(node) + " has children");
        if (!leaf && arity == 0)
            fail("internal node " + std::to_string(node) + " has no children");
        if (!leaf && node != root_ && arity != 2)
            fail("internal node " + std::to_string(node) + " must have two children");
        if (!leaf && node == root_ && arity < 2)
            fail("root must have at least two children");
    }
    if (linear_ && !linear_shape())
        fail("flagged linear but internal nodes do not form a path");
}

BranchDecomposition BranchDecomposition::linear(const std::vector<int>& order)
{
    int n = static_cast<int>(order.size());
    if (n == 0)
        throw InvalidInput("linear decomposition of an empty order");
    if (n == 1)
        return BranchDecomposition(1, {0}, {order[0]}, true);
    // leaves are nodes 1..n in order, spine nodes n+1..2n-1 from the bottom up
    std::vector<int> parent(static_cast<std::size_t>(2 * n - 1), 0), vertex(parent.size(), 0);
    for (int k = 0; k < n; ++k)
        vertex[static_cast<std::size_t>(k)] = order[static_cast<std::size_t>(k)];
    parent[0] = n + 1;
    for (int k = 1; k < n; ++k)
        parent[static_cast<std::size_t>(k)] = n + k;
    for (int s = n + 1; s < 2 * n - 1; ++s)
        parent[static_cast<std::size_t>(s - 1)] = s + 1;
    return BranchDecomposition(n, std::move(parent), std::move(vertex), true);
}

BranchDecomposition BranchDecomposition::merge_tree(const ContractionSequence& s)
{
    int n = s.n();
    if (!s.complete() && n > 1)
        throw InvalidInput("merge tree needs a full sequence");
    std::vector<int> parent(static_cast<std::size_t>(2 * n - 1), 0), vertex(parent.size(), 0);
    for (int v = 1; v <= n; ++v)
        vertex[static_cast<std::size_t>(v - 1)] = v;
    for (int k = 1; k <= s.size(); ++k) {
        const auto& c = s.step(k);
        for (int x : {c.u, c.v}) {
            if (x < 1 || x >= n + k || parent[static_cast<std::size_t>(x - 1)] != 0)
                throw InvalidInput("sequence step " + std::to_string(k) + " is not a merge of live parts");
            parent[static_cast<std::size_t>(x - 1)] = n + k;
        }
    }
    return BranchDecomposition(n, std::move(parent), std::move(vertex));
}

bool BranchDecomposition::linear_shape() const
{
    // internal-internal adjacencies form a path iff no internal node has three
    // internal neighbours (acyclicity and connectivity come from the tree)
    for (int node = 1; node <= size(); ++node) {
        if (is_leaf(node))
            continue;
        int inner = 0;
        if (parent(node) != 0)
            ++inner;
        for (int c : children(node))
            inner += is_leaf(c) ? 0 : 1;
        if (inner > 2)
            return false;
    }
    return true;
}

std::vector<int> BranchDecomposition::linear_order() const
{
    if (!linear_shape())
        throw InvalidInput("decomposition is not linear");
    if (size() == 1)
        return {vertex(root_)};

    auto inner_neighbours = [&](int node) {
        std::vector<int> out;
        if (parent(node) != 0)
            out.push_back(parent(node));
        for (int c : children(node))
            if (!is_leaf(c))
                out.push_back(c);
        return out;
    };
    std::vector<int> depth(parent_.size(), 0);
    std::function<void(int)> walk = [&](int x) {
        for (int c : children(x)) {
            depth[idx(c)] = depth[idx(x)] + 1;
            walk(c);
        }
    };
    walk(root_);

    int start = 0;
    for (int node = 1; node <= size(); ++node)
        if (!is_leaf(node) && inner_neighbours(node).size() <= 1 &&
            (start == 0 || depth[idx(node)] > depth[idx(start)]))
            start = node;

    std::vector<int> order;
    int prev = 0, cur = start;
    while (cur != 0) {
        std::vector<int> leaves;
        for (int c : children(cur))
            if (is_leaf(c))
                leaves.push_back(vertex(c));
        std::sort(leaves.begin(), leaves.end());
        order.insert(order.end(), leaves.begin(), leaves.end());
        int next = 0;
        for (int x : inner_neighbours(cur))
            if (x != prev)
                next = x;
        prev = cur;
        cur = next;
    }
    return order;
}

std::vector<VertexSet> BranchDecomposition::leaf_sets() const
{
    std::vector<VertexSet> below(parent_.size() + 1, VertexSet(static_cast<std::size_t>(n_) + 1));
    std::function<void(int)> walk = [&](int x) {
        if (is_leaf(x))
            below[static_cast<std::size_t>(x)].set(vertex(x));
        for (int c : children(x)) {
            walk(c);
            below[static_cast<std::size_t>(x)] |= below[static_cast<std::size_t>(c)];
        }
    };
    walk(root_);
    return below;
}

std::vector<VertexSet> BranchDecomposition::cut_sides() const
{
    auto below = leaf_sets();
    std::vector<VertexSet> out;
    const auto& top = children(root_);
    for (int node = 1; node <= size(); ++node) {
        if (node == root_)
            continue;
        if (top.size() == 2 && node == top[1])
            continue;
        out.push_back(below[static_cast<std::size_t>(node)]);
    }
    return out;
}

} // namespace tww
