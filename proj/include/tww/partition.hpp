#pragma once

#include "tww/vertex_set.hpp"

#include <map>
#include <vector>

namespace tww {

/// Labeled partition of the vertex set 1..n of some graph.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless parts are nonempty, disjoint and cover 1..n.
    Partition(int n, std::map<int, VertexSet> parts);
    /// Part v = {v} for every vertex.
    [[nodiscard]] static Partition singletons(int n);
    /// Convenience for tests: parts given as member lists, ids assigned n+1, n+2, ...
    /// to non-singletons and v to singleton {v}.
    [[nodiscard]] static Partition from_lists(int n, const std::vector<std::vector<int>>& parts);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] const std::map<int, VertexSet>& parts() const noexcept { return parts_; }
    [[nodiscard]] const VertexSet& part(int id) const;
    [[nodiscard]] bool contains(int id) const { return parts_.contains(id); }
    /// Id of the part holding vertex v.
    [[nodiscard]] int part_of(int v) const;

    void merge(int a, int b, int new_id);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int n_ = 0;
    std::map<int, VertexSet> parts_;
};

} // namespace tww
