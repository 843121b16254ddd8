#pragma once

#include "tww/graph.hpp"
#include "tww/homogeneity.hpp"
#include "tww/partition.hpp"
#include "tww/trigraph.hpp"

#include <utility>
#include <vector>

namespace tww {

struct Contraction {
    int u = 0;
    int v = 0;
    friend bool operator==(const Contraction&, const Contraction&) = default;
};

/// Ordered merges on an n-vertex graph. Step k (1-based) creates part-id n+k.
class ContractionSequence {
public:
    ContractionSequence() = default;
    explicit ContractionSequence(int n) : n_(n) {}
    ContractionSequence(int n, std::vector<Contraction> steps) : n_(n), steps_(std::move(steps)) {}

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(steps_.size()); }
    [[nodiscard]] const std::vector<Contraction>& steps() const noexcept { return steps_; }
    [[nodiscard]] const Contraction& step(int k) const { return steps_.at(static_cast<std::size_t>(k - 1)); }
    [[nodiscard]] bool complete() const noexcept { return n_ >= 1 && size() == n_ - 1; }
    [[nodiscard]] int created_id(int k) const noexcept { return n_ + k; }

    /// Appends a merge and returns the id it creates.
    int push(int u, int v)
    {
        steps_.push_back({u, v});
        return n_ + size();
    }
    [[nodiscard]] ContractionSequence prefix(int k) const;

    friend bool operator==(const ContractionSequence&, const ContractionSequence&) = default;

private:
    int n_ = 0;
    std::vector<Contraction> steps_;
};

/// Incremental replay of contractions on a graph.
///
/// Holds the current trigraph (with red loops on non-singleton parts), the
/// members of each part, and the red out-arcs of the directed quotient. The
/// graph must outlive the state.
class ContractionState {
public:
    explicit ContractionState(const Graph& g);

    [[nodiscard]] const Graph& graph() const noexcept { return *g_; }
    [[nodiscard]] int steps_done() const noexcept { return steps_; }
    [[nodiscard]] int next_id() const noexcept { return g_->n() + steps_ + 1; }
    [[nodiscard]] int order() const noexcept { return t_.order(); }
    [[nodiscard]] bool alive(int id) const noexcept { return t_.alive(id); }
    [[nodiscard]] const VertexSet& live() const noexcept { return t_.vertices(); }

    /// Current trigraph under with_loops.
    [[nodiscard]] const Trigraph& trigraph() const noexcept { return t_; }
    [[nodiscard]] Trigraph trigraph(LoopConvention convention) const;
    [[nodiscard]] const VertexSet& members(int id) const noexcept { return members_[static_cast<std::size_t>(id)]; }
    [[nodiscard]] const VertexSet& out_arcs(int id) const noexcept { return out_[static_cast<std::size_t>(id)]; }

    /// Contracts u and v into next_id(); returns that id. Throws InvalidContraction.
    int contract(int u, int v);

    [[nodiscard]] Partition partition() const;
    [[nodiscard]] DirectedTrigraph directed() const;

    /// Red component label of every live id (label = smallest id in the component).
    [[nodiscard]] std::vector<int> component_labels() const;

private:
    const Graph* g_;
    int steps_ = 0;
    Trigraph t_;
    std::vector<VertexSet> members_;
    std::vector<VertexSet> out_;
};

/// Trigraph after the first k steps together with the induced partition.
/// Throws SequenceError on the first bad step.
[[nodiscard]] std::pair<Trigraph, Partition> apply_sequence(const Graph& g, const ContractionSequence& s, int k,
                                                            LoopConvention convention = LoopConvention::without_loops);

/// Fails fast with the 1-based index of the first unreplayable step.
void validate_sequence(const Graph& g, const ContractionSequence& s);

/// Calls f(step, state) for step = 0 (the graph itself) through s.size().
/// Replay errors are rethrown as SequenceError. Returning false from f stops early.
template <typename F>
void replay(const Graph& g, const ContractionSequence& s, F&& f);

} // namespace tww

#include "tww/errors.hpp"

namespace tww {

template <typename F>
void replay(const Graph& g, const ContractionSequence& s, F&& f)
{
    if (s.n() != g.n())
        throw SequenceError(0, "sequence is for " + std::to_string(s.n()) + " vertices, graph has " +
                                   std::to_string(g.n()));
    ContractionState state(g);
    if (!f(0, static_cast<const ContractionState&>(state)))
        return;
    for (int k = 1; k <= s.size(); ++k) {
        const auto& c = s.step(k);
        try {
            state.contract(c.u, c.v);
        } catch (const InvalidContraction& e) {
            throw SequenceError(k, e.what());
        }
        if (!f(k, static_cast<const ContractionState&>(state)))
            return;
    }
}

} // namespace tww
