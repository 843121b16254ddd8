#include "tww/bridge.hpp"

#include "tww/boolean_width.hpp"
#include "tww/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace tww {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Mutable rooted tree whose leaves carry live part-ids.
class WorkTree {
public:
    explicit WorkTree(const BranchDecomposition& t)
        : parent_(at(t.size()) + 1, -1), kids_(at(t.size()) + 1), label_(at(t.size()) + 1, 0),
          leaf_of_(2 * at(t.n()) + 1, 0), root_(t.root())
    {
        for (int x = 1; x <= t.size(); ++x) {
            parent_[at(x)] = t.parent(x) == 0 ? -1 : t.parent(x);
            kids_[at(x)] = t.children(x);
            label_[at(x)] = t.vertex(x);
            if (t.is_leaf(x))
                leaf_of_[at(t.vertex(x))] = x;
        }
        while (kids_[at(root_)].size() > 2) {
            auto& top = kids_[at(root_)];
            int w = add_node(root_);
            int a = top[0], b = top[1];
            top.erase(top.begin(), top.begin() + 2);
            top.insert(top.begin(), w);
            attach(a, w);
            attach(b, w);
        }
    }

    [[nodiscard]] int root() const { return root_; }
    [[nodiscard]] int nodes() const { return static_cast<int>(parent_.size()) - 1; }
    [[nodiscard]] int parent(int x) const { return parent_[at(x)]; }
    [[nodiscard]] const std::vector<int>& kids(int x) const { return kids_[at(x)]; }
    [[nodiscard]] int label(int x) const { return label_[at(x)]; }
    [[nodiscard]] int leaf_of(int id) const { return leaf_of_[at(id)]; }

    // x absorbs y under the new id z; y's leaf disappears and its parent is spliced out.
    void contract(int x, int y, int z)
    {
        int lx = leaf_of(x), ly = leaf_of(y);
        leaf_of_[at(x)] = leaf_of_[at(y)] = 0;
        label_[at(lx)] = z;
        leaf_of_[at(z)] = lx;
        label_[at(ly)] = 0;

        int p = parent_[at(ly)];
        auto& pk = kids_[at(p)];
        pk.erase(std::find(pk.begin(), pk.end(), ly));
        parent_[at(ly)] = -1;
        if (pk.size() != 1)
            return;
        int s = pk.front();
        pk.clear();
        int gp = parent_[at(p)];
        parent_[at(p)] = -1;
        if (gp < 0) {
            root_ = s;
            parent_[at(s)] = -1;
            return;
        }
        auto& gk = kids_[at(gp)];
        *std::find(gk.begin(), gk.end(), p) = s;
        parent_[at(s)] = gp;
    }

private:
    int add_node(int par)
    {
        parent_.push_back(par);
        kids_.emplace_back();
        label_.push_back(0);
        return nodes();
    }
    void attach(int child, int par)
    {
        parent_[at(child)] = par;
        kids_[at(par)].push_back(child);
    }

    std::vector<int> parent_;
    std::vector<std::vector<int>> kids_;
    std::vector<int> label_;
    std::vector<int> leaf_of_;
    int root_;
};

struct NodeStats {
    std::vector<int> leaves, depth, min_label, order; // order: preorder
};

NodeStats stats(const WorkTree& t)
{
    NodeStats s;
    auto sz = at(t.nodes()) + 1;
    s.leaves.assign(sz, 0);
    s.depth.assign(sz, 0);
    s.min_label.assign(sz, std::numeric_limits<int>::max());
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        s.order.push_back(x);
        for (int c : t.kids(x)) {
            s.depth[at(c)] = s.depth[at(x)] + 1;
            stack.push_back(c);
        }
    }
    for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
        int x = *it;
        if (t.kids(x).empty()) {
            s.leaves[at(x)] = 1;
            s.min_label[at(x)] = t.label(x);
        }
        for (int c : t.kids(x)) {
            s.leaves[at(x)] += s.leaves[at(c)];
            s.min_label[at(x)] = std::min(s.min_label[at(x)], s.min_label[at(c)]);
        }
    }
    return s;
}

std::int64_t pow2(int d) { return d >= 62 ? std::numeric_limits<std::int64_t>::max() : std::int64_t{1} << d; }

void check_red_edges_stay_inside(const ContractionState& st, const WorkTree& tree, const NodeStats& s,
                                 std::int64_t big)
{
    std::vector<char> mark(at(tree.nodes()) + 1, 0);
    for (auto [a, b] : st.trigraph().red_edges()) {
        std::vector<int> up;
        for (int x = tree.leaf_of(a); x >= 0; x = tree.parent(x)) {
            mark[at(x)] = 1;
            up.push_back(x);
        }
        int lca = tree.leaf_of(b);
        std::vector<int> crossing;
        while (!mark[at(lca)]) {
            crossing.push_back(lca);
            lca = tree.parent(lca);
        }
        for (int x : up) {
            if (x == lca)
                break;
            crossing.push_back(x);
        }
        for (int x : up)
            mark[at(x)] = 0;
        for (int x : crossing)
            if (s.leaves[at(x)] >= big)
                throw DecompositionWidthExceeded("after step " + std::to_string(st.steps_done()) + ": red edge " +
                                                 std::to_string(a) + "-" + std::to_string(b) +
                                                 " crosses a subtree with " + std::to_string(s.leaves[at(x)]) +
                                                 " leaves");
    }
}

// rank orders the candidate pairs: part-ids for general trees, leaf positions
// along the path for linear ones. A merged part keeps the smaller rank.
ContractionSequence guided_sequence(const Graph& g, const BranchDecomposition& t, int d, std::int64_t stop,
                                    std::vector<int> rank)
{
    if (t.n() != g.n())
        throw InvalidInput("decomposition and graph disagree on the vertex count");
    if (d < 0)
        throw InvalidInput("width bound must be nonnegative");
    if (!bd_boolean_width_at_most(g, t, d))
        throw DecompositionWidthExceeded("decomposition has boolean-width above " + std::to_string(d));

    const std::int64_t big = pow2(d) + 1;
    ContractionState st(g);
    ContractionSequence seq(g.n());
    WorkTree tree(t);

    while (st.order() > stop) {
        NodeStats s = stats(tree);
        check_red_edges_stay_inside(st, tree, s, big);

        // deepest node with more than 2^d leaves; then fewest leaves, then smallest label
        int v = -1;
        for (int x : s.order) {
            if (s.leaves[at(x)] < big)
                continue;
            auto key = [&](int y) { return std::tuple(-s.depth[at(y)], s.leaves[at(y)], s.min_label[at(y)]); };
            if (v < 0 || key(x) < key(v))
                v = x;
        }
        if (v < 0)
            throw std::logic_error("no subtree above the size threshold");

        std::vector<int> inside;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (tree.kids(x).empty())
                inside.push_back(tree.label(x));
            for (int c : tree.kids(x))
                stack.push_back(c);
        }
        std::sort(inside.begin(), inside.end(), [&](int a, int b) { return rank[at(a)] < rank[at(b)]; });
        VertexSet outside = st.live();
        for (int x : inside)
            outside.reset(x);

        const Trigraph& tg = st.trigraph();
        std::vector<VertexSet> trace;
        for (int x : inside)
            trace.push_back((tg.black_neighbors(x) | tg.red_neighbors(x)) & outside);
        int bx = 0, by = 0;
        for (std::size_t i = 0; i < inside.size() && bx == 0; ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j)
                if (trace[i] == trace[j]) {
                    bx = inside[i];
                    by = inside[j];
                    break;
                }
        if (bx == 0)
            throw DecompositionWidthExceeded("after step " + std::to_string(st.steps_done()) + ": no two parts of a " +
                                             std::to_string(inside.size()) +
                                             "-leaf subtree share their outside neighbourhood");
        int z = st.contract(std::min(bx, by), std::max(bx, by));
        seq.push(std::min(bx, by), std::max(bx, by));
        tree.contract(bx, by, z);
        rank[at(z)] = rank[at(bx)];
    }

    auto rest = st.live().members();
    if (rest.size() >= 2) {
        int acc = rest[0];
        for (std::size_t i = 1; i < rest.size(); ++i) {
            int a = std::min(acc, rest[i]), b = std::max(acc, rest[i]);
            acc = st.contract(a, b);
            seq.push(a, b);
        }
    }
    return seq;
}

void require_full(const Graph& g, const ContractionSequence& s)
{
    if (s.n() != g.n())
        throw InvalidInput("sequence and graph disagree on the vertex count");
    if (g.n() > 1 && !s.complete())
        throw InvalidInput("a full sequence is required, got " + std::to_string(s.size()) + " of " +
                           std::to_string(g.n() - 1) + " steps");
    validate_sequence(g, s);
}

} // namespace

ContractionSequence bd_to_sequence(const Graph& g, const BranchDecomposition& t, int d)
{
    std::vector<int> rank(2 * at(g.n()) + 1);
    std::iota(rank.begin(), rank.end(), 0);
    return guided_sequence(g, t, d, d >= 61 ? std::numeric_limits<std::int64_t>::max() : pow2(d + 1),
                           std::move(rank));
}

ContractionSequence linear_bd_to_sequence(const Graph& g, const BranchDecomposition& t, int d)
{
    if (!t.linear_shape())
        throw InvalidInput("decomposition is not linear");
    auto order = t.linear_order();
    std::vector<int> rank(2 * at(g.n()) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[at(order[i])] = static_cast<int>(i);
    return guided_sequence(g, BranchDecomposition::linear(order), d, pow2(d), std::move(rank));
}

BranchDecomposition sequence_to_bd(const Graph& g, const ContractionSequence& s)
{
    require_full(g, s);
    const int n = g.n();
    if (n == 1)
        return BranchDecomposition(1, {0}, {1});

    // leaves 1..n, root n+1, combs appended after
    const int root = n + 1;
    std::vector<int> parent(at(n) + 2, 0);
    std::vector<std::vector<int>> kids(at(n) + 2);
    std::vector<int> min_vertex(at(n) + 2, 0);
    std::vector<int> top(at(n) + 1);
    for (int v = 1; v <= n; ++v) {
        parent[at(v)] = root;
        kids[at(root)].push_back(v);
        min_vertex[at(v)] = v;
        top[at(v)] = v;
    }

    replay(g, s, [&](int step, const ContractionState& st) {
        if (step == 0)
            return true;
        auto label = st.component_labels();
        int z = st.next_id() - 1;
        std::vector<int> merged;
        VertexSet comp = g.empty_set();
        st.live().for_each([&](int x) {
            if (label[at(x)] == label[at(z)])
                comp |= st.members(x);
        });
        comp.for_each([&](int v) { merged.push_back(top[at(v)]); });
        std::sort(merged.begin(), merged.end(),
                  [&](int a, int b) { return min_vertex[at(a)] < min_vertex[at(b)]; });
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

        if (merged.size() >= 2) {
            for (int c : merged) {
                auto& rk = kids[at(root)];
                rk.erase(std::find(rk.begin(), rk.end(), c));
            }
            int acc = merged[0];
            for (std::size_t i = 1; i < merged.size(); ++i) {
                int w = static_cast<int>(parent.size());
                parent.push_back(root);
                kids.push_back({acc, merged[i]});
                min_vertex.push_back(std::min(min_vertex[at(acc)], min_vertex[at(merged[i])]));
                parent[at(acc)] = w;
                parent[at(merged[i])] = w;
                acc = w;
            }
            kids[at(root)].push_back(acc);
            comp.for_each([&](int v) { top[at(v)] = acc; });
        }

        // root arity tracks the red components; everything else stays binary
        std::vector<int> labels;
        st.live().for_each([&](int x) { labels.push_back(label[at(x)]); });
        std::sort(labels.begin(), labels.end());
        auto components = std::unique(labels.begin(), labels.end()) - labels.begin();
        if (static_cast<long>(kids[at(root)].size()) != components)
            throw std::logic_error("root arity does not match the red components");
        for (std::size_t x = at(n) + 2; x < kids.size(); ++x)
            if (kids[x].size() != 2)
                throw std::logic_error("comb node is not binary");
        return true;
    });

    // drop the unary root and renumber the comb nodes down by one
    int new_root = kids[at(root)].front();
    auto renumber = [&](int x) { return x > root ? x - 1 : x; };
    std::vector<int> out_parent, out_vertex;
    for (std::size_t x = 1; x < parent.size(); ++x) {
        int node = static_cast<int>(x);
        if (node == root)
            continue;
        int p = parent[x];
        out_parent.push_back(node == new_root || p == root ? 0 : renumber(p));
        out_vertex.push_back(node <= n ? node : 0);
    }
    return BranchDecomposition(n, std::move(out_parent), std::move(out_vertex));
}

BranchDecomposition sequence_to_linear_bd(const Graph& g, const ContractionSequence& s)
{
    require_full(g, s);
    const int n = g.n();
    std::vector<int> order;
    for (const auto& c : s.steps()) {
        int a = std::min(c.u, c.v), b = std::max(c.u, c.v);
        if (a <= n)
            order.push_back(a);
        if (b <= n)
            order.push_back(b);
    }
    if (n == 1)
        order.push_back(1);
    return BranchDecomposition::linear(order);
}

} // namespace tww
