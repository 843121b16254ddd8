#include "tww/trigraph.hpp"

#include "tww/errors.hpp"

#include <algorithm>
#include <string>

namespace tww {

Trigraph::Trigraph(int capacity, LoopConvention convention)
    : convention_(convention),
      vertices_(static_cast<std::size_t>(capacity)),
      loops_(static_cast<std::size_t>(capacity)),
      retired_(static_cast<std::size_t>(capacity)),
      black_(static_cast<std::size_t>(capacity), VertexSet(static_cast<std::size_t>(capacity))),
      red_(static_cast<std::size_t>(capacity), VertexSet(static_cast<std::size_t>(capacity)))
{
}

void Trigraph::ensure_capacity(int id)
{
    if (id < capacity())
        return;
    auto cap = static_cast<std::size_t>(std::max(id + 1, 2 * capacity()));
    vertices_.resize(cap);
    loops_.resize(cap);
    retired_.resize(cap);
    for (auto& row : black_)
        row.resize(cap);
    for (auto& row : red_)
        row.resize(cap);
    black_.resize(cap, VertexSet(cap));
    red_.resize(cap, VertexSet(cap));
}

void Trigraph::add_vertex(int id)
{
    if (id < 0)
        throw InvalidInput("negative part-id");
    ensure_capacity(id);
    if (retired_.test(id))
        throw InvalidInput("part-id " + std::to_string(id) + " was consumed by a contraction");
    vertices_.set(id);
}

void Trigraph::add_black(int u, int v)
{
    if (u == v || !alive(u) || !alive(v))
        throw InvalidInput("black edge needs two distinct live ends");
    red_[idx(u)].reset(v);
    red_[idx(v)].reset(u);
    black_[idx(u)].set(v);
    black_[idx(v)].set(u);
}

void Trigraph::add_red(int u, int v)
{
    if (u == v || !alive(u) || !alive(v))
        throw InvalidInput("red edge needs two distinct live ends");
    black_[idx(u)].reset(v);
    black_[idx(v)].reset(u);
    red_[idx(u)].set(v);
    red_[idx(v)].set(u);
}

void Trigraph::add_loop(int u)
{
    if (!alive(u))
        throw InvalidInput("loop on dead vertex");
    if (convention_ == LoopConvention::with_loops)
        loops_.set(u);
}

int Trigraph::max_red_degree() const noexcept
{
    int best = 0;
    vertices_.for_each([&](int u) { best = std::max(best, red_degree(u)); });
    return best;
}

int Trigraph::max_total_degree() const noexcept
{
    int best = 0;
    vertices_.for_each([&](int u) { best = std::max(best, total_degree(u)); });
    return best;
}

int Trigraph::red_edge_count() const noexcept
{
    int twice = 0;
    vertices_.for_each([&](int u) { twice += red_[idx(u)].count(); });
    return twice / 2 + loops_.count();
}

std::vector<Edge> Trigraph::black_edges() const
{
    std::vector<Edge> out;
    vertices_.for_each([&](int u) {
        black_[idx(u)].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    });
    return out;
}

std::vector<Edge> Trigraph::red_edges() const
{
    std::vector<Edge> out;
    vertices_.for_each([&](int u) {
        red_[idx(u)].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    });
    return out;
}

void Trigraph::contract(int u, int v, int new_id)
{
    if (u == v)
        throw InvalidContraction("cannot contract part " + std::to_string(u) + " with itself");
    if (!alive(u) || !alive(v))
        throw InvalidContraction("contraction of dead part " + std::to_string(alive(u) ? v : u));
    if (new_id < 0 || alive(new_id) || retired_.test(new_id))
        throw InvalidContraction("part-id " + std::to_string(new_id) + " is not fresh");
    ensure_capacity(new_id);

    VertexSet bu = black_[idx(u)], bv = black_[idx(v)];
    VertexSet ru = red_[idx(u)], rv = red_[idx(v)];
    VertexSet black_z = bu & bv;
    VertexSet red_z = (bu | bv | ru | rv) - black_z;
    red_z.reset(u);
    red_z.reset(v);
    black_z.reset(u);
    black_z.reset(v);

    // detach u and v
    for (int w : {u, v}) {
        (black_[idx(w)] | red_[idx(w)]).for_each([&](int x) {
            black_[idx(x)].reset(w);
            red_[idx(x)].reset(w);
        });
        black_[idx(w)].clear();
        red_[idx(w)].clear();
        vertices_.reset(w);
        loops_.reset(w);
        retired_.set(w);
    }

    vertices_.set(new_id);
    black_[idx(new_id)] = black_z;
    red_[idx(new_id)] = red_z;
    black_z.for_each([&](int x) { black_[idx(x)].set(new_id); });
    red_z.for_each([&](int x) { red_[idx(x)].set(new_id); });
    if (convention_ == LoopConvention::with_loops)
        loops_.set(new_id);
}

Trigraph Trigraph::without_loops() const
{
    Trigraph t = *this;
    t.convention_ = LoopConvention::without_loops;
    t.loops_.clear();
    return t;
}

bool operator==(const Trigraph& a, const Trigraph& b) noexcept
{
    // capacities may differ; compare on live ids
    if (a.convention_ != b.convention_ || a.order() != b.order())
        return false;
    bool same = true;
    a.vertices_.for_each([&](int u) {
        if (!same)
            return;
        if (!b.alive(u) || a.has_loop(u) != b.has_loop(u)) {
            same = false;
            return;
        }
        a.black_[Trigraph::idx(u)].for_each([&](int v) { same = same && b.black(u, v); });
        a.red_[Trigraph::idx(u)].for_each([&](int v) { same = same && b.red(u, v); });
        same = same && a.black_[Trigraph::idx(u)].count() == b.black_[Trigraph::idx(u)].count() &&
               a.red_[Trigraph::idx(u)].count() == b.red_[Trigraph::idx(u)].count();
    });
    return same;
}

Trigraph from_graph(const Graph& g, LoopConvention convention)
{
    Trigraph t(g.n() + 1, convention);
    for (int v = 1; v <= g.n(); ++v)
        t.add_vertex(v);
    for (auto [u, v] : g.edges())
        t.add_black(u, v);
    return t;
}

Trigraph contract(const Trigraph& t, int u, int v, int new_id)
{
    Trigraph out = t;
    out.contract(u, v, new_id);
    return out;
}

} // namespace tww
