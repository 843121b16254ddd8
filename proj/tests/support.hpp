#pragma once

// Fixtures and exhaustive enumerators shared by the test binaries.

#include "tww/graph.hpp"
#include "tww/partition.hpp"
#include "tww/sequence.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace tww::test {

// Vertices a..g are 1..7.
inline Graph fig1_graph()
{
    enum { a = 1, b, c, d, e, f, g };
    return Graph(7, {{a, b}, {a, d}, {a, f}, {b, c}, {b, d}, {b, e}, {b, f},
                     {c, e}, {c, f}, {d, e}, {d, g}, {e, g}, {f, g}});
}

// ef=8, ad=9, bef=10, adg=11, bcef=12, all=13.
inline ContractionSequence fig1_sequence()
{
    return ContractionSequence(7, {{5, 6}, {1, 4}, {2, 8}, {9, 7}, {10, 3}, {11, 12}});
}

inline Graph path(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

inline Graph clique(int n)
{
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph biclique(int a, int b)
{
    Graph g(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v)
            g.add_edge(u, v);
    return g;
}

// Bit k of mask decides the k-th pair in (1,2),(1,3),...,(n-1,n) order.
inline Graph graph_from_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    int k = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++k)
            if ((mask >> k) & 1U)
                g.add_edge(u, v);
    return g;
}

inline void for_each_graph(int n, const std::function<void(const Graph&)>& f)
{
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        f(graph_from_mask(n, mask));
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

// Every set partition of 1..n via restricted growth strings.
inline void for_each_partition(int n, const std::function<void(const Partition&)>& f)
{
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            std::vector<std::vector<int>> lists(static_cast<std::size_t>(blocks));
            for (int v = 0; v < n; ++v)
                lists[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])].push_back(v + 1);
            f(Partition::from_lists(n, lists));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (n > 0)
        rec(0, 0);
}

inline ContractionSequence random_sequence(int n, std::mt19937_64& rng)
{
    ContractionSequence s(n);
    std::vector<int> live;
    for (int v = 1; v <= n; ++v)
        live.push_back(v);
    while (live.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        while (j == i)
            j = pick(rng);
        int u = live[i], v = live[j];
        if (i < j)
            std::swap(i, j);
        live.erase(live.begin() + static_cast<long>(i));
        live.erase(live.begin() + static_cast<long>(j));
        live.push_back(s.push(u, v));
    }
    return s;
}

} // namespace tww::test
