#include "tww/generators.hpp"

#include "tww/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>

namespace tww::gen {

namespace {

// Portable draws; std distributions differ between standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }
bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InvalidInput(what);
}

} // namespace

Graph path(int n)
{
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph clique(int n)
{
    require(n >= 1, "clique needs n >= 1");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph biclique(int a, int b)
{
    require(a >= 1 && b >= 1, "biclique needs two nonempty sides");
    Graph g(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph grid(int rows, int cols)
{
    require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    Graph g(rows * cols);
    auto id = [cols](int i, int j) { return i * cols + j + 1; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i + 1 < rows)
                g.add_edge(id(i, j), id(i + 1, j));
            if (j + 1 < cols)
                g.add_edge(id(i, j), id(i, j + 1));
        }
    return g;
}

Graph diagonal_grid(int rows, int cols)
{
    Graph g = grid(rows, cols);
    auto id = [cols](int i, int j) { return i * cols + j + 1; };
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) {
            g.add_edge(id(i, j), id(i + 1, j + 1));
            g.add_edge(id(i, j + 1), id(i + 1, j));
        }
    return g;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed)
{
    require(n >= 1 && p >= 0.0 && p <= 1.0, "er needs n >= 1 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng, p))
                g.add_edge(u, v);
    return g;
}

Graph blowup(const Graph& base, int size)
{
    require(size >= 1, "blowup size must be positive");
    Graph g(base.n() * size);
    auto id = [size](int v, int k) { return (v - 1) * size + k + 1; };
    for (int v = 1; v <= base.n(); ++v)
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                g.add_edge(id(v, a), id(v, b));
    for (auto [u, v] : base.edges())
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                g.add_edge(id(u, a), id(v, b));
    return g;
}

Graph icosahedron()
{
    // top 1, upper ring 2..6, lower ring 7..11, bottom 12
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        int up = 2 + i, up_next = 2 + (i + 1) % 5;
        int lo = 7 + i, lo_next = 7 + (i + 1) % 5;
        g.add_edge(1, up);
        g.add_edge(up, up_next);
        g.add_edge(up, lo);
        g.add_edge(up_next, lo);
        g.add_edge(lo, lo_next);
        g.add_edge(lo, 12);
    }
    return g;
}

Graph petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(6 + i, 6 + (i + 2) % 5);
    }
    return g;
}

Graph planar_triangulation(int n, std::uint64_t seed)
{
    require(n >= 3, "triangulation needs n >= 3");
    std::mt19937_64 rng(seed);
    using Face = std::array<int, 3>;
    std::vector<Face> faces{{1, 2, 3}, {1, 2, 3}}; // inner and outer face
    for (int v = 4; v <= n; ++v) {
        auto f = faces[below(rng, faces.size())];
        auto at = std::find(faces.begin(), faces.end(), f);
        *at = {f[0], f[1], v};
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[0], f[2], v});
    }

    std::set<std::pair<int, int>> edges;
    auto key = [](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
    for (const auto& f : faces)
        for (int k = 0; k < 3; ++k)
            edges.insert(key(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>((k + 1) % 3)]));

    // flips keep the embedding a triangulation
    for (int flip = 0; flip < 2 * n && n > 4; ++flip) {
        auto e = std::next(edges.begin(), static_cast<long>(below(rng, edges.size())));
        auto [a, b] = *e;
        std::vector<std::size_t> sides;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const auto& f = faces[i];
            if (std::count(f.begin(), f.end(), a) && std::count(f.begin(), f.end(), b))
                sides.push_back(i);
        }
        if (sides.size() != 2)
            continue;
        auto apex = [&](const Face& f) {
            for (int x : f)
                if (x != a && x != b)
                    return x;
            return 0;
        };
        int c = apex(faces[sides[0]]), d = apex(faces[sides[1]]);
        if (c == d || edges.contains(key(c, d)))
            continue;
        edges.erase(e);
        edges.insert(key(c, d));
        faces[sides[0]] = {a, c, d};
        faces[sides[1]] = {b, c, d};
    }

    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph cograph(int n, std::uint64_t seed)
{
    require(n >= 1, "cograph needs n >= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::function<void(int, int)> build = [&](int lo, int hi) { // vertices lo..hi-1
        if (hi - lo <= 1)
            return;
        int mid = lo + 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - lo - 1)));
        build(lo, mid);
        build(mid, hi);
        if (coin(rng, 0.5))
            for (int u = lo; u < mid; ++u)
                for (int v = mid; v < hi; ++v)
                    g.add_edge(u, v);
    };
    build(1, n + 1);
    return g;
}

namespace {

int as_int(const std::vector<std::string>& params, std::size_t i, const std::string& kind)
{
    if (i >= params.size())
        throw InvalidInput(kind + ": missing parameter " + std::to_string(i + 1));
    try {
        std::size_t used = 0;
        int v = std::stoi(params[i], &used);
        if (used != params[i].size())
            throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput(kind + ": parameter '" + params[i] + "' is not an integer");
    }
}

void expect_count(const std::vector<std::string>& params, std::size_t k, const std::string& kind)
{
    if (params.size() != k)
        throw InvalidInput(kind + " takes " + std::to_string(k) + " parameter(s)");
}

} // namespace

Graph generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed)
{
    if (kind == "path" || kind == "cycle" || kind == "clique" || kind == "triangulation" || kind == "cograph") {
        expect_count(params, 1, kind);
        int n = as_int(params, 0, kind);
        if (kind == "path")
            return path(n);
        if (kind == "cycle")
            return cycle(n);
        if (kind == "clique")
            return clique(n);
        if (kind == "triangulation")
            return planar_triangulation(n, seed);
        return cograph(n, seed);
    }
    if (kind == "biclique" || kind == "grid" || kind == "diagonal-grid") {
        expect_count(params, 2, kind);
        int a = as_int(params, 0, kind), b = as_int(params, 1, kind);
        if (kind == "biclique")
            return biclique(a, b);
        return kind == "grid" ? grid(a, b) : diagonal_grid(a, b);
    }
    if (kind == "er") {
        expect_count(params, 2, kind);
        double p = 0;
        try {
            p = std::stod(params[1]);
        } catch (const std::exception&) {
            throw InvalidInput("er: probability '" + params[1] + "' is not a number");
        }
        return erdos_renyi(as_int(params, 0, kind), p, seed);
    }
    if (kind == "icosahedron" || kind == "petersen") {
        expect_count(params, 0, kind);
        return kind == "icosahedron" ? icosahedron() : petersen();
    }
    if (kind == "blowup") {
        if (params.size() < 2)
            throw InvalidInput("blowup takes a base kind, its parameters and a module size");
        std::vector<std::string> base_params(params.begin() + 1, params.end() - 1);
        return blowup(generate(params.front(), base_params, seed), as_int(params, params.size() - 1, kind));
    }
    throw InvalidInput("unknown graph kind '" + kind + "'");
}

} // namespace tww::gen
