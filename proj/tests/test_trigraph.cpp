#include "doctest.h"
#include "support.hpp"

#include "tww/errors.hpp"
#include "tww/homogeneity.hpp"
#include "tww/sequence.hpp"
#include "tww/trigraph.hpp"

#include <functional>
#include <random>

using namespace tww;
using namespace tww::test;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<int> vs) { return VertexSet(static_cast<std::size_t>(g.n()) + 1, vs); }

enum { a = 1, b, c, d, e, f, g_ };

} // namespace

TEST_CASE("from_graph lifts edges to black")
{
    auto k3 = from_graph(clique(3));
    CHECK(k3.black_edges().size() == 3);
    CHECK(k3.red_edges().empty());

    auto empty = from_graph(Graph(4));
    CHECK(empty.order() == 4);
    CHECK(empty.black_edges().empty());

    CHECK(from_graph(fig1_graph()).black_edges().size() == 13);
}

TEST_CASE("contract on the first step of the seven-vertex example")
{
    auto t = contract(from_graph(fig1_graph()), e, f, 8);
    CHECK(t.red_edges() == std::vector<Edge>{{a, 8}, {d, 8}});
    CHECK(t.black(8, b));
    CHECK(t.black(8, c));
    CHECK(t.black(8, g_));
    CHECK(t.black_neighbors(8).count() == 3);
    // untouched edges survive
    CHECK(t.black(a, b));
    CHECK(t.black(d, g_));
    CHECK(t.black_edges().size() == 13 - 8 + 3); // e,f touch 8 edges
}

TEST_CASE("contracting twins creates no red edge")
{
    auto t = contract(from_graph(path(3)), 1, 3, 4);
    CHECK(t.black_edges() == std::vector<Edge>{{2, 4}});
    CHECK(t.red_edges().empty());

    auto k2 = contract(from_graph(clique(2)), 1, 2, 3);
    CHECK(k2.order() == 1);
    CHECK(k2.black_edges().empty());
    CHECK(k2.red_edge_count() == 0);
}

TEST_CASE("with_loops marks contracted vertices")
{
    auto t = contract(from_graph(clique(2), LoopConvention::with_loops), 1, 2, 3);
    CHECK(t.has_loop(3));
    CHECK(t.red_degree(3) == 1);
    CHECK(t.red_edge_count() == 1);
}

TEST_CASE("contract rejects bad ids")
{
    auto t = from_graph(path(3));
    CHECK_THROWS_AS((void)contract(t, 1, 1, 4), InvalidContraction);
    CHECK_THROWS_AS((void)contract(t, 1, 9, 4), InvalidContraction);
    CHECK_THROWS_AS((void)contract(t, 1, 2, 3), InvalidContraction);
    auto t2 = contract(t, 1, 2, 4);
    CHECK_THROWS_AS((void)contract(t2, 4, 3, 1), InvalidContraction); // 1 was consumed
    CHECK_THROWS_AS((void)contract(t2, 1, 3, 5), InvalidContraction);
}

TEST_CASE("homogeneity of pairs")
{
    auto p4 = path(4);
    auto c4 = cycle(4);
    CHECK(is_homogeneous(p4, set_of(p4, {1}), set_of(p4, {2})));
    CHECK(is_homogeneous(p4, set_of(p4, {1}), set_of(p4, {3})));
    CHECK(is_homogeneous(c4, set_of(c4, {1, 3}), set_of(c4, {2, 4})));
    CHECK_FALSE(is_homogeneous(p4, set_of(p4, {1, 2}), set_of(p4, {3})));
    CHECK(is_homogeneous(p4, set_of(p4, {2}), set_of(p4, {2})));
    CHECK_FALSE(is_homogeneous(p4, set_of(p4, {2, 3}), set_of(p4, {2, 3})));
    CHECK_THROWS_AS((void)is_homogeneous(p4, set_of(p4, {1, 2}), set_of(p4, {2, 3})), InvalidInput);
}

TEST_CASE("directed homogeneity")
{
    auto p4 = path(4);
    CHECK(is_homogeneous_to(p4, set_of(p4, {3}), set_of(p4, {1, 2})));
    CHECK_FALSE(is_homogeneous_to(p4, set_of(p4, {1, 4}), set_of(p4, {2})));
    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(is_homogeneous_to(star, set_of(star, {2, 3}), set_of(star, {1})));
    CHECK_THROWS_AS((void)is_homogeneous_to(p4, set_of(p4, {1}), set_of(p4, {1, 2})), InvalidInput);
}

TEST_CASE("quotient trigraphs")
{
    auto g = fig1_graph();
    CHECK(quotient(g, Partition::singletons(7), LoopConvention::without_loops) == from_graph(g));
    CHECK(quotient(g, Partition::singletons(7), LoopConvention::with_loops) ==
          from_graph(g, LoopConvention::with_loops));

    auto p = Partition::from_lists(7, {{a, d}, {b, e, f}, {c}, {g_}});
    auto q = quotient(g, p, LoopConvention::without_loops);
    int ad = 8, bef = 9;
    CHECK(q.red_edges() == std::vector<Edge>{{g_, ad}, {g_, bef}, {ad, bef}});
    CHECK(q.black_edges() == std::vector<Edge>{{c, bef}});

    auto k2 = quotient(clique(2), Partition::from_lists(2, {{1, 2}}), LoopConvention::with_loops);
    CHECK(k2.order() == 1);
    CHECK(k2.has_loop(3));
}

TEST_CASE("directed red arcs")
{
    auto p4 = path(4);
    CHECK(directed_red(p4, Partition::singletons(4)).arcs().empty());
    auto dt = directed_red(p4, Partition::from_lists(4, {{1, 2}, {3}, {4}}));
    CHECK(dt.arcs() == std::vector<Edge>{{5, 3}});
}

TEST_CASE("red components")
{
    CHECK(red_components(from_graph(Graph(5))).size() == 5);

    auto t = contract(contract(from_graph(fig1_graph()), e, f, 8), a, d, 9);
    auto comps = red_components(t);
    CHECK(comps == std::vector<std::vector<int>>{{b}, {c}, {g_, 8, 9}});

    Trigraph tri(4, LoopConvention::without_loops);
    for (int v : {1, 2, 3})
        tri.add_vertex(v);
    tri.add_red(1, 2);
    tri.add_red(2, 3);
    tri.add_red(1, 3);
    CHECK(red_components(tri) == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("apply_sequence")
{
    auto g = fig1_graph();
    auto s = fig1_sequence();
    auto [t0, p0] = apply_sequence(g, s, 0);
    CHECK(t0 == from_graph(g));
    CHECK(p0 == Partition::singletons(7));

    auto [t2, p2] = apply_sequence(g, s, 2);
    CHECK(t2.red_edges() == std::vector<Edge>{{g_, 9}, {8, 9}});
    CHECK(t2.black_edges() == std::vector<Edge>{{b, c}, {b, 8}, {b, 9}, {c, 8}, {g_, 8}});
    CHECK(p2.part(9) == set_of(g, {a, d}));

    auto [t6, p6] = apply_sequence(g, s, 6);
    CHECK(t6.order() == 1);
    CHECK(p6.size() == 1);

    ContractionSequence bad(7, {{5, 6}, {5, 1}});
    try {
        (void)apply_sequence(g, bad, 2);
        FAIL("expected SequenceError");
    } catch (const SequenceError& err) {
        CHECK(err.step() == 2);
    }
}

namespace {

// Walks every contraction-sequence prefix of g and checks the replay state
// against the quotient of its partition.
void check_all_prefixes(const Graph& g, ContractionState& st)
{
    auto p = st.partition();
    for (auto conv : {LoopConvention::with_loops, LoopConvention::without_loops})
        REQUIRE(st.trigraph(conv) == quotient(g, p, conv));
    REQUIRE(st.directed() == directed_red(g, p));

    auto live = st.live().members();
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j) {
            ContractionState next = st;
            int x = live[i], y = live[j];
            int z = next.contract(x, y);
            // nothing changes between two parts other than z
            const auto& before = st.trigraph();
            const auto& after = next.trigraph();
            for (int u : live)
                for (int v : live)
                    if (u != x && u != y && v != x && v != y && u != v) {
                        REQUIRE(before.red(u, v) == after.red(u, v));
                        REQUIRE(before.black(u, v) == after.black(u, v));
                    }
            // arcs are created only with z as tail; arcs into z are inherited
            auto dir = next.directed();
            for (auto [tail, head] : dir.arcs()) {
                if (tail == z)
                    continue;
                if (head == z)
                    REQUIRE((st.out_arcs(tail).test(x) || st.out_arcs(tail).test(y)));
                else
                    REQUIRE(st.out_arcs(tail).test(head));
            }
            check_all_prefixes(g, next);
        }
}

} // namespace

TEST_CASE("contract agrees with quotient on every prefix, all graphs up to 5 vertices")
{
    for (int n = 1; n <= 5; ++n)
        for_each_graph(n, [](const Graph& g) {
            ContractionState st(g);
            check_all_prefixes(g, st);
        });
}

TEST_CASE("contract agrees with quotient on all 6-vertex graphs")
{
    std::mt19937_64 rng(6);
    for_each_graph(6, [&](const Graph& g) {
        auto s = random_sequence(6, rng);
        replay(g, s, [&](int, const ContractionState& st) {
            auto p = st.partition();
            REQUIRE(st.trigraph() == quotient(g, p, LoopConvention::with_loops));
            REQUIRE(st.trigraph(LoopConvention::without_loops) == quotient(g, p, LoopConvention::without_loops));
            return true;
        });
    });
}

TEST_CASE("every non-loop red edge touches a looped part")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(8, 0.5, rng);
        auto s = random_sequence(8, rng);
        replay(g, s, [&](int, const ContractionState& st) {
            for (auto [u, v] : st.trigraph().red_edges())
                REQUIRE((st.trigraph().has_loop(u) || st.trigraph().has_loop(v)));
            return true;
        });
    }
}

TEST_CASE("homogeneity is preserved under union")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> side(0, 2);
    for (int trial = 0; trial < 2000; ++trial) {
        auto g = random_graph(9, 0.5, rng);
        VertexSet x = g.empty_set(), x2 = g.empty_set(), z = g.empty_set();
        for (int v = 1; v <= 9; ++v) {
            int s = side(rng);
            (s == 0 ? x : s == 1 ? x2 : z).set(v);
        }
        if (x.empty() || x2.empty() || z.empty())
            continue;
        if (is_homogeneous_to(g, z, x) && is_homogeneous_to(g, z, x2))
            REQUIRE(is_homogeneous_to(g, z, x | x2));
    }
}
