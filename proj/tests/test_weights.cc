#include "oracles.hh"

#include <szp/canonical.hh>
#include <szp/errors.hh>
#include <szp/graph_enum.hh>
#include <szp/weights.hh>

#include <doctest.h>

using namespace szp;

namespace
{
    auto oracle_weight(const LoopGraph & g, int m, Edge p) -> int
    {
        return m - oracle::tau(truncate(g, p));
    }
}

TEST_CASE("weights and bounds of the small named graphs")
{
    auto c5 = weigh(zoo::cycle(5), 4);
    CHECK(c5.weights == std::vector<int>(5, 2));
    CHECK(total_weight(c5) == 10);
    CHECK(order_bound(c5) == 15);

    auto k4 = weigh(zoo::complete(4), 4);
    CHECK(k4.weights == std::vector<int>(6, 2));
    CHECK(total_weight(k4) == 12);
    CHECK(order_bound(k4) == 16);

    CHECK(weigh(zoo::matching(3), 2).weights == std::vector<int>(3, 0));
    CHECK(order_bound(weigh(zoo::matching(3), 4)) == 12);
    CHECK(order_bound(weigh(zoo::triple_star(), 4)) == 15);
    CHECK(total_weight(weigh(zoo::edgeless(3), 4)) == 0);

    for (unsigned seed = 0; seed < 100; ++seed) {
        auto g = oracle::random_graph(seed, 3 + static_cast<int>(seed % 6), 45, false);
        auto ctx = weigh(g, 4, seed % 2 ? ExecPolicy::parallel : ExecPolicy::serial);
        for (auto & e : g.edges())
            REQUIRE(ctx.weight(e) == oracle_weight(g, 4, e));
    }
}

TEST_CASE("weight errors")
{
    LoopGraph g{2};
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(edge_weight(g, 2, Edge{0, 0}), LoopWeightUndefined);
    CHECK_THROWS_AS(edge_weight(zoo::path(3), 2, Edge{0, 2}), MissingEdge);
    CHECK_THROWS_AS(order_bound(weigh(zoo::star(3), 0)), InfeasibleContext);
}

TEST_CASE("inequality chain examples")
{
    auto r = check_chain(zoo::cycle(5), 4, Edge{0, 1});
    CHECK(r.tau == 3);
    CHECK(r.tau_deleted == 2);
    CHECK(r.tau_truncated == 2);
    CHECK((r.lower && r.middle && r.upper));

    auto k2 = check_chain(zoo::path(2), 1, Edge{0, 1});
    CHECK(k2.tau == 1);
    CHECK(k2.tau_deleted == 0);
    CHECK(k2.tau_truncated == 0);
    CHECK(k2.upper);

    auto star = check_chain(zoo::star(3), 0, Edge{0, 1});
    CHECK(star.structural());
    CHECK_FALSE(star.upper);
}

TEST_CASE("chain holds on every graph with up to six vertices")
{
    for (int n = 2; n <= 6; ++n)
        for (auto & g : all_graphs(n))
            for (auto & e : g.edges()) {
                auto r = check_chain(g, 0, e);
                REQUIRE(r.tau == oracle::tau(g));
                REQUIRE(r.tau_deleted == oracle::tau(remove_edge(g, e)));
                REQUIRE(r.tau_truncated == oracle::tau(truncate(g, e)));
                REQUIRE(r.structural());
            }
}

TEST_CASE("zero-weight reduction")
{
    auto unchanged = reduce_zero_weights(weigh(zoo::cycle(5), 4));
    CHECK(unchanged.log.empty());
    CHECK(unchanged.result.graph == zoo::cycle(5));

    auto iso = reduce_zero_weights(weigh(zoo::k2_plus_c3(), 2));
    REQUIRE(iso.log.size() == 1);
    CHECK(iso.log[0].edge == "0-1");
    CHECK(iso.log[0].kind == EdgeKind::isolated);
    CHECK(iso.log[0].bound_before == 5);
    CHECK(iso.log[0].bound_after == 6);
    CHECK(iso.result.weights == std::vector<int>(3, 1));

    // A triangle with a pendant edge at vertex 1.
    LoopGraph pend{4};
    pend.add_edge(0, 1);
    pend.add_edge(1, 2);
    pend.add_edge(1, 3);
    pend.add_edge(2, 3);
    auto before = weigh(pend, 2);
    REQUIRE(before.weight(Edge{0, 1}) == 0);
    auto red = reduce_zero_weights(before);
    REQUIRE(!red.log.empty());
    CHECK(red.log[0].kind == EdgeKind::pendant);
    for (auto & [was, now] : red.log[0].neighbour_weights)
        CHECK(now == was + 1);
    CHECK(red.log[0].bound_after >= red.log[0].bound_before);

    // Two edges are never reduced.
    CHECK(reduce_zero_weights(weigh(zoo::matching(2), 1)).log.empty());
}

TEST_CASE("reduction bound never drops on small graphs")
{
    for (int n = 3; n <= 6; ++n)
        for (auto & g : all_graphs(n))
            for (int m = 0; m <= 6; ++m) {
                auto ctx = weigh(g, m);
                if (std::any_of(ctx.weights.begin(), ctx.weights.end(), [](int w) { return w < 0; }))
                    continue;
                auto red = reduce_zero_weights(ctx);
                for (auto & step : red.log)
                    REQUIRE(step.bound_after >= step.bound_before);
            }
}

TEST_CASE("bounds are relabelling invariant")
{
    for (unsigned seed = 0; seed < 50; ++seed) {
        auto g = oracle::random_graph(seed, 7, 40, false);
        CHECK(order_bound(weigh(g, 6)) == order_bound(weigh(canonical_relabel(g), 6)));
    }
}

TEST_CASE("weighted DOT leaves weight one unlabelled")
{
    LoopGraph g{4};
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto dot = weighted_dot(weigh(g, 2), "p4");
    CHECK(dot.find("\"0\" -- \"1\" [label=\"1\"]") == std::string::npos);
    CHECK(dot.find("\"1\" -- \"2\" [label=\"0\"]") != std::string::npos);
}
