#include "oracles.hh"

#include <szp/canonical.hh>
#include <szp/cases.hh>
#include <szp/errors.hh>
#include <szp/graph_enum.hh>

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>

using namespace szp;
using std::vector;

namespace
{
    /// Largest value of the two vertex counts, with every house size tried.
    auto brute_step1(int m) -> std::pair<int, int>
    {
        int a = -1, b = -1;
        for (int x = 0; x <= m; ++x)
            for (int y = 0; y <= x; ++y)
                a = std::max(a, (x + 2) + (m - x) + (x - y) * (m - x + 1) + y * (m - x) + y * (m - y));
        for (int x = 0; x <= m; ++x)
            for (int y = 0; y <= m; ++y)
                for (int z = 0; z <= std::min(x, y); ++z)
                    if (m - x - y + z >= 0)
                        b = std::max(b, (x + y - z + 2) + (m - x - y + z) + x * (m - x) + y * (m - y));
        return {a, b};
    }

    auto choose(int n, int k) -> int
    {
        long long r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return static_cast<int>(r);
    }

    auto acyclic(const LoopGraph & g) -> bool
    {
        vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v];
            return v;
        };
        for (auto & e : g.edges()) {
            int a = find(e.u), b = find(e.v);
            if (a == b)
                return false;
            parent[a] = b;
        }
        return true;
    }

    auto positive_candidate(const LoopGraph & g, int m) -> bool
    {
        if (isolated_vertices(g) != 0 || oracle::tau(g) != 3)
            return false;
        for (auto & e : g.edges())
            if (m - oracle::tau(truncate(g, e)) < 1)
                return false;
        return true;
    }

    auto count_iso(const vector<LoopGraph> & gs, const LoopGraph & g) -> int
    {
        int c = 0;
        for (auto & h : gs)
            if (oracle::isomorphic(h, g))
                ++c;
        return c;
    }

    auto candidates() -> const vector<CaseCandidate> &
    {
        static auto cs = enumerate_case_candidates(4);
        return cs;
    }

    auto golden() -> nlohmann::json
    {
        std::ifstream in{SZP_DATA_DIR "/figures.golden.json"};
        return nlohmann::json::parse(in);
    }
}

TEST_CASE("first-step bound matches the brute-force maximum")
{
    for (int m = 2; m <= 20; ++m) {
        auto r = step1_bound(m);
        auto [a, b] = brute_step1(m);
        CHECK(r.case_a == a);
        CHECK(r.case_b == b);
        CHECK(r.bound == std::max(a, b));
        CHECK(r.bound <= choose(m + 2, 2));
    }
    CHECK(step1_bound(2).bound == 6);
    CHECK(step1_bound(3).bound == 10);
    CHECK(step1_bound(4).bound == 14);
    CHECK_THROWS_AS(step1_bound(1), OutOfRange);
}

TEST_CASE("critical graphs with small transversal number")
{
    CHECK_THROWS_AS(enumerate_tau_critical(0, 0), PreconditionFailed);
    CHECK_THROWS_AS(enumerate_tau_critical(2, 5), PreconditionFailed);

    for (int t = 1; t <= 2; ++t) {
        vector<LoopGraph> expected;
        for (int n = 1; n <= 2 * t; ++n)
            for (auto & g : oracle::graph_classes(n))
                if (oracle::critical(g) && oracle::tau(g) == t)
                    expected.push_back(g);
        auto got = enumerate_tau_critical(t, 2 * t);
        REQUIRE(got.size() == expected.size());
        for (auto & g : expected)
            CHECK(count_iso(got, g) == 1);
    }

    auto three = enumerate_tau_critical(3, 6);
    REQUIRE(three.size() == 4);
    for (auto g : {zoo::matching(3), zoo::k2_plus_c3(), zoo::cycle(5), zoo::complete(4)})
        CHECK(count_iso(three, g) == 1);

    auto data = golden();
    for (auto & item : data.at("tau3_critical")) {
        LoopGraph g;
        for (auto & e : item.at("edges"))
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        CHECK(count_iso(three, g) == 1);
    }
}

TEST_CASE("critical graphs with four cover vertices and at most seven vertices")
{
    vector<LoopGraph> expected;
    for (int n = 1; n <= 7; ++n)
        for (auto & g : all_graphs(n))
            if (isolated_vertices(g) == 0 && oracle::tau(g) == 4 && oracle::critical(g))
                expected.push_back(g);
    auto got = enumerate_tau_critical(4, 7, ExecPolicy::serial);
    REQUIRE(got.size() == expected.size());
    for (auto & g : expected)
        CHECK(count_iso(got, g) == 1);
    CHECK(enumerate_tau_critical(4, 8, ExecPolicy::parallel) == enumerate_tau_critical(4, 8, ExecPolicy::serial));
}

TEST_CASE("vertex and edge count checks on critical graphs")
{
    CHECK(erdos_gallai_check(zoo::matching(3)));
    CHECK(erdos_gallai_check(zoo::cycle(5)));
    CHECK(erdos_gallai_check(zoo::complete(4)));
    CHECK(gyarfas_lehel_check(zoo::cycle(5)));
    CHECK(gyarfas_lehel_check(zoo::complete(4)));
    CHECK(gyarfas_lehel_check(zoo::matching(3)));
    CHECK_THROWS_AS(erdos_gallai_check(zoo::path(4)), PreconditionFailed);
    CHECK_THROWS_AS(gyarfas_lehel_check(zoo::star(2)), PreconditionFailed);

    for (int t = 1; t <= 4; ++t)
        for (auto & g : enumerate_tau_critical(t, 2 * t)) {
            CHECK(oracle::critical(g));
            CHECK(popcount(support(g)) <= 2 * t);
            CHECK(g.vertex_count() + g.edge_count() <= choose(t + 2, 2));
        }
}

TEST_CASE("second step passes for small deficiencies")
{
    auto two = step2_verify(2);
    CHECK(two.above.size() == 4);
    CHECK(two.at.size() == 2);
    for (auto & e : two.at)
        CHECK(e.value <= 6);
    auto three = step2_verify(3);
    CHECK(three.above.size() == 8);
    CHECK(three.at.size() == 4);
    CHECK_THROWS_AS(step2_verify(1), OutOfRange);
}

TEST_CASE("core classes follow the priority order")
{
    CHECK(classify_core(zoo::complete(5)) == CoreClass::k4);
    CHECK(classify_core(zoo::cycle(5)) == CoreClass::c5);
    CHECK(classify_core(zoo::k2_plus_c3()) == CoreClass::triangle);
    CHECK(classify_core(zoo::triple_star()) == CoreClass::acyclic);
    CHECK(classify_core(zoo::cycle(4)) == CoreClass::acyclic);
    for (auto c : {CoreClass::k4, CoreClass::c5, CoreClass::triangle, CoreClass::acyclic})
        CHECK(core_class_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(core_class_from_string("K5"), ParseError);
}

TEST_CASE("candidate invariants")
{
    auto & cs = candidates();
    REQUIRE(! cs.empty());
    CHECK_THROWS_AS(enumerate_case_candidates(3), PreconditionFailed);
    for (auto & c : cs) {
        auto & g = c.graph;
        CHECK(c.m == 4);
        CHECK(isolated_vertices(g) == 0);
        CHECK(oracle::tau(g) == 3);
        int sum = 0;
        for (auto & e : g.edges()) {
            int w = 4 - oracle::tau(truncate(g, e));
            CHECK(c.weights.weight(e) == w);
            CHECK(w >= 1);
            sum += w;
        }
        CHECK(c.bound == g.vertex_count() + sum);
        bool k4 = contains_subgraph(g, zoo::complete(4));
        bool c5 = contains_subgraph(g, zoo::cycle(5));
        bool c3 = contains_subgraph(g, zoo::cycle(3));
        switch (c.core) {
            case CoreClass::k4: CHECK(k4); break;
            case CoreClass::c5: CHECK((! k4 && c5)); break;
            case CoreClass::triangle: CHECK((! k4 && ! c5 && c3)); break;
            case CoreClass::acyclic: CHECK((! k4 && ! c5 && ! c3)); break;
        }
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            CHECK(! are_isomorphic(cs[i].graph, cs[j].graph));
    CHECK(enumerate_case_candidates(4, ExecPolicy::serial).size() == cs.size());
}

TEST_CASE("candidates in the last class have no cycle")
{
    for (auto & c : candidates())
        if (c.core == CoreClass::acyclic) {
            INFO(format_edge_list(c.graph));
            CHECK(acyclic(c.graph));
        }
}

TEST_CASE("last-class candidates with a cycle stay below fifteen")
{
    int cyclic = 0;
    for (auto & c : candidates())
        if (c.core == CoreClass::acyclic && ! acyclic(c.graph)) {
            ++cyclic;
            CHECK(c.bound <= 13);
            CHECK((contains_subgraph(c.graph, zoo::cycle(4)) || contains_subgraph(c.graph, zoo::cycle(6))));
        }
    CHECK(cyclic == 4);
}

TEST_CASE("case split covers every small positive-weight graph exactly once")
{
    auto & cs = candidates();
    vector<LoopGraph> graphs;
    for (auto & c : cs)
        graphs.push_back(c.graph);
    int found = 0;
    for (int n = 2; n <= 7; ++n)
        for (auto & g : all_graphs(n))
            if (positive_candidate(g, 4)) {
                ++found;
                CHECK(count_iso(graphs, g) == 1);
            }
    int small = 0;
    for (auto & c : cs)
        small += c.graph.vertex_count() <= 7;
    CHECK(found == small);
}

TEST_CASE("candidate bounds")
{
    auto & cs = candidates();
    auto bounds_of = [&](CoreClass k) {
        vector<int> b;
        for (auto & c : cs)
            if (c.core == k)
                b.push_back(c.bound);
        return b;
    };

    int sixteen = 0;
    for (auto & c : cs)
        if (c.bound == 16) {
            ++sixteen;
            CHECK(are_isomorphic(c.graph, zoo::complete(4)));
            CHECK(c.weights.weights == vector<int>(6, 2));
        }
    CHECK(sixteen == 1);
    for (auto & c : cs)
        CHECK(c.bound <= 16);

    auto c5 = bounds_of(CoreClass::c5);
    CHECK(*std::max_element(c5.begin(), c5.end()) == 15);
    CHECK(make_candidate(zoo::cycle(5), 4).bound == 15);
    auto forest = bounds_of(CoreClass::acyclic);
    CHECK(*std::max_element(forest.begin(), forest.end()) == 15);
    CHECK(make_candidate(zoo::triple_star(), 4).bound == 15);
    CHECK(make_candidate(zoo::matching(3), 4).bound == 12);

    // The hand-drawn K4 list reads {14, 13, 15, 16}; its second drawing has
    // every truncation of cover number 2 or less, which gives 14.
    auto k4 = bounds_of(CoreClass::k4);
    CHECK(k4 == vector<int>{16, 15, 14, 14});
    CHECK(std::count_if(cs.begin(), cs.end(), [](auto & c) { return c.bound == 15; }) == 5);
}

TEST_CASE("restricted growth rules against the full enumeration")
{
    auto cov = case_rule_coverage(candidates());
    REQUIRE(cov.size() == 4);
    for (auto & r : cov) {
        CHECK(r.reached + static_cast<int>(r.missed.size()) == r.candidates);
        CHECK(r.extra == 0);
        for (auto & g : r.missed)
            CHECK(classify_core(g) == r.core);
    }
    CHECK(cov[0].reached == cov[0].candidates);
    CHECK(cov[1].reached == cov[1].candidates);
}

TEST_CASE("hand-drawn lists against the enumeration")
{
    auto data = golden();
    auto g = load_golden(data);
    REQUIRE(g.size() == 4);
    CHECK(g.at(CoreClass::k4).size() == 4);
    auto diffs = golden_diff(g, candidates());
    REQUIRE(diffs.size() == 4);
    for (auto & d : diffs) {
        CHECK(d.stated.size() == d.drawn_computed.size());
        for (auto & drawing : g.at(d.core)) {
            auto ctx = weigh(drawing.graph, 4);
            CHECK(std::count(d.drawn_computed.begin(), d.drawn_computed.end(), popcount(support(drawing.graph)) + total_weight(ctx)) >= 1);
        }
    }
    auto & k4 = diffs[0];
    CHECK(k4.core == CoreClass::k4);
    CHECK(k4.stated == vector<int>{16, 15, 14, 13});
    CHECK(k4.drawn_computed == vector<int>{16, 15, 14, 14});
    CHECK(k4.enumerated == vector<int>{16, 15, 14, 14});
    CHECK(! k4.notes.empty());

    CHECK_THROWS_AS(load_golden(nlohmann::json::parse(R"({"K4": [{"edges": [["a"]], "stated_bound": 3}]})")), ParseError);
    CHECK_THROWS_AS(load_golden(nlohmann::json::parse(R"({"K4": [{"edges": []}]})")), ParseError);
}
