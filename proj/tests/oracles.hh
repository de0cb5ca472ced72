#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <szp/bits.hh>
#include <szp/loop_graph.hh>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{
    using szp::VertexMask;

    inline auto covers(const szp::LoopGraph & g, VertexMask s) -> bool
    {
        for (auto & e : g.edges())
            if (! szp::contains(s, e.u) && ! szp::contains(s, e.v))
                return false;
        return true;
    }

    /// Smallest covering subset by trying every subset.
    inline auto tau(const szp::LoopGraph & g) -> int
    {
        int n = g.vertex_count();
        int best = n;
        for (VertexMask s = 0; s < (VertexMask{1} << n); ++s)
            if (szp::popcount(s) < best && covers(g, s))
                best = szp::popcount(s);
        return best;
    }

    inline auto critical(const szp::LoopGraph & g) -> bool
    {
        if (szp::isolated_vertices(g) != 0)
            return false;
        int t = tau(g);
        for (auto & e : g.edges())
            if (tau(szp::remove_edge(g, e)) != t - 1)
                return false;
        return true;
    }

    /// Isomorphism by trying every permutation.
    inline auto isomorphic(const szp::LoopGraph & a, const szp::LoopGraph & b) -> bool
    {
        int n = a.vertex_count();
        if (n != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (auto & e : a.edges())
                if (! b.has_edge(szp::Edge{p[e.u], p[e.v]})) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    /// Every labelled loop-free graph on n vertices, reduced to one per class
    /// by pairwise permutation checks. Practical up to n = 5.
    inline auto graph_classes(int n) -> std::vector<szp::LoopGraph>
    {
        std::vector<szp::Edge> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pairs.emplace_back(a, b);
        std::vector<szp::LoopGraph> reps;
        for (unsigned long s = 0; s < (1ul << pairs.size()); ++s) {
            szp::LoopGraph g{n};
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((s >> i) & 1u)
                    g.add_edge(pairs[i].u, pairs[i].v);
            if (std::none_of(reps.begin(), reps.end(), [&](auto & r) { return isomorphic(r, g); }))
                reps.push_back(g);
        }
        return reps;
    }

    /// Deterministic pseudo-random graph, optionally with loops.
    inline auto random_graph(unsigned seed, int n, int percent, bool with_loops) -> szp::LoopGraph
    {
        std::mt19937 rng{seed};
        std::uniform_int_distribution<int> roll{0, 99};
        szp::LoopGraph g{n};
        for (int a = 0; a < n; ++a)
            for (int b = with_loops ? a : a + 1; b < n; ++b)
                if (roll(rng) < (a == b ? percent / 4 : percent))
                    g.add_edge(a, b);
        return g;
    }
}

#include <szp/hypergraph.hh>

namespace oracle
{
    inline auto clique(const szp::Hypergraph3 & h, VertexMask s) -> bool
    {
        auto v = szp::bits_of(s);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                for (std::size_t k = j + 1; k < v.size(); ++k)
                    if (! h.triples().contains(szp::Triple{v[i], v[j], v[k]}))
                        return false;
        return true;
    }

    /// Largest clique by scanning every vertex subset.
    inline auto omega(const szp::Hypergraph3 & h) -> int
    {
        int best = 0;
        for (VertexMask s = 0; s < (VertexMask{1} << h.vertex_count()); ++s)
            if (szp::popcount(s) > best && clique(h, s))
                best = szp::popcount(s);
        return best;
    }

    /// Every clique of size s, ascending by mask.
    inline auto cliques(const szp::Hypergraph3 & h, int s) -> std::vector<VertexMask>
    {
        std::vector<VertexMask> result;
        szp::for_each_subset_of_size(h.all_vertices(), s, [&](VertexMask m) {
            if (clique(h, m))
                result.push_back(m);
        });
        std::sort(result.begin(), result.end());
        return result;
    }

    inline auto hyper_isomorphic(const szp::Hypergraph3 & a, const szp::Hypergraph3 & b) -> bool
    {
        int n = a.vertex_count();
        if (n != b.vertex_count() || a.triple_count() != b.triple_count())
            return false;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (auto & t : a.triples())
                if (! b.has_triple(p[t.a], p[t.b], p[t.c])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    inline auto random_hypergraph(unsigned seed, int n, int percent) -> szp::Hypergraph3
    {
        std::mt19937 rng{seed};
        std::uniform_int_distribution<int> roll{0, 99};
        szp::Hypergraph3 h{n};
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (roll(rng) < percent)
                        h.add_triple(a, b, c);
        return h;
    }
}
