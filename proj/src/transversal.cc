#include <szp/errors.hh>
#include <szp/transversal.hh>

#include <algorithm>
#include <array>

using std::span;
using std::vector;

namespace szp
{
    namespace
    {
        struct CoverSearch
        {
            span<const VertexMask> adj;
            int best;

            auto matching_bound(VertexMask alive) const -> int
            {
                int count = 0;
                VertexMask free = alive;
                while (free) {
                    int v = lowest(free);
                    free &= ~bit(v);
                    VertexMask n = adj[v] & free;
                    if (n) {
                        free &= ~bit(lowest(n));
                        ++count;
                    }
                }
                return count;
            }

            void search(VertexMask alive, int taken)
            {
                bool changed = true;
                while (changed) {
                    changed = false;
                    VertexMask scan = alive;
                    while (scan) {
                        int v = lowest(scan);
                        scan &= scan - 1;
                        VertexMask n = adj[v] & alive;
                        if (n == 0) {
                            alive &= ~bit(v);
                        }
                        else if ((n & (n - 1)) == 0) {
                            alive &= ~(bit(v) | n);
                            scan &= alive;
                            ++taken;
                            changed = true;
                        }
                    }
                    if (taken >= best)
                        return;
                }

                int pick = -1, pick_degree = 0;
                for_each_bit(alive, [&](int v) {
                    int d = popcount(adj[v] & alive);
                    if (d > pick_degree) {
                        pick_degree = d;
                        pick = v;
                    }
                });

                if (pick < 0) {
                    best = taken;
                    return;
                }

                if (taken + matching_bound(alive) >= best)
                    return;

                search(alive & ~bit(pick), taken + 1);
                VertexMask n = adj[pick] & alive;
                search(alive & ~bit(pick) & ~n, taken + popcount(n));
            }
        };
    }

    auto min_cover(span<const VertexMask> adj, VertexMask alive, VertexMask loops) -> int
    {
        VertexMask forced = loops & alive;
        alive &= ~forced;
        CoverSearch s{adj, popcount(alive) + 1};
        s.search(alive, 0);
        return popcount(forced) + s.best;
    }

    auto transversal_number(const LoopGraph & g) -> int
    {
        auto adj = g.adjacency();
        return min_cover(adj, g.all_vertices(), g.loops());
    }

    auto truncated_cover(span<const VertexMask> adj, VertexMask alive, VertexMask loops, Edge p) -> int
    {
        VertexMask gone = p.mask();
        VertexMask new_loops = (adj[p.u] | adj[p.v] | loops) & alive & ~gone;
        return min_cover(adj, alive & ~gone, new_loops);
    }

    auto deleted_cover(span<const VertexMask> adj, VertexMask alive, VertexMask loops, Edge p) -> int
    {
        if (p.is_loop())
            return min_cover(adj, alive, loops & ~bit(p.u));
        std::array<VertexMask, max_vertices> copy{};
        for (std::size_t i = 0; i < adj.size(); ++i)
            copy[i] = adj[i];
        copy[p.u] &= ~bit(p.v);
        copy[p.v] &= ~bit(p.u);
        return min_cover(span<const VertexMask>{copy.data(), adj.size()}, alive, loops);
    }

    auto minimum_transversals(const LoopGraph & g) -> vector<VertexMask>
    {
        int t = transversal_number(g);
        vector<VertexMask> result;
        for_each_subset_of_size(g.all_vertices(), t, [&](VertexMask s) {
            for (auto & e : g.edges())
                if ((s & e.mask()) == 0)
                    return;
            result.push_back(s);
        });
        std::sort(result.begin(), result.end());
        return result;
    }

    auto is_tau_critical(const LoopGraph & g) -> bool
    {
        if (isolated_vertices(g) != 0)
            return false;
        auto adj = g.adjacency();
        auto loops = g.loops();
        int t = min_cover(adj, g.all_vertices(), loops);
        for (auto & e : g.edges())
            if (deleted_cover(adj, g.all_vertices(), loops, e) != t - 1)
                return false;
        return true;
    }
}
