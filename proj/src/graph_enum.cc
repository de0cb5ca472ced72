#include <szp/errors.hh>
#include <szp/graph_enum.hh>

#include <map>

#include <omp.h>

using std::map;
using std::vector;

namespace szp
{
    auto MaskGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0; u < n; ++u)
            for_each_bit(adj[u] & ~full_mask(u + 1), [&](int v) { result.emplace_back(u, v); });
        return result;
    }

    auto MaskGraph::edge_count() const -> int
    {
        int twice = 0;
        for (int u = 0; u < n; ++u)
            twice += popcount(adj[u]);
        return twice / 2;
    }

    auto MaskGraph::to_loop_graph() const -> LoopGraph
    {
        LoopGraph g{n};
        for (auto & e : edges())
            g.add_edge(e.u, e.v);
        return g;
    }

    auto MaskGraph::from(const LoopGraph & g) -> MaskGraph
    {
        if (g.loops() != 0)
            throw PreconditionFailed("mask graphs are loop-free");
        MaskGraph m;
        m.n = g.vertex_count();
        auto adj = g.adjacency();
        for (int v = 0; v < m.n; ++v)
            m.adj[v] = adj[v];
        return m;
    }

    namespace
    {
        using ClassMap = map<CanonicalCode, LoopGraph>;

        void absorb(ClassMap & into, const LoopGraph & g)
        {
            auto form = canonical_form(g);
            if (into.contains(form.code))
                return;
            into.emplace(form.code, canonical_relabel(g));
        }

        void merge(ClassMap & into, ClassMap && from)
        {
            for (auto & [code, g] : from)
                into.try_emplace(code, std::move(g));
        }

        auto values(ClassMap && m) -> vector<LoopGraph>
        {
            vector<LoopGraph> result;
            result.reserve(m.size());
            for (auto & [code, g] : m)
                result.push_back(std::move(g));
            return result;
        }
    }

    auto all_graphs(int n, ExecPolicy policy) -> vector<LoopGraph>
    {
        if (n < 0 || n > 10)
            throw OutOfRange("all_graphs supports 0..10 vertices");
        vector<LoopGraph> level{LoopGraph{0}};
        for (int size = 1; size <= n; ++size) {
            ClassMap next;
            int parents = static_cast<int>(level.size());
            auto extend = [&](int p, ClassMap & out) {
                auto base = MaskGraph::from(level[p]);
                for (VertexMask nbhd = 0; nbhd <= full_mask(size - 1); ++nbhd) {
                    MaskGraph g = base;
                    int v = g.add_vertex();
                    for_each_bit(nbhd, [&](int u) { g.add_edge(u, v); });
                    absorb(out, g.to_loop_graph());
                    if (nbhd == full_mask(size - 1))
                        break;
                }
            };

            if (policy == ExecPolicy::serial) {
                for (int p = 0; p < parents; ++p)
                    extend(p, next);
            }
            else {
                vector<ClassMap> local(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
                for (int p = 0; p < parents; ++p)
                    extend(p, local[omp_get_thread_num()]);
                for (auto & l : local)
                    merge(next, std::move(l));
            }
            level = values(std::move(next));
        }
        return level;
    }

    namespace
    {
        struct Grower
        {
            const TransversalGrowth & spec;
            vector<VertexMask> types;

            void walk(MaskGraph & g, std::size_t first_type, ClassMap & out) const
            {
                if (spec.dead(g))
                    return;
                if (spec.accept(g))
                    absorb(out, g.to_loop_graph());
                if (g.n >= spec.max_vertices)
                    return;
                for (std::size_t t = first_type; t < types.size(); ++t) {
                    bool fits = true;
                    for_each_bit(types[t], [&](int u) {
                        if (popcount(g.adj[u]) + 1 > spec.max_degree)
                            fits = false;
                    });
                    if (! fits || popcount(types[t]) > spec.max_degree)
                        continue;
                    MaskGraph next = g;
                    int v = next.add_vertex();
                    for_each_bit(types[t], [&](int u) { next.add_edge(u, v); });
                    walk(next, t, out);
                }
            }
        };
    }

    auto grow_by_transversal(const TransversalGrowth & spec, ExecPolicy policy) -> vector<LoopGraph>
    {
        int t = spec.transversal_size;
        if (t < 0 || t > 8 || (t > 6 && spec.seeds.empty()))
            throw OutOfRange("transversal growth supports transversals of size 0..6, or 0..8 with explicit seeds");
        if (spec.max_vertices > max_vertices)
            throw OutOfRange("vertex cap exceeds mask width");

        vector<LoopGraph> seeds = spec.seeds;
        if (seeds.empty()) {
            // Edge sets inside T, one per isomorphism class.
            vector<Edge> inner;
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b)
                    inner.emplace_back(a, b);
            ClassMap seeds_by_code;
            for (unsigned long s = 0; s < (1ul << inner.size()); ++s) {
                LoopGraph g{t};
                for (std::size_t i = 0; i < inner.size(); ++i)
                    if ((s >> i) & 1u)
                        g.add_edge(inner[i].u, inner[i].v);
                absorb(seeds_by_code, g);
            }
            seeds = values(std::move(seeds_by_code));
        }
        for (auto & g : seeds)
            if (g.vertex_count() != t)
                throw PreconditionFailed("seed graphs must have exactly the transversal vertices");

        Grower grower{spec, {}};
        for (VertexMask m = 1; m <= full_mask(t) && t > 0; ++m)
            grower.types.push_back(m);

        int count = static_cast<int>(seeds.size());
        ClassMap found;
        auto run = [&](int i, ClassMap & out) {
            auto g = MaskGraph::from(seeds[i]);
            bool fits = true;
            for (int v = 0; v < g.n; ++v)
                if (popcount(g.adj[v]) > spec.max_degree)
                    fits = false;
            if (fits)
                grower.walk(g, 0, out);
        };

        if (policy == ExecPolicy::serial) {
            for (int i = 0; i < count; ++i)
                run(i, found);
        }
        else {
            vector<ClassMap> local(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
            for (int i = 0; i < count; ++i)
                run(i, local[omp_get_thread_num()]);
            for (auto & l : local)
                merge(found, std::move(l));
        }
        return values(std::move(found));
    }
}
