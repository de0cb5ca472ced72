#pragma once

#include <szp/bits.hh>
#include <szp/canonical.hh>
#include <szp/exec.hh>
#include <szp/loop_graph.hh>

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace szp
{
    /// Loop-free graph on masks, used inside the enumeration kernels.
    struct MaskGraph
    {
        int n = 0;
        std::array<VertexMask, max_vertices> adj{};

        auto add_vertex() -> int { return n++; }
        void add_edge(int a, int b)
        {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        auto neighbours() const -> std::span<const VertexMask> { return {adj.data(), static_cast<std::size_t>(n)}; }
        auto all() const -> VertexMask { return full_mask(n); }
        auto edges() const -> std::vector<Edge>;
        auto edge_count() const -> int;
        auto to_loop_graph() const -> LoopGraph;

        static auto from(const LoopGraph & g) -> MaskGraph;
    };

    /// All loop-free graphs on exactly n vertices, one per isomorphism class,
    /// sorted by canonical code. Built by adding one vertex at a time to every
    /// class on n-1 vertices.
    auto all_graphs(int n, ExecPolicy policy = ExecPolicy::parallel) -> std::vector<LoopGraph>;

    /// Growth around a fixed transversal T = {0..t-1}: every graph whose
    /// transversal number is at most t is T plus some edges inside T plus
    /// outside vertices whose neighbourhoods are nonempty subsets of T.
    /// The search adds outside vertices in nondecreasing neighbourhood order.
    struct TransversalGrowth
    {
        int transversal_size = 0;
        int max_vertices = 0;
        int max_degree = szp::max_vertices;
        /// Graphs on exactly transversal_size vertices to grow from; empty
        /// means every edge set inside T, up to isomorphism.
        std::vector<LoopGraph> seeds;
        /// Must be monotone: once true for a graph, true for every graph
        /// obtained by adding further outside vertices.
        std::function<bool(const MaskGraph &)> dead = [](const MaskGraph &) { return false; };
        std::function<bool(const MaskGraph &)> accept;
    };

    /// Accepted graphs, one per isomorphism class, in canonical labelling and
    /// sorted by canonical code.
    auto grow_by_transversal(const TransversalGrowth & spec, ExecPolicy policy = ExecPolicy::parallel)
        -> std::vector<LoopGraph>;
}
