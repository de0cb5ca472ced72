#pragma once

#include <szp/bits.hh>
#include <szp/loop_graph.hh>

#include <span>
#include <vector>

namespace szp
{
    /// Exact minimum number of vertices of `alive` meeting every edge of the
    /// graph induced on `alive`. adj holds loop-free neighbourhoods; a vertex
    /// in `loops` carries a loop and must be taken.
    ///
    /// Branch and bound: loops are forced first, degree-0 vertices dropped,
    /// degree-1 vertices resolved by taking their neighbour, then branch on a
    /// maximum-degree vertex (take it, or take all of its neighbours). A
    /// greedy maximal matching gives the lower bound.
    auto min_cover(std::span<const VertexMask> adj, VertexMask alive, VertexMask loops) -> int;

    /// Transversal number of G; 0 for edgeless graphs.
    auto transversal_number(const LoopGraph & g) -> int;

    /// tau(G \ p), computed on masks without building the truncated graph.
    auto truncated_cover(std::span<const VertexMask> adj, VertexMask alive, VertexMask loops, Edge p) -> int;

    /// tau(G - p) on masks.
    auto deleted_cover(std::span<const VertexMask> adj, VertexMask alive, VertexMask loops, Edge p) -> int;

    /// Every minimum transversal of G, as sorted masks.
    auto minimum_transversals(const LoopGraph & g) -> std::vector<VertexMask>;

    /// No isolated vertex, and removing any edge lowers the transversal number.
    auto is_tau_critical(const LoopGraph & g) -> bool;
}
