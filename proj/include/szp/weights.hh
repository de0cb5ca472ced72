#pragma once

#include <szp/exec.hh>
#include <szp/loop_graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace szp
{
    /// A loop-free graph G with deficiency m and w(p) = m - tau(G \ p) for
    /// every edge; weights[i] belongs to the i-th edge of graph.edges().
    struct WeightedContext
    {
        LoopGraph graph;
        int m = 0;
        std::vector<int> weights;

        auto weight(Edge p) const -> int;
    };

    /// m - tau(G \ p). Throws MissingEdge, or LoopWeightUndefined for a loop.
    auto edge_weight(const LoopGraph & g, int m, Edge p) -> int;

    auto weigh(LoopGraph g, int m, ExecPolicy policy = ExecPolicy::serial) -> WeightedContext;

    auto total_weight(const WeightedContext & ctx) -> int;

    /// |support| + total weight. Throws InfeasibleContext on a negative weight.
    auto order_bound(const WeightedContext & ctx) -> int;

    /// tau(G) - 1 <= tau(G - p) <= tau(G \ p) <= m.
    struct ChainReport
    {
        int tau = 0, tau_deleted = 0, tau_truncated = 0, m = 0;
        bool lower = false, middle = false, upper = false;

        auto structural() const -> bool { return lower && middle; }
    };

    auto check_chain(const LoopGraph & g, int m, Edge p) -> ChainReport;

    enum class EdgeKind
    {
        isolated,
        pendant,
        internal
    };

    auto edge_kind(const LoopGraph & g, Edge p) -> EdgeKind;
    auto to_string(EdgeKind k) -> std::string;

    struct ReductionStep
    {
        std::string edge;
        EdgeKind kind = EdgeKind::internal;
        int bound_before = 0, bound_after = 0;
        /// Weights of the edges that met the removed edge, before and after.
        std::vector<std::pair<int, int>> neighbour_weights;
    };

    struct Reduction
    {
        WeightedContext result;
        std::vector<ReductionStep> log;
    };

    /// While at least three edges remain, delete the least zero-weight edge
    /// and recompute every weight. |support| + w(G) must not decrease; a drop
    /// throws MonotonicityFailure with the offending step.
    auto reduce_zero_weights(const WeightedContext & ctx) -> Reduction;

    /// Graphviz rendering with weights as edge labels; weight 1 is left
    /// unlabelled.
    auto weighted_dot(const WeightedContext & ctx, std::string_view name) -> std::string;
}
