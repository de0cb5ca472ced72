#include <szp/errors.hh>
#include <szp/transversal.hh>
#include <szp/weights.hh>

#include <algorithm>
#include <iterator>

using std::string;
using std::vector;

namespace szp
{
    auto WeightedContext::weight(Edge p) const -> int
    {
        auto & es = graph.edges();
        auto it = es.find(p);
        if (it == es.end())
            throw MissingEdge("edge " + std::to_string(p.u) + "-" + std::to_string(p.v) + " is not in the graph");
        return weights[std::distance(es.begin(), it)];
    }

    auto edge_weight(const LoopGraph & g, int m, Edge p) -> int
    {
        if (p.is_loop())
            throw LoopWeightUndefined("loop at " + g.label(p.u));
        if (! g.has_edge(p))
            throw MissingEdge("edge " + std::to_string(p.u) + "-" + std::to_string(p.v) + " is not in the graph");
        auto adj = g.adjacency();
        return m - truncated_cover(adj, g.all_vertices(), g.loops(), p);
    }

    auto weigh(LoopGraph g, int m, ExecPolicy policy) -> WeightedContext
    {
        if (g.loops() != 0)
            throw LoopWeightUndefined("weighted graphs are loop-free");
        vector<Edge> es(g.edges().begin(), g.edges().end());
        auto adj = g.adjacency();
        vector<int> weights(es.size());
        int count = static_cast<int>(es.size());
        VertexMask all = g.all_vertices();
#pragma omp parallel for if (policy == ExecPolicy::parallel)
        for (int i = 0; i < count; ++i)
            weights[i] = m - truncated_cover(adj, all, 0, es[i]);
        return WeightedContext{std::move(g), m, std::move(weights)};
    }

    auto total_weight(const WeightedContext & ctx) -> int
    {
        int sum = 0;
        for (int w : ctx.weights)
            sum += w;
        return sum;
    }

    auto order_bound(const WeightedContext & ctx) -> int
    {
        int i = 0;
        for (auto & e : ctx.graph.edges()) {
            if (ctx.weights[i] < 0)
                throw InfeasibleContext("edge " + ctx.graph.edge_name(e) + " has weight " + std::to_string(ctx.weights[i]));
            ++i;
        }
        return popcount(support(ctx.graph)) + total_weight(ctx);
    }

    auto check_chain(const LoopGraph & g, int m, Edge p) -> ChainReport
    {
        if (p.is_loop())
            throw LoopWeightUndefined("loop at " + g.label(p.u));
        if (! g.has_edge(p))
            throw MissingEdge("edge " + std::to_string(p.u) + "-" + std::to_string(p.v) + " is not in the graph");
        auto adj = g.adjacency();
        ChainReport r;
        r.m = m;
        r.tau = min_cover(adj, g.all_vertices(), g.loops());
        r.tau_deleted = deleted_cover(adj, g.all_vertices(), g.loops(), p);
        r.tau_truncated = truncated_cover(adj, g.all_vertices(), g.loops(), p);
        r.lower = r.tau - 1 <= r.tau_deleted;
        r.middle = r.tau_deleted <= r.tau_truncated;
        r.upper = r.tau_truncated <= m;
        return r;
    }

    auto edge_kind(const LoopGraph & g, Edge p) -> EdgeKind
    {
        int leaves = (g.degree(p.u) == 1) + (g.degree(p.v) == 1);
        return leaves == 2 ? EdgeKind::isolated : leaves == 1 ? EdgeKind::pendant : EdgeKind::internal;
    }

    auto to_string(EdgeKind k) -> string
    {
        switch (k) {
            case EdgeKind::isolated: return "isolated";
            case EdgeKind::pendant: return "pendant";
            case EdgeKind::internal: return "internal";
        }
        return "?";
    }

    auto reduce_zero_weights(const WeightedContext & ctx) -> Reduction
    {
        Reduction r{ctx, {}};
        order_bound(r.result);
        while (r.result.graph.edge_count() >= 3) {
            auto & g = r.result.graph;
            auto it = std::find(r.result.weights.begin(), r.result.weights.end(), 0);
            if (it == r.result.weights.end())
                break;
            Edge p = *std::next(g.edges().begin(), it - r.result.weights.begin());

            ReductionStep step;
            step.edge = g.edge_name(p);
            step.kind = edge_kind(g, p);
            step.bound_before = order_bound(r.result);
            vector<Edge> touching;
            for (auto & e : g.edges())
                if (e != p && (e.mask() & p.mask()) != 0)
                    touching.push_back(e);

            auto next = weigh(remove_edge(g, p), r.result.m);
            step.bound_after = popcount(support(next.graph)) + total_weight(next);
            for (auto & e : touching)
                step.neighbour_weights.emplace_back(r.result.weight(e), next.weight(e));

            if (step.bound_after < step.bound_before)
                throw MonotonicityFailure("removing " + step.edge + " from\n" + format_edge_list(g) +
                    "with m = " + std::to_string(r.result.m) + " lowers the bound from " +
                    std::to_string(step.bound_before) + " to " + std::to_string(step.bound_after));
            r.result = std::move(next);
            r.log.push_back(std::move(step));
        }
        return r;
    }

    auto weighted_dot(const WeightedContext & ctx, std::string_view name) -> string
    {
        vector<string> labels;
        for (int w : ctx.weights)
            labels.push_back(w == 1 ? "" : std::to_string(w));
        return to_dot(ctx.graph, name, labels);
    }
}
