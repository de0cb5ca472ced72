#include <szp/canonical.hh>
#include <szp/cases.hh>
#include <szp/errors.hh>
#include <szp/graph_enum.hh>
#include <szp/transversal.hh>

#include <algorithm>
#include <functional>
#include <sstream>

using std::map;
using std::string;
using std::vector;

namespace szp
{
    auto step1_bound(int m) -> Step1Bound
    {
        if (m < 2)
            throw OutOfRange("the first step needs m >= 2");
        auto fc = [](int a) { return (a / 2) * ((a + 1) / 2); };
        Step1Bound r;
        r.m = m;
        r.case_a = m + 2 + fc(m + 1) + fc(m - 1);
        r.case_b = m + 2 + 2 * fc(m);
        r.bound = std::max(r.case_a, r.case_b);
        r.binomial = static_cast<int>(binomial(m + 2, 2));
        if (r.bound > r.binomial)
            throw BoundViolation("first-step bound " + std::to_string(r.bound) + " exceeds " + std::to_string(r.binomial));
        return r;
    }

    namespace
    {
        auto has_isolated(const MaskGraph & g) -> bool
        {
            for (int v = 0; v < g.n; ++v)
                if (g.adj[v] == 0)
                    return true;
            return false;
        }

        auto cover(const MaskGraph & g) -> int
        {
            return min_cover(g.neighbours(), g.all(), 0);
        }
    }

    auto enumerate_tau_critical(int t, int vmax, ExecPolicy policy) -> vector<LoopGraph>
    {
        if (t < 1)
            throw PreconditionFailed("transversal number must be positive");
        if (vmax > 2 * t)
            throw PreconditionFailed("critical graphs have at most 2t vertices");

        TransversalGrowth spec;
        spec.transversal_size = t;
        spec.max_vertices = vmax;
        // An edge whose deletion already leaves a cover of size t stays
        // non-critical as vertices are added, since the final cover has size t.
        spec.dead = [t](const MaskGraph & g) {
            for (auto & e : g.edges())
                if (deleted_cover(g.neighbours(), g.all(), 0, e) >= t)
                    return true;
            return false;
        };
        spec.accept = [t](const MaskGraph & g) { return ! has_isolated(g) && cover(g) == t; };
        return grow_by_transversal(spec, policy);
    }

    auto erdos_gallai_check(const LoopGraph & g) -> bool
    {
        if (! is_tau_critical(g))
            throw PreconditionFailed("graph is not tau-critical");
        return popcount(support(g)) <= 2 * transversal_number(g);
    }

    auto gyarfas_lehel_check(const LoopGraph & g) -> bool
    {
        if (! is_tau_critical(g))
            throw PreconditionFailed("graph is not tau-critical");
        int t = transversal_number(g);
        return g.vertex_count() + g.edge_count() <= binomial(t + 2, 2);
    }

    auto step2_verify(int m, ExecPolicy policy) -> Step2Report
    {
        if (m < 2)
            throw OutOfRange("the second step needs m >= 2");
        Step2Report r;
        r.m = m;
        int limit = static_cast<int>(binomial(m + 2, 2));
        for (auto & g : enumerate_tau_critical(m + 1, 2 * (m + 1), policy)) {
            if (! erdos_gallai_check(g) || 2 * (m + 1) > limit)
                throw BoundViolation("critical graph with tau " + std::to_string(m + 1) + ":\n" + format_edge_list(g));
            r.above.push_back(Step2Entry{g, g.vertex_count(), 2 * (m + 1)});
        }
        for (auto & g : enumerate_tau_critical(m, 2 * m, policy)) {
            int value = g.vertex_count() + g.edge_count();
            if (! gyarfas_lehel_check(g) || value > limit)
                throw BoundViolation("critical graph with tau " + std::to_string(m) + " and |V|+|E| = " +
                    std::to_string(value) + ":\n" + format_edge_list(g));
            r.at.push_back(Step2Entry{g, value, limit});
        }
        return r;
    }

    auto to_string(CoreClass c) -> string
    {
        switch (c) {
            case CoreClass::k4: return "K4";
            case CoreClass::c5: return "C5";
            case CoreClass::triangle: return "TRIANGLE";
            case CoreClass::acyclic: return "ACYCLIC";
        }
        return "?";
    }

    auto core_class_from_string(const string & s) -> CoreClass
    {
        for (auto c : {CoreClass::k4, CoreClass::c5, CoreClass::triangle, CoreClass::acyclic})
            if (to_string(c) == s)
                return c;
        throw ParseError("unknown core class '" + s + "'");
    }

    auto classify_core(const LoopGraph & g) -> CoreClass
    {
        if (contains_subgraph(g, zoo::complete(4)))
            return CoreClass::k4;
        if (contains_subgraph(g, zoo::cycle(5)))
            return CoreClass::c5;
        if (contains_subgraph(g, zoo::cycle(3)))
            return CoreClass::triangle;
        return CoreClass::acyclic;
    }

    auto make_candidate(const LoopGraph & g, int m) -> CaseCandidate
    {
        CaseCandidate c;
        c.graph = g;
        c.m = m;
        c.core = classify_core(g);
        c.weights = weigh(g, m);
        c.bound = order_bound(c.weights);
        return c;
    }

    namespace
    {
        auto some_weight_below_one(const MaskGraph & g, int m) -> bool
        {
            for (auto & e : g.edges())
                if (m - truncated_cover(g.neighbours(), g.all(), 0, e) < 1)
                    return true;
            return false;
        }

        auto is_candidate(const MaskGraph & g, int m) -> bool
        {
            return ! has_isolated(g) && cover(g) == 3 && ! some_weight_below_one(g, m);
        }

        auto has_cycle(const MaskGraph & g) -> bool
        {
            return g.edge_count() > g.n - [&] {
                int components = 0;
                VertexMask seen = 0;
                for (int v = 0; v < g.n; ++v) {
                    if (contains(seen, v))
                        continue;
                    ++components;
                    VertexMask frontier = bit(v);
                    while (frontier) {
                        seen |= frontier;
                        VertexMask next = 0;
                        for_each_bit(frontier, [&](int u) { next |= g.adj[u]; });
                        frontier = next & ~seen;
                    }
                }
                return components;
            }();
        }

        auto sort_candidates(vector<CaseCandidate> & cs)
        {
            vector<std::pair<CanonicalCode, CaseCandidate>> keyed;
            for (auto & c : cs)
                keyed.emplace_back(canonical_code(c.graph), std::move(c));
            std::sort(keyed.begin(), keyed.end(), [](auto & a, auto & b) {
                if (a.second.core != b.second.core)
                    return a.second.core < b.second.core;
                if (a.second.bound != b.second.bound)
                    return a.second.bound > b.second.bound;
                return a.first < b.first;
            });
            cs.clear();
            for (auto & [code, c] : keyed)
                cs.push_back(std::move(c));
        }
    }

    auto is_forest(const LoopGraph & g) -> bool
    {
        return g.loops() == 0 && ! has_cycle(MaskGraph::from(g));
    }

    auto enumerate_case_candidates(int m, ExecPolicy policy) -> vector<CaseCandidate>
    {
        if (m != 4)
            throw PreconditionFailed("the case analysis is for m = 4");
        TransversalGrowth spec;
        spec.transversal_size = 3;
        spec.max_vertices = 3 + 3 * m;
        spec.max_degree = m;
        // Weights only fall as outside vertices are added.
        spec.dead = [m](const MaskGraph & g) { return some_weight_below_one(g, m); };
        spec.accept = [m](const MaskGraph & g) { return is_candidate(g, m); };

        vector<CaseCandidate> result;
        for (auto & g : grow_by_transversal(spec, policy))
            result.push_back(make_candidate(g, m));
        sort_candidates(result);
        return result;
    }

    namespace
    {
        /// Graphs on the core's vertices containing the core, with at most
        /// extra added edges.
        auto supergraphs(const LoopGraph & core, int extra) -> vector<LoopGraph>
        {
            int n = core.vertex_count();
            vector<Edge> missing;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (! core.has_edge(Edge{a, b}))
                        missing.emplace_back(a, b);
            vector<LoopGraph> result;
            for (unsigned long s = 0; s < (1ul << missing.size()); ++s) {
                if (std::popcount(s) > extra)
                    continue;
                LoopGraph g = core;
                for (std::size_t i = 0; i < missing.size(); ++i)
                    if ((s >> i) & 1u)
                        g.add_edge(missing[i].u, missing[i].v);
                result.push_back(std::move(g));
            }
            return result;
        }

        struct Rule
        {
            CoreClass core;
            string text;
            LoopGraph start;
            int extra_inside;
            int outside;
            int max_added_edges;
            bool forest;
        };
    }

    auto case_rule_coverage(const vector<CaseCandidate> & candidates, ExecPolicy policy) -> vector<RuleCoverage>
    {
        int m = 4;
        auto forest3 = zoo::matching(3);
        vector<Rule> rules{
            {CoreClass::k4, "K4 plus one vertex joined to some of its vertices", zoo::complete(4), 0, 1, 99, false},
            {CoreClass::c5, "C5 plus edges each meeting the cycle", zoo::cycle(5), 5, 4 * m, 99, false},
            {CoreClass::triangle, "K2+C3 plus at most three edges and one new vertex", zoo::k2_plus_c3(), 3, 1, 3, false},
            {CoreClass::acyclic, "forests grown from 3K2", forest3, 15, 3 * m, 99, true},
        };

        vector<RuleCoverage> result;
        for (auto & rule : rules) {
            int base_edges = rule.start.edge_count();
            TransversalGrowth spec;
            spec.transversal_size = rule.start.vertex_count();
            spec.max_vertices = spec.transversal_size + rule.outside;
            spec.max_degree = m;
            spec.seeds = supergraphs(rule.start, rule.extra_inside);
            spec.dead = [&](const MaskGraph & g) {
                return g.edge_count() - base_edges > rule.max_added_edges || (rule.forest && has_cycle(g)) ||
                    some_weight_below_one(g, m);
            };
            spec.accept = [&](const MaskGraph & g) { return is_candidate(g, m); };

            map<CanonicalCode, bool> produced;
            for (auto & g : grow_by_transversal(spec, policy))
                if (classify_core(g) == rule.core)
                    produced.emplace(canonical_code(g), false);

            RuleCoverage cov;
            cov.core = rule.core;
            cov.rule = rule.text;
            for (auto & c : candidates) {
                if (c.core != rule.core)
                    continue;
                ++cov.candidates;
                auto it = produced.find(canonical_code(c.graph));
                if (it == produced.end())
                    cov.missed.push_back(c.graph);
                else {
                    ++cov.reached;
                    it->second = true;
                }
            }
            for (auto & [code, matched] : produced)
                if (! matched)
                    ++cov.extra;
            result.push_back(std::move(cov));
        }
        return result;
    }

    auto load_golden(const nlohmann::json & j) -> map<CoreClass, vector<GoldenGraph>>
    {
        map<CoreClass, vector<GoldenGraph>> result;
        try {
            for (auto c : {CoreClass::k4, CoreClass::c5, CoreClass::triangle, CoreClass::acyclic}) {
                if (! j.contains(to_string(c)))
                    continue;
                int index = 0;
                for (auto & item : j.at(to_string(c))) {
                    GoldenGraph g;
                    ++index;
                    g.name = item.value("name", to_string(c) + " #" + std::to_string(index));
                    for (auto & e : item.at("edges")) {
                        auto ends = e.get<vector<string>>();
                        if (ends.size() != 2)
                            throw ParseError("an edge has two ends");
                        g.graph.add_edge(ends[0], ends[1]);
                    }
                    g.stated_bound = item.at("stated_bound").get<int>();
                    result[c].push_back(std::move(g));
                }
            }
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(e.what());
        }
        return result;
    }

    auto golden_diff(const map<CoreClass, vector<GoldenGraph>> & golden, const vector<CaseCandidate> & candidates)
        -> vector<GoldenDiff>
    {
        vector<GoldenDiff> result;
        for (auto & [core, drawings] : golden) {
            GoldenDiff d;
            d.core = core;
            vector<bool> drawn(candidates.size(), false);
            vector<CanonicalCode> seen;
            for (auto & drawing : drawings) {
                d.stated.push_back(drawing.stated_bound);
                auto & g = drawing.graph;
                auto code = canonical_code(g);
                auto ctx = weigh(g, 4);
                int bound = popcount(support(g)) + total_weight(ctx);
                d.drawn_computed.push_back(bound);

                std::ostringstream note;
                if (bound != drawing.stated_bound)
                    note << "; bound computes to " << bound << ", drawn as " << drawing.stated_bound;
                if (auto c = classify_core(g); c != core)
                    note << "; belongs to class " << to_string(c);
                if (transversal_number(g) != 3)
                    note << "; transversal number " << transversal_number(g);
                if (*std::min_element(ctx.weights.begin(), ctx.weights.end()) < 1)
                    note << "; has an edge of weight below 1";
                if (std::find(seen.begin(), seen.end(), code) != seen.end())
                    note << "; repeats an earlier drawing";
                seen.push_back(code);
                for (std::size_t i = 0; i < candidates.size(); ++i)
                    if (canonical_code(candidates[i].graph) == code)
                        drawn[i] = true;
                if (! note.str().empty())
                    d.notes.push_back(drawing.name + note.str());

                if (*std::min_element(ctx.weights.begin(), ctx.weights.end()) >= 0) {
                    auto red = reduce_zero_weights(ctx);
                    if (! red.log.empty())
                        d.reduced_differs.push_back(drawing.name + ": " + std::to_string(red.log.size()) +
                            " zero-weight edges removed, bound " + std::to_string(bound) + " -> " +
                            std::to_string(order_bound(red.result)));
                }
            }
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (candidates[i].core != core)
                    continue;
                d.enumerated.push_back(candidates[i].bound);
                if (! drawn[i]) {
                    auto g = letter_labels(candidates[i].graph);
                    string edges;
                    for (auto & e : g.edges())
                        edges += (edges.empty() ? "" : " ") + g.edge_name(e);
                    d.notes.push_back("not drawn: " + edges + " (bound " + std::to_string(candidates[i].bound) + ")");
                }
            }
            for (auto * v : {&d.stated, &d.drawn_computed, &d.enumerated})
                std::sort(v->begin(), v->end(), std::greater<>());
            result.push_back(std::move(d));
        }
        return result;
    }
}
