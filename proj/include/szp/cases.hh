#pragma once

#include <szp/exec.hh>
#include <szp/loop_graph.hh>
#include <szp/weights.hh>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace szp
{
    /// Bounds for a private-pairs graph with transversal number 2, where one
    /// transversal vertex sees every neighbour of the other (case A) or not
    /// (case B).
    struct Step1Bound
    {
        int m = 0;
        int case_a = 0, case_b = 0;
        int bound = 0;
        int binomial = 0;
    };

    /// Throws OutOfRange for m < 2, BoundViolation if the bound exceeds C(m+2, 2).
    auto step1_bound(int m) -> Step1Bound;

    /// Every tau-critical graph with transversal number t on at most vmax
    /// vertices, one per isomorphism class, in canonical labelling and order.
    /// vmax may not exceed 2t.
    auto enumerate_tau_critical(int t, int vmax, ExecPolicy policy = ExecPolicy::parallel) -> std::vector<LoopGraph>;

    /// Non-isolated vertices at most 2 tau. Throws PreconditionFailed unless
    /// g is tau-critical.
    auto erdos_gallai_check(const LoopGraph & g) -> bool;

    /// |V| + |E| <= C(tau + 2, 2). Throws PreconditionFailed unless g is
    /// tau-critical.
    auto gyarfas_lehel_check(const LoopGraph & g) -> bool;

    struct Step2Entry
    {
        LoopGraph graph;
        int value = 0;
        int limit = 0;
    };

    /// Critical graphs with tau = m + 1 against 2(m + 1) <= C(m+2, 2) and
    /// with tau = m against |V| + |E| <= C(m+2, 2).
    struct Step2Report
    {
        int m = 0;
        std::vector<Step2Entry> above;
        std::vector<Step2Entry> at;
    };

    /// Throws BoundViolation with the first offending graph.
    auto step2_verify(int m, ExecPolicy policy = ExecPolicy::parallel) -> Step2Report;

    enum class CoreClass
    {
        k4,
        c5,
        triangle,
        acyclic
    };

    auto to_string(CoreClass c) -> std::string;
    auto core_class_from_string(const std::string & s) -> CoreClass;

    auto is_forest(const LoopGraph & g) -> bool;

    /// First of K4, C5, triangle contained as a subgraph; acyclic otherwise.
    auto classify_core(const LoopGraph & g) -> CoreClass;

    struct CaseCandidate
    {
        LoopGraph graph;
        int m = 0;
        CoreClass core = CoreClass::acyclic;
        WeightedContext weights;
        int bound = 0;
    };

    /// Every graph with transversal number 3, no isolated vertex and all
    /// weights at least 1 for m = 4, one per isomorphism class; sorted by
    /// class, then bound descending, then canonical code. Positive weights
    /// cap every degree at m, so a fixed transversal of three vertices has at
    /// most 3m neighbours.
    auto enumerate_case_candidates(int m = 4, ExecPolicy policy = ExecPolicy::parallel) -> std::vector<CaseCandidate>;

    auto make_candidate(const LoopGraph & g, int m) -> CaseCandidate;

    /// Which candidates of one class are reached by growing the class's
    /// starting graph under the restricted rules used in the hand analysis.
    struct RuleCoverage
    {
        CoreClass core = CoreClass::acyclic;
        std::string rule;
        int candidates = 0;
        int reached = 0;
        /// Graphs the rule produced that are not candidates of this class.
        int extra = 0;
        std::vector<LoopGraph> missed;
    };

    auto case_rule_coverage(const std::vector<CaseCandidate> & candidates, ExecPolicy policy = ExecPolicy::parallel)
        -> std::vector<RuleCoverage>;

    /// Hand-drawn candidate lists, grouped by class, with the bound printed
    /// beside each drawing.
    struct GoldenGraph
    {
        std::string name;
        LoopGraph graph;
        int stated_bound = 0;
    };

    auto load_golden(const nlohmann::json & j) -> std::map<CoreClass, std::vector<GoldenGraph>>;

    struct GoldenDiff
    {
        CoreClass core = CoreClass::acyclic;
        std::vector<int> stated, drawn_computed, enumerated;
        /// One line per drawing whose computed bound, class or candidate
        /// status differs from the drawing, and per enumerated candidate
        /// missing from the drawings.
        std::vector<std::string> notes;
        /// Drawings changed by zero-weight reduction.
        std::vector<std::string> reduced_differs;
    };

    auto golden_diff(const std::map<CoreClass, std::vector<GoldenGraph>> & golden,
        const std::vector<CaseCandidate> & candidates) -> std::vector<GoldenDiff>;
}
