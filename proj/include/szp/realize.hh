#pragma once

#include <szp/cases.hh>
#include <szp/exec.hh>
#include <szp/hypergraph.hh>
#include <szp/pair_system.hh>

#include <string>
#include <vector>

#include <json.hpp>

namespace szp
{
    /// A (2,m)-system together with the hypergraph spanned by its cliques
    /// N_i = V \ M_i, where k = |V| - m.
    struct Realization
    {
        PairSystem system;
        Hypergraph3 hypergraph;
        CliqueFamily family;
        int k = 0;
    };

    auto realization_of(const PairSystem & s) -> Realization;

    /// Every system on |V_0| + total weight vertices with pairs graph g. At
    /// that order each M_i carries exactly w(p_i) fresh vertices, named i,
    /// i', i'', ... after the 1-based edge index, and its part in V_0 is a
    /// minimum transversal of g \ p_i; the parts must jointly cover V_0.
    /// Throws Infeasible when target_n exceeds the bound or no choice
    /// covers V_0, and PreconditionFailed for a target below the bound.
    auto forced_realization(const CaseCandidate & cand, int target_n) -> std::vector<Realization>;

    struct TriplesVerdict
    {
        bool reject = false;
        /// Sets of k + 1 vertices all of whose triples avoid some M_i,
        /// ascending by mask; the first is the reported witness.
        std::vector<VertexMask> witnesses;
        /// True when the witness came from the disjoint-residue shortcut.
        bool by_shortcut = false;
        int forced_triples = 0;

        auto witness() const -> VertexMask { return witnesses.empty() ? 0 : witnesses.front(); }
    };

    /// Closes the triples forced by the system and searches for a clique of
    /// size k + 1. The shortcut removes m - 1 vertices and looks for at
    /// least four pairwise disjoint residues of the M_i (or an empty one);
    /// the exhaustive clique search always runs and decides the verdict.
    auto triples_test(const Realization & r, ExecPolicy policy = ExecPolicy::parallel) -> TriplesVerdict;

    /// Every triple of n avoids some M_i.
    auto triples_forced(const PairSystem & s, VertexMask n) -> bool;

    /// How p_i is read for i = 6..10 in the ten-member construction: each
    /// of the ten pairs of Y once, or p_i = p_{i-5}.
    enum class PairIndexing
    {
        all_pairs,
        cyclic
    };

    auto to_string(PairIndexing p) -> std::string;

    struct Extremal
    {
        Hypergraph3 hypergraph;
        CliqueFamily family;
        std::vector<Edge> pairs;
    };

    /// X = {x1..x10}, Y = {y1..y5}, N_i = (X \ {x_i}) + p_i.
    auto extremal_construct(PairIndexing indexing = PairIndexing::all_pairs) -> Extremal;

    struct PrivateStructure
    {
        /// For each member, how many of its pairs lie in no other member.
        std::vector<int> private_counts;
        /// Whether p_i itself is private to N_i.
        std::vector<bool> designated_private;
        /// Size of a greedy irredundant subfamily, or 0 if none of three or
        /// more members exists.
        int irredundant_size = 0;
    };

    struct ExtremalReport
    {
        int n = 0;
        int omega = 0;
        int maximum_clique_count = 0;
        bool n_is_binomial = false;
        bool omega_is_11 = false;
        bool members_are_cliques = false;
        bool empty_intersection = false;
        bool maximum_cliques_equal_family = false;
        bool no_12_clique = false;
        PrivateStructure privacy;

        /// Throws VerificationFailure naming the first failed claim.
        void require() const;
    };

    /// Every claim is computed independently with the exact solvers; the
    /// 12-subset scan is a plain loop over all of them.
    auto extremal_verify(const Extremal & e, ExecPolicy policy = ExecPolicy::parallel) -> ExtremalReport;

    auto private_structure(const CliqueFamily & f, const std::vector<Edge> & designated) -> PrivateStructure;

    /// A hypergraph on [n] spanned by k-sets whose maximum cliques have size
    /// k and empty common intersection.
    struct Configuration
    {
        Hypergraph3 hypergraph;
        CliqueFamily maximum;
        int k = 0;
    };

    inline constexpr int max_search_sets = 25;

    /// Every family of k-subsets of [n], k = n - m, is turned into the
    /// hypergraph of its triples; survivors are returned once per
    /// isomorphism class, in canonical-code order. Requires k >= 3 and
    /// C(n, k) <= 25, else SearchTooLarge.
    auto search_configurations(int n, int m, ExecPolicy policy = ExecPolicy::parallel) -> std::vector<Configuration>;

    /// Distinct labelled hypergraphs among the survivors, before isomorphism
    /// reduction.
    auto count_labelled_configurations(int n, int m, ExecPolicy policy = ExecPolicy::parallel) -> long long;

    auto to_json(const Realization & r) -> nlohmann::json;
    auto to_json(const TriplesVerdict & v, const Realization & r) -> nlohmann::json;
}
