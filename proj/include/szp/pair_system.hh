#pragma once

#include <szp/hypergraph.hh>
#include <szp/loop_graph.hh>

#include <string>
#include <vector>

#include <json.hpp>

namespace szp
{
    /// Intersecting (2,m)-system: pairs p_i and m-sets M_i over a labelled
    /// ground set, with p_i and M_j disjoint exactly when i == j.
    struct PairSystem
    {
        std::vector<std::string> ground;
        int m = 0;
        std::vector<Edge> pairs;
        std::vector<VertexMask> complements;

        auto size() const -> int { return static_cast<int>(pairs.size()); }
        auto all() const -> VertexMask { return full_mask(static_cast<int>(ground.size())); }
    };

    /// Greedy removal in index order: a member goes whenever the rest still
    /// has empty intersection. Throws NotEmptyIntersection on bad input and
    /// DegenerateFamily when fewer than three members remain.
    auto irredundant_subfamily(const CliqueFamily & f) -> CliqueFamily;

    /// Empty intersection, and every member is needed for it.
    auto is_irredundant(const CliqueFamily & f) -> bool;

    struct PrivatePair
    {
        Edge pair;
        /// Number of valid private pairs of this member, the chosen one included.
        int alternatives = 0;
    };

    /// For each member, its least pair (by vertex index) lying in no other
    /// member. Throws NoPrivatePair naming the first member without one.
    auto private_pairs(const CliqueFamily & f) -> std::vector<PrivatePair>;

    /// As above, after checking that every member is a maximum clique of h.
    auto private_pairs(const CliqueFamily & f, const Hypergraph3 & h) -> std::vector<PrivatePair>;

    /// M_i = V \ N_i over the ground labels. Throws NonUniformFamily when the
    /// members differ in size and PreconditionFailed when the members do not
    /// cover the ground set or the (2,m) law fails.
    auto build_system(const std::vector<std::string> & ground, const CliqueFamily & f, const std::vector<Edge> & pairs)
        -> PairSystem;

    auto pairs_of(const std::vector<PrivatePair> & chosen) -> std::vector<Edge>;

    /// p_i and M_j disjoint exactly when i == j.
    auto satisfies_law(const PairSystem & s) -> bool;

    /// Throws PreconditionFailed naming the first broken invariant.
    void validate(const PairSystem & s);

    /// The graph of the pairs on the whole ground set.
    auto pairs_graph(const PairSystem & s) -> LoopGraph;

    /// tau(G \ p_j) <= m for every j, G the pairs graph.
    auto truncations_fit(const PairSystem & s) -> bool;

    auto to_json(const PairSystem & s) -> nlohmann::json;
    auto system_from_json(const nlohmann::json & j) -> PairSystem;
}
