#pragma once

#include <szp/loop_graph.hh>

#include <compare>
#include <string>
#include <vector>

namespace szp
{
    /// Identifies a loop graph up to isomorphism (loops respected). Row i is
    /// the neighbourhood of the i-th vertex in canonical order, with bit i set
    /// when that vertex carries a loop.
    struct CanonicalCode
    {
        int order = 0;
        std::vector<VertexMask> rows;

        auto operator<=>(const CanonicalCode &) const = default;

        auto to_string() const -> std::string;
    };

    struct CanonicalForm
    {
        CanonicalCode code;
        /// order[i] is the original vertex placed at canonical position i.
        std::vector<int> order;
    };

    /// Colour refinement plus individualisation over vertex orderings, keeping
    /// the smallest code. Interchangeable twins are explored once.
    auto canonical_form(const LoopGraph & g) -> CanonicalForm;

    auto canonical_code(const LoopGraph & g) -> CanonicalCode;

    auto are_isomorphic(const LoopGraph & a, const LoopGraph & b) -> bool;

    /// g rebuilt in canonical vertex order, labelled "0".."n-1".
    auto canonical_relabel(const LoopGraph & g) -> LoopGraph;

    /// True iff g has a (not necessarily induced) subgraph isomorphic to the
    /// loop-free pattern.
    auto contains_subgraph(const LoopGraph & g, const LoopGraph & pattern) -> bool;

    /// Small named graphs used throughout the toolkit.
    namespace zoo
    {
        auto complete(int n) -> LoopGraph;
        auto cycle(int n) -> LoopGraph;
        auto path(int n) -> LoopGraph;
        auto star(int leaves) -> LoopGraph;
        auto matching(int edges) -> LoopGraph;
        auto edgeless(int n) -> LoopGraph;
        /// Disjoint K2 and triangle.
        auto k2_plus_c3() -> LoopGraph;
        /// Three disjoint paths on three vertices.
        auto triple_star() -> LoopGraph;
    }
}
