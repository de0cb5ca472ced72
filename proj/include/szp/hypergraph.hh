#pragma once

#include <szp/bits.hh>
#include <szp/exec.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace szp
{
    /// A 3-subset {a, b, c} stored with a < b < c.
    struct Triple
    {
        int a = 0, b = 0, c = 0;

        Triple() = default;
        Triple(int x, int y, int z);

        auto mask() const -> VertexMask { return bit(a) | bit(b) | bit(c); }

        auto operator<=>(const Triple &) const = default;
    };

    /// 3-uniform hypergraph on at most 32 labelled vertices. Alongside the
    /// triple set it keeps a link table: link(u, v) is the set of w with
    /// {u, v, w} a triple.
    class Hypergraph3
    {
    public:
        Hypergraph3() = default;
        explicit Hypergraph3(int n);
        explicit Hypergraph3(std::vector<std::string> labels);

        auto add_vertex(std::string label) -> int;
        auto ensure_vertex(std::string_view label) -> int;
        auto find_vertex(std::string_view label) const -> std::optional<int>;
        auto vertex(std::string_view label) const -> int;

        void add_triple(int x, int y, int z);
        void add_triple(std::string_view x, std::string_view y, std::string_view z);
        auto has_triple(int x, int y, int z) const -> bool;

        auto vertex_count() const -> int { return static_cast<int>(_labels.size()); }
        auto triple_count() const -> int { return static_cast<int>(_triples.size()); }
        auto triples() const -> const std::set<Triple> & { return _triples; }
        auto labels() const -> const std::vector<std::string> & { return _labels; }
        auto label(int v) const -> const std::string & { return _labels.at(v); }
        auto all_vertices() const -> VertexMask { return full_mask(vertex_count()); }

        auto link(int u, int v) const -> VertexMask { return _link[u * max_vertices + v]; }
        auto degree(int v) const -> int;

        auto names(VertexMask s) const -> std::vector<std::string>;

        /// Equality as labelled hypergraphs, regardless of vertex index order.
        friend auto operator==(const Hypergraph3 & a, const Hypergraph3 & b) -> bool;

    private:
        std::vector<std::string> _labels;
        std::set<Triple> _triples;
        std::vector<VertexMask> _link = std::vector<VertexMask>(max_vertices * max_vertices, 0);
    };

    /// Indexed family N_1..N_l of vertex subsets over a ground set; vertex
    /// indices refer to the hypergraph the family belongs to.
    struct CliqueFamily
    {
        VertexMask ground = 0;
        std::vector<VertexMask> members;

        auto size() const -> int { return static_cast<int>(members.size()); }
        auto operator==(const CliqueFamily &) const -> bool = default;
    };

    inline constexpr long long default_clique_cap = 1'000'000;

    /// Every 3-subset of s is a triple; sets of at most two vertices qualify.
    auto is_clique(const Hypergraph3 & h, VertexMask s) -> bool;

    /// All cliques of exactly s vertices, ascending by mask. A vertex of such
    /// a clique lies in at least C(s-1, 2) triples and any two of its
    /// vertices share at least s-2 link vertices; both prune the search.
    /// Throws CliqueCapExceeded past cap results.
    auto cliques_of_size(const Hypergraph3 & h, int s, ExecPolicy policy = ExecPolicy::parallel,
        long long cap = default_clique_cap) -> std::vector<VertexMask>;

    auto has_clique_of_size(const Hypergraph3 & h, int s, ExecPolicy policy = ExecPolicy::parallel) -> bool;

    /// Sizes are tried from n downwards; without triples the answer is min(n, 2).
    auto clique_number(const Hypergraph3 & h, ExecPolicy policy = ExecPolicy::parallel) -> int;

    /// Every clique of size omega(h), sorted by vertex index sequence.
    auto maximum_cliques(const Hypergraph3 & h, ExecPolicy policy = ExecPolicy::parallel,
        long long cap = default_clique_cap) -> CliqueFamily;

    auto family_intersection(const CliqueFamily & f) -> VertexMask;

    /// Hypergraph on the given labels whose triples are the 3-subsets of
    /// some member.
    auto from_clique_family(std::vector<std::string> labels, const CliqueFamily & f) -> Hypergraph3;

    /// Vertex-by-vertex label search; pairs of mapped vertices must agree on
    /// link sizes, and vertices on degree and sorted co-degree profile.
    auto are_isomorphic(const Hypergraph3 & a, const Hypergraph3 & b) -> bool;

    /// Smallest triple bitmap over all vertex permutations; for up to eight
    /// vertices.
    auto small_canonical_code(const Hypergraph3 & h) -> std::uint64_t;

    /// Triple-list text format: one "x y z" per line, "v <tok>" declares an
    /// isolated vertex, '#' starts a comment line.
    auto parse_triple_list(std::string_view text) -> Hypergraph3;
    auto format_triple_list(const Hypergraph3 & h) -> std::string;

    auto family_to_json(const Hypergraph3 & h, const CliqueFamily & f) -> nlohmann::json;
    auto family_from_json(const Hypergraph3 & h, const nlohmann::json & j) -> CliqueFamily;
}
