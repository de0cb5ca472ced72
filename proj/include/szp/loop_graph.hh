#pragma once

#include <szp/bits.hh>

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace szp
{
    /// An unordered vertex pair {u, v} with u <= v; u == v is a loop.
    struct Edge
    {
        int u = 0, v = 0;

        Edge() = default;
        Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

        auto is_loop() const -> bool { return u == v; }
        auto mask() const -> VertexMask { return bit(u) | bit(v); }
        auto other(int x) const -> int { return x == u ? v : u; }

        auto operator<=>(const Edge &) const = default;
    };

    /// A finite graph that may carry loops. Vertices are indexed 0..n-1 and
    /// carry opaque, unique string labels.
    class LoopGraph
    {
    public:
        LoopGraph() = default;

        /// n vertices labelled "0".."n-1".
        explicit LoopGraph(int n);

        explicit LoopGraph(std::vector<std::string> labels);

        auto add_vertex(std::string label) -> int;
        auto ensure_vertex(std::string_view label) -> int;
        auto find_vertex(std::string_view label) const -> std::optional<int>;
        auto vertex(std::string_view label) const -> int;

        void add_edge(int a, int b);
        void add_edge(std::string_view a, std::string_view b);
        auto has_edge(Edge e) const -> bool;

        auto vertex_count() const -> int { return static_cast<int>(_labels.size()); }
        auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
        auto edges() const -> const std::set<Edge> & { return _edges; }
        auto labels() const -> const std::vector<std::string> & { return _labels; }
        auto label(int v) const -> const std::string & { return _labels.at(v); }

        /// Non-loop neighbours of v.
        auto neighbourhood(int v) const -> VertexMask;
        auto degree(int v) const -> int { return popcount(neighbourhood(v)); }
        auto has_loop(int v) const -> bool { return contains(loops(), v); }
        auto loops() const -> VertexMask;
        auto adjacency() const -> std::vector<VertexMask>;
        auto all_vertices() const -> VertexMask { return full_mask(vertex_count()); }

        auto edge_name(Edge e) const -> std::string;

        /// Equality as labelled graphs: same label set and same edges by label,
        /// regardless of vertex index order.
        friend auto operator==(const LoopGraph & a, const LoopGraph & b) -> bool;

    private:
        std::vector<std::string> _labels;
        std::set<Edge> _edges;
    };

    /// G - p: drop the edge, keep every vertex.
    auto remove_edge(const LoopGraph & g, Edge p) -> LoopGraph;

    /// G \ p: delete both endpoints of p; every other edge keeps its surviving
    /// endpoints, so an edge meeting p in one vertex becomes a loop.
    auto truncate(const LoopGraph & g, Edge p) -> LoopGraph;

    /// Union of all edge endpoints.
    auto support(const LoopGraph & g) -> VertexMask;

    auto isolated_vertices(const LoopGraph & g) -> VertexMask;

    /// Subgraph induced on the vertices in keep, in index order.
    auto induced(const LoopGraph & g, VertexMask keep) -> LoopGraph;

    /// Same graph with vertex i renamed to labels[i].
    auto relabel(const LoopGraph & g, const std::vector<std::string> & labels) -> LoopGraph;

    /// Disjoint union; labels of b are suffixed if they clash with a.
    auto disjoint_union(const LoopGraph & a, const LoopGraph & b) -> LoopGraph;

    /// The graph's vertices renamed a, b, c, ... in index order.
    auto letter_labels(const LoopGraph & g) -> LoopGraph;

    /// Returns base, or base suffixed with "_1", "_2", ... until it is not in taken.
    auto fresh_label(const std::string & base, const std::vector<std::string> & taken) -> std::string;

    /// Edge-list text format: one "u v" per line (a loop is "v v"), "v <tok>"
    /// declares an isolated vertex, lines starting with '#' are comments.
    auto parse_edge_list(std::string_view text) -> LoopGraph;
    auto format_edge_list(const LoopGraph & g) -> std::string;

    /// Graphviz rendering; edge_labels, if given, is indexed like g.edges().
    auto to_dot(const LoopGraph & g, std::string_view name,
        const std::vector<std::string> & edge_labels = {}) -> std::string;
}
