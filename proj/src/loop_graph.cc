#include <szp/errors.hh>
#include <szp/loop_graph.hh>

#include <algorithm>
#include <map>
#include <sstream>

using std::map;
using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace szp
{
    LoopGraph::LoopGraph(int n)
    {
        for (int i = 0; i < n; ++i)
            add_vertex(std::to_string(i));
    }

    LoopGraph::LoopGraph(vector<string> labels)
    {
        for (auto & l : labels)
            add_vertex(std::move(l));
    }

    auto LoopGraph::add_vertex(string label) -> int
    {
        if (find_vertex(label))
            throw PreconditionFailed("duplicate vertex label '" + label + "'");
        if (vertex_count() >= max_vertices)
            throw OutOfRange("graphs are limited to " + std::to_string(max_vertices) + " vertices");
        _labels.push_back(std::move(label));
        return vertex_count() - 1;
    }

    auto LoopGraph::ensure_vertex(string_view label) -> int
    {
        if (auto v = find_vertex(label))
            return *v;
        return add_vertex(string{label});
    }

    auto LoopGraph::find_vertex(string_view label) const -> optional<int>
    {
        auto it = std::find(_labels.begin(), _labels.end(), label);
        if (it == _labels.end())
            return std::nullopt;
        return static_cast<int>(it - _labels.begin());
    }

    auto LoopGraph::vertex(string_view label) const -> int
    {
        if (auto v = find_vertex(label))
            return *v;
        throw PreconditionFailed("no vertex labelled '" + string{label} + "'");
    }

    void LoopGraph::add_edge(int a, int b)
    {
        if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
            throw PreconditionFailed("edge endpoint out of range");
        _edges.insert(Edge{a, b});
    }

    void LoopGraph::add_edge(string_view a, string_view b)
    {
        int u = ensure_vertex(a);
        int v = ensure_vertex(b);
        add_edge(u, v);
    }

    auto LoopGraph::has_edge(Edge e) const -> bool
    {
        return _edges.contains(e);
    }

    auto LoopGraph::neighbourhood(int v) const -> VertexMask
    {
        VertexMask result = 0;
        for (auto & e : _edges)
            if (! e.is_loop()) {
                if (e.u == v)
                    result |= bit(e.v);
                else if (e.v == v)
                    result |= bit(e.u);
            }
        return result;
    }

    auto LoopGraph::loops() const -> VertexMask
    {
        VertexMask result = 0;
        for (auto & e : _edges)
            if (e.is_loop())
                result |= bit(e.u);
        return result;
    }

    auto LoopGraph::adjacency() const -> vector<VertexMask>
    {
        vector<VertexMask> adj(vertex_count(), 0);
        for (auto & e : _edges)
            if (! e.is_loop()) {
                adj[e.u] |= bit(e.v);
                adj[e.v] |= bit(e.u);
            }
        return adj;
    }

    auto LoopGraph::edge_name(Edge e) const -> string
    {
        return label(e.u) + "-" + label(e.v);
    }

    auto operator==(const LoopGraph & a, const LoopGraph & b) -> bool
    {
        if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;
        vector<int> to_b(a.vertex_count());
        for (int v = 0; v < a.vertex_count(); ++v) {
            auto w = b.find_vertex(a.label(v));
            if (! w)
                return false;
            to_b[v] = *w;
        }
        for (auto & e : a.edges())
            if (! b.has_edge(Edge{to_b[e.u], to_b[e.v]}))
                return false;
        return true;
    }

    auto remove_edge(const LoopGraph & g, Edge p) -> LoopGraph
    {
        if (! g.has_edge(p))
            throw MissingEdge("edge " + std::to_string(p.u) + "-" + std::to_string(p.v) + " is not in the graph");
        LoopGraph result{g.labels()};
        for (auto & e : g.edges())
            if (e != p)
                result.add_edge(e.u, e.v);
        return result;
    }

    auto truncate(const LoopGraph & g, Edge p) -> LoopGraph
    {
        if (! g.has_edge(p))
            throw MissingEdge("edge " + std::to_string(p.u) + "-" + std::to_string(p.v) + " is not in the graph");
        if (p.is_loop())
            throw PreconditionFailed("cannot truncate along a loop");

        vector<int> index(g.vertex_count(), -1);
        LoopGraph result;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != p.u && v != p.v)
                index[v] = result.add_vertex(g.label(v));

        for (auto & e : g.edges()) {
            if (e == p)
                continue;
            int a = index[e.u], b = index[e.v];
            if (a >= 0 && b >= 0)
                result.add_edge(a, b);
            else if (a >= 0)
                result.add_edge(a, a);
            else if (b >= 0)
                result.add_edge(b, b);
        }
        return result;
    }

    auto support(const LoopGraph & g) -> VertexMask
    {
        VertexMask result = 0;
        for (auto & e : g.edges())
            result |= e.mask();
        return result;
    }

    auto isolated_vertices(const LoopGraph & g) -> VertexMask
    {
        return g.all_vertices() & ~support(g);
    }

    auto induced(const LoopGraph & g, VertexMask keep) -> LoopGraph
    {
        vector<int> index(g.vertex_count(), -1);
        LoopGraph result;
        for_each_bit(keep, [&](int v) { index[v] = result.add_vertex(g.label(v)); });
        for (auto & e : g.edges())
            if (index[e.u] >= 0 && index[e.v] >= 0)
                result.add_edge(index[e.u], index[e.v]);
        return result;
    }

    auto relabel(const LoopGraph & g, const vector<string> & labels) -> LoopGraph
    {
        if (static_cast<int>(labels.size()) != g.vertex_count())
            throw PreconditionFailed("relabel needs one label per vertex");
        LoopGraph result{labels};
        for (auto & e : g.edges())
            result.add_edge(e.u, e.v);
        return result;
    }

    auto letter_labels(const LoopGraph & g) -> LoopGraph
    {
        if (g.vertex_count() > 26)
            throw PreconditionFailed("at most 26 letters");
        vector<string> labels;
        for (int v = 0; v < g.vertex_count(); ++v)
            labels.emplace_back(1, static_cast<char>('a' + v));
        return relabel(g, labels);
    }

    auto fresh_label(const string & base, const vector<string> & taken) -> string
    {
        auto used = [&](const string & s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
        if (! used(base))
            return base;
        for (int i = 1;; ++i) {
            auto candidate = base + "_" + std::to_string(i);
            if (! used(candidate))
                return candidate;
        }
    }

    auto disjoint_union(const LoopGraph & a, const LoopGraph & b) -> LoopGraph
    {
        LoopGraph result{a.labels()};
        for (auto & e : a.edges())
            result.add_edge(e.u, e.v);
        vector<int> index(b.vertex_count());
        for (int v = 0; v < b.vertex_count(); ++v)
            index[v] = result.add_vertex(fresh_label(b.label(v), result.labels()));
        for (auto & e : b.edges())
            result.add_edge(index[e.u], index[e.v]);
        return result;
    }

    namespace
    {
        auto tokens_of(string_view line) -> vector<string>
        {
            vector<string> result;
            std::istringstream in{string{line}};
            string t;
            while (in >> t)
                result.push_back(t);
            return result;
        }

        void check_token(const string & t)
        {
            if (t.empty() || t == "v" || t.front() == '#' ||
                t.find_first_of(" \t\r\n") != string::npos)
                throw ParseError("label '" + t + "' cannot be written in the edge-list format");
        }
    }

    auto parse_edge_list(string_view text) -> LoopGraph
    {
        LoopGraph g;
        std::istringstream in{string{text}};
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto toks = tokens_of(line);
            if (toks.empty() || toks.front().front() == '#')
                continue;
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": expected two tokens");
            if (toks[0] == "v")
                g.ensure_vertex(toks[1]);
            else
                g.add_edge(toks[0], toks[1]);
        }
        return g;
    }

    auto format_edge_list(const LoopGraph & g) -> string
    {
        std::ostringstream out;
        for (auto & l : g.labels())
            check_token(l);
        for_each_bit(isolated_vertices(g), [&](int v) { out << "v " << g.label(v) << '\n'; });
        for (auto & e : g.edges())
            out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
        return out.str();
    }

    auto to_dot(const LoopGraph & g, string_view name, const vector<string> & edge_labels) -> string
    {
        std::ostringstream out;
        out << "graph \"" << name << "\" {\n";
        out << "  node [shape=point, width=0.08];\n";
        for_each_bit(isolated_vertices(g), [&](int v) { out << "  \"" << g.label(v) << "\";\n"; });
        int i = 0;
        for (auto & e : g.edges()) {
            out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << '"';
            if (i < static_cast<int>(edge_labels.size()) && ! edge_labels[i].empty())
                out << " [label=\"" << edge_labels[i] << "\"]";
            out << ";\n";
            ++i;
        }
        out << "}\n";
        return out.str();
    }
}
