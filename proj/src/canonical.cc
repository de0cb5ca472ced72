#include <szp/canonical.hh>
#include <szp/errors.hh>

#include <algorithm>
#include <sstream>
#include <utility>

using std::pair;
using std::string;
using std::vector;

namespace szp
{
    auto CanonicalCode::to_string() const -> string
    {
        std::ostringstream out;
        out << order << ':';
        for (std::size_t i = 0; i < rows.size(); ++i)
            out << (i ? "," : "") << std::hex << rows[i];
        return out.str();
    }

    namespace
    {
        using Cells = vector<vector<int>>;

        struct Canoniser
        {
            int n;
            vector<VertexMask> adj;
            VertexMask loops;

            bool have_best = false;
            CanonicalCode best;
            vector<int> best_order;

            void refine(Cells & cells) const
            {
                bool changed = true;
                while (changed) {
                    changed = false;
                    vector<VertexMask> cell_mask(cells.size(), 0);
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        for (int v : cells[c])
                            cell_mask[c] |= bit(v);

                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        if (cells[c].size() == 1)
                            continue;
                        vector<pair<vector<int>, int>> signatures;
                        for (int v : cells[c]) {
                            vector<int> s(cells.size());
                            for (std::size_t d = 0; d < cells.size(); ++d)
                                s[d] = popcount(adj[v] & cell_mask[d]);
                            signatures.emplace_back(std::move(s), v);
                        }
                        std::sort(signatures.begin(), signatures.end());
                        if (signatures.front().first == signatures.back().first)
                            continue;

                        Cells pieces;
                        for (std::size_t i = 0; i < signatures.size(); ++i) {
                            if (i == 0 || signatures[i].first != signatures[i - 1].first)
                                pieces.emplace_back();
                            pieces.back().push_back(signatures[i].second);
                        }
                        cells.erase(cells.begin() + c);
                        cells.insert(cells.begin() + c, pieces.begin(), pieces.end());
                        changed = true;
                        break;
                    }
                }
            }

            auto twins(int u, int v) const -> bool
            {
                return contains(loops, u) == contains(loops, v) && (adj[u] & ~bit(v)) == (adj[v] & ~bit(u));
            }

            void leaf(const Cells & cells)
            {
                vector<int> order;
                order.reserve(n);
                for (auto & c : cells)
                    order.push_back(c.front());
                vector<int> pos(n);
                for (int i = 0; i < n; ++i)
                    pos[order[i]] = i;

                CanonicalCode code;
                code.order = n;
                code.rows.resize(n);
                for (int i = 0; i < n; ++i) {
                    int v = order[i];
                    VertexMask row = contains(loops, v) ? bit(i) : 0;
                    for_each_bit(adj[v], [&](int w) { row |= bit(pos[w]); });
                    code.rows[i] = row;
                }
                if (! have_best || code < best) {
                    have_best = true;
                    best = std::move(code);
                    best_order = std::move(order);
                }
            }

            void search(Cells cells)
            {
                refine(cells);
                auto target = std::find_if(cells.begin(), cells.end(), [](auto & c) { return c.size() > 1; });
                if (target == cells.end()) {
                    leaf(cells);
                    return;
                }

                std::size_t t = target - cells.begin();
                vector<int> tried;
                for (int v : cells[t]) {
                    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); }))
                        continue;
                    tried.push_back(v);

                    Cells next = cells;
                    vector<int> rest;
                    for (int w : cells[t])
                        if (w != v)
                            rest.push_back(w);
                    next[t] = {v};
                    next.insert(next.begin() + t + 1, rest);
                    search(std::move(next));
                }
            }
        };
    }

    auto canonical_form(const LoopGraph & g) -> CanonicalForm
    {
        Canoniser c{g.vertex_count(), g.adjacency(), g.loops(), false, {}, {}};
        if (c.n == 0)
            return CanonicalForm{CanonicalCode{}, {}};

        vector<pair<pair<int, int>, int>> keyed;
        for (int v = 0; v < c.n; ++v)
            keyed.push_back({{contains(c.loops, v) ? 1 : 0, popcount(c.adj[v])}, v});
        std::sort(keyed.begin(), keyed.end());
        Cells cells;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first)
                cells.emplace_back();
            cells.back().push_back(keyed[i].second);
        }
        c.search(std::move(cells));
        return CanonicalForm{std::move(c.best), std::move(c.best_order)};
    }

    auto canonical_code(const LoopGraph & g) -> CanonicalCode
    {
        return canonical_form(g).code;
    }

    auto are_isomorphic(const LoopGraph & a, const LoopGraph & b) -> bool
    {
        if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;
        return canonical_code(a) == canonical_code(b);
    }

    auto canonical_relabel(const LoopGraph & g) -> LoopGraph
    {
        auto form = canonical_form(g);
        LoopGraph result{g.vertex_count()};
        vector<int> pos(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i)
            pos[form.order[i]] = i;
        for (auto & e : g.edges())
            result.add_edge(pos[e.u], pos[e.v]);
        return result;
    }

    namespace
    {
        struct Embedder
        {
            vector<VertexMask> host, pattern;
            vector<int> order, image;

            auto extend(std::size_t depth, VertexMask used) -> bool
            {
                if (depth == order.size())
                    return true;
                int p = order[depth];
                int need = popcount(pattern[p]);
                VertexMask options = ~used & full_mask(static_cast<int>(host.size()));
                for (std::size_t d = 0; d < depth; ++d) {
                    int q = order[d];
                    if (contains(pattern[p], q))
                        options &= host[image[q]];
                }
                while (options) {
                    int h = lowest(options);
                    options &= options - 1;
                    if (popcount(host[h]) < need)
                        continue;
                    image[p] = h;
                    if (extend(depth + 1, used | bit(h)))
                        return true;
                }
                return false;
            }
        };
    }

    auto contains_subgraph(const LoopGraph & g, const LoopGraph & pattern) -> bool
    {
        if (pattern.loops() != 0)
            throw PreconditionFailed("subgraph patterns must be loop-free");
        if (pattern.vertex_count() > g.vertex_count())
            return false;
        Embedder e{g.adjacency(), pattern.adjacency(), {}, vector<int>(pattern.vertex_count(), -1)};

        // Place vertices so each one after the first in its component has an
        // already placed neighbour, highest degree first.
        VertexMask placed = 0;
        int n = pattern.vertex_count();
        while (popcount(placed) < n) {
            int next = -1, score = -1;
            for (int v = 0; v < n; ++v) {
                if (contains(placed, v))
                    continue;
                int s = popcount(e.pattern[v] & placed) * 64 + popcount(e.pattern[v]);
                if (s > score) {
                    score = s;
                    next = v;
                }
            }
            e.order.push_back(next);
            placed |= bit(next);
        }
        return e.extend(0, 0);
    }

    namespace zoo
    {
        auto complete(int n) -> LoopGraph
        {
            LoopGraph g{n};
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    g.add_edge(i, j);
            return g;
        }

        auto cycle(int n) -> LoopGraph
        {
            LoopGraph g{n};
            for (int i = 0; i < n; ++i)
                g.add_edge(i, (i + 1) % n);
            return g;
        }

        auto path(int n) -> LoopGraph
        {
            LoopGraph g{n};
            for (int i = 0; i + 1 < n; ++i)
                g.add_edge(i, i + 1);
            return g;
        }

        auto star(int leaves) -> LoopGraph
        {
            LoopGraph g{leaves + 1};
            for (int i = 1; i <= leaves; ++i)
                g.add_edge(0, i);
            return g;
        }

        auto matching(int edges) -> LoopGraph
        {
            LoopGraph g{2 * edges};
            for (int i = 0; i < edges; ++i)
                g.add_edge(2 * i, 2 * i + 1);
            return g;
        }

        auto edgeless(int n) -> LoopGraph
        {
            return LoopGraph{n};
        }

        auto k2_plus_c3() -> LoopGraph
        {
            LoopGraph g{5};
            g.add_edge(0, 1);
            g.add_edge(2, 3);
            g.add_edge(3, 4);
            g.add_edge(2, 4);
            return g;
        }

        auto triple_star() -> LoopGraph
        {
            LoopGraph g{9};
            for (int c = 0; c < 9; c += 3) {
                g.add_edge(c, c + 1);
                g.add_edge(c, c + 2);
            }
            return g;
        }
    }
}
