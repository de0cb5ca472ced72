#include <szp/errors.hh>
#include <szp/hypergraph.hh>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include <omp.h>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace szp
{
    Triple::Triple(int x, int y, int z)
    {
        int v[3] = {x, y, z};
        std::sort(v, v + 3);
        if (v[0] == v[1] || v[1] == v[2])
            throw PreconditionFailed("a triple needs three distinct vertices");
        a = v[0];
        b = v[1];
        c = v[2];
    }

    Hypergraph3::Hypergraph3(int n)
    {
        for (int i = 0; i < n; ++i)
            add_vertex(std::to_string(i));
    }

    Hypergraph3::Hypergraph3(vector<string> labels)
    {
        for (auto & l : labels)
            add_vertex(std::move(l));
    }

    auto Hypergraph3::add_vertex(string label) -> int
    {
        if (find_vertex(label))
            throw PreconditionFailed("duplicate vertex label '" + label + "'");
        if (vertex_count() >= max_vertices)
            throw OutOfRange("hypergraphs are limited to " + std::to_string(max_vertices) + " vertices");
        _labels.push_back(std::move(label));
        return vertex_count() - 1;
    }

    auto Hypergraph3::ensure_vertex(string_view label) -> int
    {
        if (auto v = find_vertex(label))
            return *v;
        return add_vertex(string{label});
    }

    auto Hypergraph3::find_vertex(string_view label) const -> optional<int>
    {
        auto it = std::find(_labels.begin(), _labels.end(), label);
        if (it == _labels.end())
            return std::nullopt;
        return static_cast<int>(it - _labels.begin());
    }

    auto Hypergraph3::vertex(string_view label) const -> int
    {
        if (auto v = find_vertex(label))
            return *v;
        throw PreconditionFailed("no vertex labelled '" + string{label} + "'");
    }

    void Hypergraph3::add_triple(int x, int y, int z)
    {
        for (int v : {x, y, z})
            if (v < 0 || v >= vertex_count())
                throw PreconditionFailed("triple vertex out of range");
        Triple t{x, y, z};
        if (! _triples.insert(t).second)
            return;
        auto at = [&](int u, int v) -> VertexMask & { return _link[u * max_vertices + v]; };
        at(t.a, t.b) |= bit(t.c);
        at(t.b, t.a) |= bit(t.c);
        at(t.a, t.c) |= bit(t.b);
        at(t.c, t.a) |= bit(t.b);
        at(t.b, t.c) |= bit(t.a);
        at(t.c, t.b) |= bit(t.a);
    }

    void Hypergraph3::add_triple(string_view x, string_view y, string_view z)
    {
        int a = ensure_vertex(x), b = ensure_vertex(y), c = ensure_vertex(z);
        add_triple(a, b, c);
    }

    auto Hypergraph3::has_triple(int x, int y, int z) const -> bool
    {
        return x != y && contains(link(x, y), z);
    }

    auto Hypergraph3::degree(int v) const -> int
    {
        int twice = 0;
        for (int u = 0; u < vertex_count(); ++u)
            twice += popcount(link(v, u));
        return twice / 2;
    }

    auto Hypergraph3::names(VertexMask s) const -> vector<string>
    {
        vector<string> result;
        for_each_bit(s, [&](int v) { result.push_back(label(v)); });
        return result;
    }

    auto operator==(const Hypergraph3 & a, const Hypergraph3 & b) -> bool
    {
        if (a.vertex_count() != b.vertex_count() || a.triple_count() != b.triple_count())
            return false;
        vector<int> to_b(a.vertex_count());
        for (int v = 0; v < a.vertex_count(); ++v) {
            auto w = b.find_vertex(a.label(v));
            if (! w)
                return false;
            to_b[v] = *w;
        }
        for (auto & t : a.triples())
            if (! b.has_triple(to_b[t.a], to_b[t.b], to_b[t.c]))
                return false;
        return true;
    }

    auto is_clique(const Hypergraph3 & h, VertexMask s) -> bool
    {
        auto vs = bits_of(s);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                VertexMask rest = s & ~full_mask(vs[j] + 1);
                if ((h.link(vs[i], vs[j]) & rest) != rest)
                    return false;
            }
        return true;
    }

    namespace
    {
        auto above(int v) -> VertexMask
        {
            return v + 1 >= max_vertices ? 0 : ~full_mask(v + 1);
        }

        struct CliqueSearch
        {
            const Hypergraph3 & h;
            int s;
            bool first_only;
            long long cap;
            std::atomic<bool> & stop;
            std::atomic<long long> & total;
            vector<VertexMask> found;

            void expand(VertexMask clique, int size, VertexMask cand)
            {
                if (stop.load(std::memory_order_relaxed))
                    return;
                if (size == s) {
                    found.push_back(clique);
                    if (first_only || ++total > cap)
                        stop = true;
                    return;
                }
                while (cand && size + popcount(cand) >= s) {
                    int v = lowest(cand);
                    cand &= cand - 1;
                    VertexMask next = cand;
                    for_each_bit(clique, [&](int u) { next &= h.link(u, v); });
                    expand(clique | bit(v), size + 1, next);
                }
            }
        };

        auto eligible_vertices(const Hypergraph3 & h, int s) -> VertexMask
        {
            long long need = binomial(s - 1, 2);
            VertexMask result = 0;
            for (int v = 0; v < h.vertex_count(); ++v)
                if (h.degree(v) >= need)
                    result |= bit(v);
            return result;
        }

        /// Vertices w above v that can share an s-clique with v.
        auto partners(const Hypergraph3 & h, int s, int v, VertexMask eligible) -> VertexMask
        {
            VertexMask result = 0;
            for_each_bit(eligible & above(v), [&](int w) {
                if (popcount(h.link(v, w)) >= s - 2)
                    result |= bit(w);
            });
            return result;
        }

        auto search(const Hypergraph3 & h, int s, ExecPolicy policy, bool first_only, long long cap)
            -> vector<VertexMask>
        {
            int n = h.vertex_count();
            vector<VertexMask> result;
            if (s < 0 || s > n)
                return result;
            if (s <= 2) {
                for_each_subset_of_size(h.all_vertices(), s, [&](VertexMask m) {
                    if (! (first_only && ! result.empty()))
                        result.push_back(m);
                });
                if (static_cast<long long>(result.size()) > cap)
                    throw CliqueCapExceeded("more than " + std::to_string(cap) + " cliques");
                std::sort(result.begin(), result.end());
                return result;
            }

            VertexMask eligible = eligible_vertices(h, s);
            auto firsts = bits_of(eligible);
            int count = static_cast<int>(firsts.size());
            std::atomic<bool> stop{false};
            std::atomic<long long> total{0};

            auto run = [&](int i, CliqueSearch & cs) {
                int v = firsts[i];
                cs.expand(bit(v), 1, partners(h, s, v, eligible));
            };

            if (policy == ExecPolicy::serial) {
                CliqueSearch cs{h, s, first_only, cap, stop, total, {}};
                for (int i = 0; i < count && ! stop; ++i)
                    run(i, cs);
                result = std::move(cs.found);
            }
            else {
                vector<vector<VertexMask>> local(omp_get_max_threads());
#pragma omp parallel
                {
                    CliqueSearch cs{h, s, first_only, cap, stop, total, {}};
#pragma omp for schedule(dynamic)
                    for (int i = 0; i < count; ++i)
                        run(i, cs);
                    local[omp_get_thread_num()] = std::move(cs.found);
                }
                for (auto & l : local)
                    result.insert(result.end(), l.begin(), l.end());
            }

            if (! first_only && total > cap)
                throw CliqueCapExceeded("more than " + std::to_string(cap) + " cliques of size " + std::to_string(s));
            std::sort(result.begin(), result.end());
            if (first_only && result.size() > 1)
                result.resize(1);
            return result;
        }
    }

    auto cliques_of_size(const Hypergraph3 & h, int s, ExecPolicy policy, long long cap) -> vector<VertexMask>
    {
        return search(h, s, policy, false, cap);
    }

    auto has_clique_of_size(const Hypergraph3 & h, int s, ExecPolicy policy) -> bool
    {
        return ! search(h, s, policy, true, default_clique_cap).empty();
    }

    auto clique_number(const Hypergraph3 & h, ExecPolicy policy) -> int
    {
        int n = h.vertex_count();
        for (int s = n; s >= 3; --s)
            if (has_clique_of_size(h, s, policy))
                return s;
        return std::min(n, 2);
    }

    namespace
    {
        auto index_order(VertexMask a, VertexMask b) -> bool
        {
            return bits_of(a) < bits_of(b);
        }
    }

    auto maximum_cliques(const Hypergraph3 & h, ExecPolicy policy, long long cap) -> CliqueFamily
    {
        CliqueFamily f;
        f.ground = h.all_vertices();
        f.members = cliques_of_size(h, clique_number(h, policy), policy, cap);
        std::sort(f.members.begin(), f.members.end(), index_order);
        return f;
    }

    auto family_intersection(const CliqueFamily & f) -> VertexMask
    {
        if (f.members.empty())
            throw PreconditionFailed("intersection of an empty family");
        VertexMask result = f.ground;
        for (auto m : f.members)
            result &= m;
        return result;
    }

    auto from_clique_family(vector<string> labels, const CliqueFamily & f) -> Hypergraph3
    {
        Hypergraph3 h{std::move(labels)};
        if ((f.ground & ~h.all_vertices()) != 0)
            throw PreconditionFailed("family ground set exceeds the vertex set");
        for (auto m : f.members) {
            if ((m & ~f.ground) != 0)
                throw PreconditionFailed("family member outside the ground set");
            for_each_subset_of_size(m, 3, [&](VertexMask t) {
                auto v = bits_of(t);
                h.add_triple(v[0], v[1], v[2]);
            });
        }
        return h;
    }

    namespace
    {
        auto profile(const Hypergraph3 & h, int v) -> vector<int>
        {
            vector<int> p;
            for (int w = 0; w < h.vertex_count(); ++w)
                if (w != v)
                    p.push_back(popcount(h.link(v, w)));
            std::sort(p.begin(), p.end());
            p.push_back(h.degree(v));
            return p;
        }

        struct HyperMatcher
        {
            const Hypergraph3 & a;
            const Hypergraph3 & b;
            vector<int> order;
            vector<vector<int>> options;
            vector<int> image;

            auto consistent(int depth, int v, int w, VertexMask mapped_a) const -> bool
            {
                for (int d = 0; d < depth; ++d) {
                    int u = order[d];
                    if (popcount(a.link(u, v)) != popcount(b.link(image[u], w)))
                        return false;
                    VertexMask seen = 0;
                    for_each_bit(a.link(u, v) & mapped_a, [&](int x) { seen |= bit(image[x]); });
                    VertexMask mapped_b = 0;
                    for (int e = 0; e < depth; ++e)
                        mapped_b |= bit(image[order[e]]);
                    if (seen != (b.link(image[u], w) & mapped_b))
                        return false;
                }
                return true;
            }

            auto extend(int depth, VertexMask mapped_a, VertexMask used_b) -> bool
            {
                if (depth == static_cast<int>(order.size()))
                    return true;
                int v = order[depth];
                for (int w : options[v]) {
                    if (contains(used_b, w) || ! consistent(depth, v, w, mapped_a))
                        continue;
                    image[v] = w;
                    if (extend(depth + 1, mapped_a | bit(v), used_b | bit(w)))
                        return true;
                }
                image[v] = -1;
                return false;
            }
        };
    }

    auto are_isomorphic(const Hypergraph3 & a, const Hypergraph3 & b) -> bool
    {
        int n = a.vertex_count();
        if (n != b.vertex_count() || a.triple_count() != b.triple_count())
            return false;

        vector<vector<int>> pa(n), pb(n);
        for (int v = 0; v < n; ++v) {
            pa[v] = profile(a, v);
            pb[v] = profile(b, v);
        }
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;

        HyperMatcher m{a, b, {}, vector<vector<int>>(n), vector<int>(n, -1)};
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (pa[v] == pb[w])
                    m.options[v].push_back(w);

        // Most constrained vertices first, then those most tied to the placed ones.
        VertexMask placed = 0;
        while (popcount(placed) < n) {
            int next = -1;
            long long score = -1;
            for (int v = 0; v < n; ++v) {
                if (contains(placed, v))
                    continue;
                long long tie = 0;
                for_each_bit(placed, [&](int u) { tie += popcount(a.link(u, v)); });
                long long s = tie * 64 + (64 - static_cast<long long>(m.options[v].size()));
                if (s > score) {
                    score = s;
                    next = v;
                }
            }
            m.order.push_back(next);
            placed |= bit(next);
        }
        return m.extend(0, 0, 0);
    }

    auto small_canonical_code(const Hypergraph3 & h) -> std::uint64_t
    {
        int n = h.vertex_count();
        if (n > 8)
            throw OutOfRange("small canonical codes are limited to 8 vertices");
        int index[8][8][8] = {};
        int next = 0;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z)
                    index[x][y][z] = next++;

        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (auto & t : h.triples()) {
                int v[3] = {perm[t.a], perm[t.b], perm[t.c]};
                std::sort(v, v + 3);
                code |= std::uint64_t{1} << index[v[0]][v[1]][v[2]];
            }
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
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
    }

    auto parse_triple_list(string_view text) -> Hypergraph3
    {
        Hypergraph3 h;
        std::istringstream in{string{text}};
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto toks = tokens_of(line);
            if (toks.empty() || toks.front().front() == '#')
                continue;
            if (toks.size() == 2 && toks[0] == "v") {
                h.ensure_vertex(toks[1]);
                continue;
            }
            if (toks.size() != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected three tokens");
            if (toks[0] == toks[1] || toks[1] == toks[2] || toks[0] == toks[2])
                throw ParseError("line " + std::to_string(line_no) + ": repeated vertex in triple");
            h.add_triple(toks[0], toks[1], toks[2]);
        }
        return h;
    }

    auto format_triple_list(const Hypergraph3 & h) -> string
    {
        std::ostringstream out;
        for (auto & l : h.labels())
            if (l.empty() || l == "v" || l.front() == '#' || l.find_first_of(" \t\r\n") != string::npos)
                throw ParseError("label '" + l + "' cannot be written in the triple-list format");
        VertexMask covered = 0;
        for (auto & t : h.triples())
            covered |= t.mask();
        for_each_bit(h.all_vertices() & ~covered, [&](int v) { out << "v " << h.label(v) << '\n'; });
        for (auto & t : h.triples())
            out << h.label(t.a) << ' ' << h.label(t.b) << ' ' << h.label(t.c) << '\n';
        return out.str();
    }

    auto family_to_json(const Hypergraph3 & h, const CliqueFamily & f) -> nlohmann::json
    {
        auto j = nlohmann::json::array();
        for (auto m : f.members)
            j.push_back(h.names(m));
        return j;
    }

    auto family_from_json(const Hypergraph3 & h, const nlohmann::json & j) -> CliqueFamily
    {
        if (! j.is_array())
            throw ParseError("a family is a JSON array of arrays");
        CliqueFamily f;
        f.ground = h.all_vertices();
        for (auto & member : j) {
            if (! member.is_array())
                throw ParseError("a family member is a JSON array of labels");
            VertexMask m = 0;
            for (auto & tok : member) {
                if (! tok.is_string())
                    throw ParseError("family labels are strings");
                m |= bit(h.vertex(tok.get<string>()));
            }
            f.members.push_back(m);
        }
        return f;
    }
}
