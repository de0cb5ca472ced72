#include <szp/errors.hh>
#include <szp/realize.hh>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

using std::string;
using std::vector;

namespace szp
{
    auto realization_of(const PairSystem & s) -> Realization
    {
        Realization r;
        r.system = s;
        r.k = static_cast<int>(s.ground.size()) - s.m;
        r.family.ground = s.all();
        for (auto m : s.complements)
            r.family.members.push_back(s.all() & ~m);
        r.hypergraph = from_clique_family(s.ground, r.family);
        return r;
    }

    namespace
    {
        /// Subsets of V_0 \ p of the given size meeting every other edge.
        auto transversal_parts(const LoopGraph & g, Edge p, int size) -> vector<VertexMask>
        {
            vector<VertexMask> result;
            for_each_subset_of_size(support(g) & ~p.mask(), size, [&](VertexMask s) {
                for (auto & e : g.edges())
                    if (e != p && (s & e.mask()) == 0)
                        return;
                result.push_back(s);
            });
            return result;
        }
    }

    auto forced_realization(const CaseCandidate & cand, int target_n) -> vector<Realization>
    {
        const auto & g = cand.graph;
        int m = cand.m;
        if (target_n > cand.bound)
            throw Infeasible("target " + std::to_string(target_n) + " exceeds the bound " + std::to_string(cand.bound));
        if (target_n < cand.bound)
            throw PreconditionFailed("only the bound itself forces the fresh vertices");
        if (isolated_vertices(g) != 0)
            throw PreconditionFailed("the pairs graph has an isolated vertex");

        vector<Edge> pairs(g.edges().begin(), g.edges().end());
        vector<vector<VertexMask>> options;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            options.push_back(transversal_parts(g, pairs[i], m - cand.weights.weights[i]));

        vector<string> ground = g.labels();
        vector<VertexMask> fresh(pairs.size(), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            string base = std::to_string(i + 1);
            for (int j = 0; j < cand.weights.weights[i]; ++j) {
                fresh[i] |= bit(static_cast<int>(ground.size()));
                ground.push_back(fresh_label(base + string(j, '\''), ground));
            }
        }
        if (ground.size() > max_vertices)
            throw PreconditionFailed("realization needs more than " + std::to_string(max_vertices) + " vertices");

        vector<Realization> result;
        vector<std::size_t> choice(pairs.size(), 0);
        VertexMask v0 = support(g);
        auto any_empty = std::any_of(options.begin(), options.end(), [](auto & o) { return o.empty(); });
        while (! any_empty) {
            VertexMask covered = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                covered |= options[i][choice[i]];
            if (covered == v0) {
                PairSystem s;
                s.ground = ground;
                s.m = m;
                s.pairs = pairs;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    s.complements.push_back(options[i][choice[i]] | fresh[i]);
                validate(s);
                result.push_back(realization_of(s));
            }
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == options[i].size())
                choice[i++] = 0;
            if (i == choice.size())
                break;
        }
        if (result.empty())
            throw Infeasible("no choice of transversals covers the pairs graph");
        return result;
    }

    auto triples_forced(const PairSystem & s, VertexMask n) -> bool
    {
        bool ok = true;
        for_each_subset_of_size(n, 3, [&](VertexMask f) {
            if (! ok)
                return;
            ok = std::any_of(s.complements.begin(), s.complements.end(), [&](VertexMask m) { return (m & f) == 0; });
        });
        return ok;
    }

    namespace
    {
        auto shortcut(const Realization & r) -> VertexMask
        {
            auto & s = r.system;
            VertexMask found = 0;
            for_each_subset_of_size(s.all(), s.m - 1, [&](VertexMask removed) {
                if (found)
                    return;
                vector<VertexMask> residues;
                for (auto m : s.complements)
                    residues.push_back(m & ~removed);
                bool empty = std::any_of(residues.begin(), residues.end(), [](VertexMask x) { return x == 0; });
                bool disjoint = residues.size() >= 4;
                for (std::size_t i = 0; disjoint && i < residues.size(); ++i)
                    for (std::size_t j = i + 1; j < residues.size(); ++j)
                        if (residues[i] & residues[j]) {
                            disjoint = false;
                            break;
                        }
                if (empty || disjoint)
                    found = s.all() & ~removed;
            });
            return found;
        }
    }

    auto triples_test(const Realization & r, ExecPolicy policy) -> TriplesVerdict
    {
        TriplesVerdict v;
        v.forced_triples = r.hypergraph.triple_count();
        auto & ms = r.system.complements;
        if (std::any_of(ms.begin(), ms.end(), [](VertexMask m) { return m == 0; })) {
            v.reject = true;
            v.by_shortcut = true;
            v.witnesses = {r.system.all()};
            return v;
        }
        VertexMask quick = shortcut(r);
        v.witnesses = cliques_of_size(r.hypergraph, r.k + 1, policy);
        v.reject = ! v.witnesses.empty();
        if (quick) {
            if (! v.reject)
                throw Error("shortcut witness missed by the clique search");
            v.by_shortcut = true;
            std::stable_partition(v.witnesses.begin(), v.witnesses.end(), [&](VertexMask w) { return w == quick; });
        }
        for (auto w : v.witnesses)
            if (popcount(w) != r.k + 1 || ! triples_forced(r.system, w))
                throw Error("triples test witness failed its re-check");
        return v;
    }

    auto to_string(PairIndexing p) -> string
    {
        return p == PairIndexing::all_pairs ? "all-pairs" : "cyclic";
    }

    auto extremal_construct(PairIndexing indexing) -> Extremal
    {
        vector<string> labels;
        for (int i = 1; i <= 10; ++i)
            labels.push_back("x" + std::to_string(i));
        for (int i = 1; i <= 5; ++i)
            labels.push_back("y" + std::to_string(i));
        auto y = [](int i) { return 10 + (i - 1) % 5; };

        Extremal e;
        for (int i = 1; i <= 5; ++i)
            e.pairs.emplace_back(y(i), y(i + 1));
        if (indexing == PairIndexing::cyclic)
            for (int i = 1; i <= 5; ++i)
                e.pairs.push_back(e.pairs[i - 1]);
        else
            for (int i = 1; i <= 5; ++i)
                e.pairs.emplace_back(y(i), y(i + 2));

        e.family.ground = full_mask(15);
        for (int i = 0; i < 10; ++i)
            e.family.members.push_back((full_mask(10) & ~bit(i)) | e.pairs[i].mask());
        e.hypergraph = from_clique_family(labels, e.family);
        return e;
    }

    auto private_structure(const CliqueFamily & f, const vector<Edge> & designated) -> PrivateStructure
    {
        PrivateStructure p;
        for (int i = 0; i < f.size(); ++i) {
            int count = 0;
            for_each_subset_of_size(f.members[i], 2, [&](VertexMask pair) {
                for (int j = 0; j < f.size(); ++j)
                    if (j != i && (f.members[j] & pair) == pair)
                        return;
                ++count;
            });
            p.private_counts.push_back(count);
            bool own = false;
            if (i < static_cast<int>(designated.size())) {
                VertexMask d = designated[i].mask();
                own = (f.members[i] & d) == d;
                for (int j = 0; own && j < f.size(); ++j)
                    if (j != i && (f.members[j] & d) == d)
                        own = false;
            }
            p.designated_private.push_back(own);
        }
        try {
            p.irredundant_size = irredundant_subfamily(f).size();
        }
        catch (const DegenerateFamily &) {
            p.irredundant_size = 0;
        }
        return p;
    }

    void ExtremalReport::require() const
    {
        vector<std::pair<bool, string>> claims{
            {n == 15 && n_is_binomial, "n = 15 = C(6, 2)"},
            {members_are_cliques, "every member is a clique"},
            {omega_is_11, "omega = 11 (found " + std::to_string(omega) + ")"},
            {no_12_clique, "no 12-subset is a clique"},
            {empty_intersection, "empty intersection of the family"},
            {maximum_cliques_equal_family, "maximum cliques are exactly the family"},
        };
        for (auto & [ok, text] : claims)
            if (! ok)
                throw VerificationFailure(text);
    }

    auto extremal_verify(const Extremal & e, ExecPolicy policy) -> ExtremalReport
    {
        auto & h = e.hypergraph;
        ExtremalReport r;
        r.n = h.vertex_count();
        r.n_is_binomial = r.n == binomial(6, 2);
        r.members_are_cliques = std::all_of(e.family.members.begin(), e.family.members.end(),
            [&](VertexMask m) { return is_clique(h, m); });
        r.omega = clique_number(h, policy);
        r.omega_is_11 = r.omega == 11;

        bool twelve = false;
        for_each_subset_of_size(h.all_vertices(), 12, [&](VertexMask s) {
            if (! twelve && is_clique(h, s))
                twelve = true;
        });
        r.no_12_clique = ! twelve;

        r.empty_intersection = family_intersection(e.family) == 0;
        auto maximum = maximum_cliques(h, policy);
        r.maximum_clique_count = maximum.size();
        std::set<VertexMask> a(maximum.members.begin(), maximum.members.end());
        std::set<VertexMask> b(e.family.members.begin(), e.family.members.end());
        r.maximum_cliques_equal_family = a == b && b.size() == e.family.members.size();
        r.privacy = private_structure(e.family, e.pairs);
        return r;
    }

    namespace
    {
        using TripleBits = std::uint64_t;

        struct Lattice
        {
            int n, k;
            vector<VertexMask> sets;
            vector<TripleBits> set_triples;
            vector<TripleBits> larger_triples;
            vector<int> triple_index;

            Lattice(int n_, int k_) : n(n_), k(k_), triple_index(1u << n_, -1)
            {
                int t = 0;
                for_each_subset_of_size(full_mask(n), 3, [&](VertexMask f) { triple_index[f] = t++; });
                for_each_subset_of_size(full_mask(n), k, [&](VertexMask s) {
                    sets.push_back(s);
                    set_triples.push_back(bits(s));
                });
                for_each_subset_of_size(full_mask(n), k + 1, [&](VertexMask s) { larger_triples.push_back(bits(s)); });
            }

            auto bits(VertexMask s) const -> TripleBits
            {
                TripleBits b = 0;
                for_each_subset_of_size(s, 3, [&](VertexMask f) { b |= TripleBits{1} << triple_index[f]; });
                return b;
            }

            /// Maximum cliques of the spanned hypergraph when it has clique
            /// number k and their intersection is empty; empty otherwise.
            auto survivors(TripleBits h) const -> vector<VertexMask>
            {
                for (auto l : larger_triples)
                    if ((l & ~h) == 0)
                        return {};
                vector<VertexMask> maximum;
                VertexMask common = full_mask(n);
                for (std::size_t i = 0; i < sets.size(); ++i)
                    if ((set_triples[i] & ~h) == 0) {
                        maximum.push_back(sets[i]);
                        common &= sets[i];
                    }
                if (common != 0)
                    return {};
                return maximum;
            }
        };

        auto labelled_survivors(int n, int m, ExecPolicy policy) -> vector<std::pair<TripleBits, vector<VertexMask>>>
        {
            int k = n - m;
            if (k < 3 || n > 8 || binomial(n, k) > max_search_sets)
                throw SearchTooLarge("need k = n - m >= 3 and C(n, k) <= " + std::to_string(max_search_sets) +
                    "; got n = " + std::to_string(n) + ", k = " + std::to_string(k));
            Lattice lat{n, k};
            int count = static_cast<int>(lat.sets.size());
            vector<vector<std::pair<TripleBits, vector<VertexMask>>>> found(count);

#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::parallel)
            for (int least = 0; least < count; ++least) {
                std::unordered_set<TripleBits> seen;
                int rest = count - least - 1;
                for (std::uint32_t above = 0; above < (std::uint32_t{1} << rest); ++above) {
                    VertexMask common = lat.sets[least];
                    TripleBits h = lat.set_triples[least];
                    for (int j = 0; j < rest; ++j)
                        if ((above >> j) & 1u) {
                            common &= lat.sets[least + 1 + j];
                            h |= lat.set_triples[least + 1 + j];
                        }
                    if (common != 0 || ! seen.insert(h).second)
                        continue;
                    auto maximum = lat.survivors(h);
                    if (! maximum.empty())
                        found[least].emplace_back(h, std::move(maximum));
                }
            }

            std::map<TripleBits, vector<VertexMask>> merged;
            for (auto & part : found)
                for (auto & [h, maximum] : part)
                    merged.emplace(h, maximum);
            return {merged.begin(), merged.end()};
        }
    }

    auto count_labelled_configurations(int n, int m, ExecPolicy policy) -> long long
    {
        return static_cast<long long>(labelled_survivors(n, m, policy).size());
    }

    auto search_configurations(int n, int m, ExecPolicy policy) -> vector<Configuration>
    {
        auto labelled = labelled_survivors(n, m, policy);
        vector<string> labels;
        for (int v = 1; v <= n; ++v)
            labels.push_back(std::to_string(v));

        std::map<std::uint64_t, Configuration> classes;
        for (auto & [bits, maximum] : labelled) {
            Configuration c;
            c.k = n - m;
            c.maximum.ground = full_mask(n);
            c.maximum.members = maximum;
            c.hypergraph = from_clique_family(labels, c.maximum);
            auto code = small_canonical_code(c.hypergraph);
            classes.emplace(code, std::move(c));
        }
        vector<Configuration> result;
        for (auto & [code, c] : classes)
            result.push_back(std::move(c));
        return result;
    }

    auto to_json(const Realization & r) -> nlohmann::json
    {
        nlohmann::json j;
        j["system"] = to_json(r.system);
        j["k"] = r.k;
        j["triples"] = format_triple_list(r.hypergraph);
        j["family"] = family_to_json(r.hypergraph, r.family);
        return j;
    }

    auto to_json(const TriplesVerdict & v, const Realization & r) -> nlohmann::json
    {
        nlohmann::json j;
        j["verdict"] = v.reject ? "REJECT" : "PASS";
        j["forced_triples"] = v.forced_triples;
        j["clique_size_sought"] = r.k + 1;
        if (v.reject) {
            j["witness"] = r.hypergraph.names(v.witness());
            j["witness_count"] = v.witnesses.size();
            j["by_shortcut"] = v.by_shortcut;
        }
        return j;
    }
}
