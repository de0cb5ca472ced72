#include <szp/errors.hh>
#include <szp/pair_system.hh>
#include <szp/transversal.hh>

#include <algorithm>

using std::string;
using std::vector;

namespace szp
{
    namespace
    {
        auto intersection_without(const CliqueFamily & f, int skip) -> VertexMask
        {
            VertexMask result = f.ground;
            for (int i = 0; i < f.size(); ++i)
                if (i != skip)
                    result &= f.members[i];
            return result;
        }
    }

    auto is_irredundant(const CliqueFamily & f) -> bool
    {
        if (f.members.empty() || family_intersection(f) != 0)
            return false;
        for (int i = 0; i < f.size(); ++i)
            if (intersection_without(f, i) == 0)
                return false;
        return true;
    }

    auto irredundant_subfamily(const CliqueFamily & f) -> CliqueFamily
    {
        if (f.members.empty() || family_intersection(f) != 0)
            throw NotEmptyIntersection("the family has a common vertex");

        CliqueFamily result = f;
        for (int i = 0; i < result.size();) {
            if (result.size() > 1 && intersection_without(result, i) == 0)
                result.members.erase(result.members.begin() + i);
            else
                ++i;
        }

        if (! is_irredundant(result))
            throw Error("irredundant subfamily audit failed");
        if (result.size() < 3)
            throw DegenerateFamily("irredundant subfamily has " + std::to_string(result.size()) + " members");
        return result;
    }

    auto private_pairs(const CliqueFamily & f) -> vector<PrivatePair>
    {
        vector<PrivatePair> result;
        for (int i = 0; i < f.size(); ++i) {
            PrivatePair choice;
            auto vs = bits_of(f.members[i]);
            for (std::size_t x = 0; x < vs.size(); ++x)
                for (std::size_t y = x + 1; y < vs.size(); ++y) {
                    VertexMask p = bit(vs[x]) | bit(vs[y]);
                    bool shared = false;
                    for (int j = 0; j < f.size(); ++j)
                        if (j != i && (f.members[j] & p) == p)
                            shared = true;
                    if (shared)
                        continue;
                    if (choice.alternatives++ == 0)
                        choice.pair = Edge{vs[x], vs[y]};
                }
            if (choice.alternatives == 0)
                throw NoPrivatePair(i, "every pair of the member lies in another member");
            result.push_back(choice);
        }
        return result;
    }

    auto private_pairs(const CliqueFamily & f, const Hypergraph3 & h) -> vector<PrivatePair>
    {
        int w = clique_number(h);
        for (int i = 0; i < f.size(); ++i)
            if (popcount(f.members[i]) != w || ! is_clique(h, f.members[i]))
                throw PreconditionFailed("member " + std::to_string(i) + " is not a maximum clique");
        return private_pairs(f);
    }

    auto pairs_of(const vector<PrivatePair> & chosen) -> vector<Edge>
    {
        vector<Edge> result;
        for (auto & c : chosen)
            result.push_back(c.pair);
        return result;
    }

    auto satisfies_law(const PairSystem & s) -> bool
    {
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j)
                if (((s.pairs[i].mask() & s.complements[j]) == 0) != (i == j))
                    return false;
        return true;
    }

    void validate(const PairSystem & s)
    {
        if (s.complements.size() != s.pairs.size())
            throw PreconditionFailed("one complement per pair");
        VertexMask covered = 0;
        for (auto m : s.complements) {
            if (popcount(m) != s.m)
                throw PreconditionFailed("complement of size " + std::to_string(popcount(m)) + ", expected " + std::to_string(s.m));
            if ((m & ~s.all()) != 0)
                throw PreconditionFailed("complement outside the ground set");
            covered |= m;
        }
        for (auto & p : s.pairs)
            if (p.is_loop() || p.v >= static_cast<int>(s.ground.size()))
                throw PreconditionFailed("pairs are 2-subsets of the ground set");
        for (std::size_t i = 0; i < s.pairs.size(); ++i)
            for (std::size_t j = i + 1; j < s.pairs.size(); ++j)
                if (s.pairs[i] == s.pairs[j])
                    throw PreconditionFailed("pairs are not distinct");
        if (covered != s.all())
            throw PreconditionFailed("complements do not cover the ground set");
        if (! satisfies_law(s))
            throw PreconditionFailed("the (2,m) law fails");
    }

    auto build_system(const vector<string> & ground, const CliqueFamily & f, const vector<Edge> & pairs) -> PairSystem
    {
        if (f.members.empty())
            throw PreconditionFailed("empty family");
        if (pairs.size() != f.members.size())
            throw PreconditionFailed("one pair per member");
        VertexMask all = full_mask(static_cast<int>(ground.size()));
        VertexMask covered = 0;
        for (auto n : f.members)
            covered |= n;
        if (covered != all)
            throw PreconditionFailed("the members do not cover the ground set");

        int size = popcount(f.members.front());
        for (auto n : f.members)
            if (popcount(n) != size)
                throw NonUniformFamily("members of sizes " + std::to_string(size) + " and " + std::to_string(popcount(n)));

        PairSystem s;
        s.ground = ground;
        s.m = static_cast<int>(ground.size()) - size;
        s.pairs = pairs;
        for (auto n : f.members)
            s.complements.push_back(all & ~n);
        validate(s);
        return s;
    }

    auto pairs_graph(const PairSystem & s) -> LoopGraph
    {
        LoopGraph g{s.ground};
        for (auto & p : s.pairs)
            g.add_edge(p.u, p.v);
        return g;
    }

    auto truncations_fit(const PairSystem & s) -> bool
    {
        auto g = pairs_graph(s);
        auto adj = g.adjacency();
        for (auto & p : s.pairs)
            if (truncated_cover(adj, g.all_vertices(), 0, p) > s.m)
                return false;
        return true;
    }

    auto to_json(const PairSystem & s) -> nlohmann::json
    {
        auto names = [&](VertexMask m) {
            vector<string> r;
            for_each_bit(m, [&](int v) { r.push_back(s.ground[v]); });
            return r;
        };
        nlohmann::json j;
        j["m"] = s.m;
        j["pairs"] = nlohmann::json::array();
        for (auto & p : s.pairs)
            j["pairs"].push_back({s.ground[p.u], s.ground[p.v]});
        j["complements"] = nlohmann::json::array();
        for (auto m : s.complements)
            j["complements"].push_back(names(m));
        j["ground"] = s.ground;
        return j;
    }

    auto system_from_json(const nlohmann::json & j) -> PairSystem
    {
        try {
            PairSystem s;
            s.ground = j.at("ground").get<vector<string>>();
            s.m = j.at("m").get<int>();
            auto index = [&](const string & tok) {
                auto it = std::find(s.ground.begin(), s.ground.end(), tok);
                if (it == s.ground.end())
                    throw ParseError("unknown vertex '" + tok + "'");
                return static_cast<int>(it - s.ground.begin());
            };
            for (auto & p : j.at("pairs")) {
                auto ends = p.get<vector<string>>();
                if (ends.size() != 2)
                    throw ParseError("a pair has two vertices");
                s.pairs.emplace_back(index(ends[0]), index(ends[1]));
            }
            for (auto & c : j.at("complements")) {
                VertexMask m = 0;
                for (auto & tok : c.get<vector<string>>())
                    m |= bit(index(tok));
                s.complements.push_back(m);
            }
            validate(s);
            return s;
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(e.what());
        }
    }
}
