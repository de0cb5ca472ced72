#include <szp/canonical.hh>
#include <szp/commands.hh>
#include <szp/errors.hh>
#include <szp/graph_enum.hh>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace szp
{
    auto to_string(Status s) -> string
    {
        switch (s) {
            case Status::pass: return "PASS";
            case Status::fail: return "FAIL";
            case Status::finding: return "FINDING";
        }
        return "?";
    }

    auto status_from_string(const string & s) -> Status
    {
        for (auto x : {Status::pass, Status::fail, Status::finding})
            if (to_string(x) == s)
                return x;
        throw ParseError("unknown status '" + s + "'");
    }

    void Certificate::add(string name, json expected, json computed, Status status)
    {
        claims.push_back(Claim{std::move(name), std::move(expected), std::move(computed), status});
    }

    void Certificate::compare(string name, json expected, json computed, Status otherwise)
    {
        auto status = expected == computed ? Status::pass : otherwise;
        add(std::move(name), std::move(expected), std::move(computed), status);
    }

    auto Certificate::failed() const -> bool
    {
        return count(Status::fail) > 0;
    }

    auto Certificate::count(Status s) const -> int
    {
        return static_cast<int>(std::count_if(claims.begin(), claims.end(), [&](auto & c) { return c.status == s; }));
    }

    auto to_json(const Certificate & c) -> json
    {
        json j;
        j["command"] = c.command;
        j["inputs"] = c.inputs;
        j["claims"] = json::array();
        for (auto & claim : c.claims)
            j["claims"].push_back(
                {{"name", claim.name}, {"expected", claim.expected}, {"computed", claim.computed}, {"status", to_string(claim.status)}});
        j["witnesses"] = c.witnesses;
        j["toolkit_version"] = c.version;
        j["runtime_ms"] = c.runtime_ms;
        return j;
    }

    auto certificate_from_json(const json & j) -> Certificate
    {
        try {
            Certificate c;
            c.command = j.at("command").get<string>();
            c.inputs = j.at("inputs");
            for (auto & claim : j.at("claims"))
                c.add(claim.at("name").get<string>(), claim.at("expected"), claim.at("computed"),
                    status_from_string(claim.at("status").get<string>()));
            c.witnesses = j.at("witnesses");
            c.version = j.at("toolkit_version").get<string>();
            c.runtime_ms = j.at("runtime_ms").get<long long>();
            return c;
        }
        catch (const json::exception & e) {
            throw ParseError(e.what());
        }
    }

    namespace
    {
        auto edge_names(const LoopGraph & g) -> json
        {
            json a = json::array();
            for (auto & e : g.edges())
                a.push_back(g.edge_name(e));
            return a;
        }

        auto candidate_json(const CaseCandidate & c) -> json
        {
            auto g = letter_labels(c.graph);
            return {{"class", to_string(c.core)}, {"edges", edge_names(g)}, {"weights", c.weights.weights}, {"bound", c.bound}};
        }

        auto at_most(int v) -> json
        {
            return {{"at_most", v}};
        }

        auto status_if(bool ok, Status otherwise = Status::fail) -> Status
        {
            return ok ? Status::pass : otherwise;
        }

        struct Outcome
        {
            bool any_pass = false;
            json record;
            vector<string> verdicts;
            int witness_size = 0;
        };

        auto realize_and_test(const CaseCandidate & c, ExecPolicy policy) -> Outcome
        {
            Outcome o;
            auto cand = make_candidate(letter_labels(c.graph), c.m);
            o.record = candidate_json(c);
            o.record["realizations"] = json::array();
            try {
                for (auto & r : forced_realization(cand, cand.bound)) {
                    auto v = triples_test(r, policy);
                    o.any_pass = o.any_pass || ! v.reject;
                    o.verdicts.push_back(v.reject ? "REJECT" : "PASS");
                    o.witness_size = popcount(v.witness());
                    json entry = to_json(v, r);
                    entry["complements"] = to_json(r.system)["complements"];
                    o.record["realizations"].push_back(entry);
                }
            }
            catch (const Infeasible & e) {
                o.verdicts.push_back("INFEASIBLE");
                o.record["infeasible"] = e.what();
            }
            return o;
        }

        auto single(const vector<string> & verdicts) -> json
        {
            if (verdicts.size() == 1)
                return verdicts.front();
            return verdicts;
        }
    }

    auto cmd_verify(int m, ExecPolicy policy) -> Certificate
    {
        if (m < 2 || m > 4)
            throw OutOfRange("verify covers m = 2, 3, 4");
        Certificate c;
        c.command = "verify";
        c.inputs = {{"m", m}};
        int limit = static_cast<int>(binomial(m + 2, 2));
        int largest = 0;

        auto s1 = step1_bound(m);
        c.add("transversal number at most 2: order bound", at_most(limit),
            {{"case_a", s1.case_a}, {"case_b", s1.case_b}, {"bound", s1.bound}}, status_if(s1.bound <= limit));
        largest = std::max(largest, s1.bound);

        try {
            auto s2 = step2_verify(m, policy);
            int support_max = 0;
            for (auto & e : s2.above)
                support_max = std::max(support_max, popcount(support(e.graph)));
            c.add("transversal number m + 1: critical graphs have at most 2(m + 1) vertices", at_most(2 * (m + 1)),
                {{"graphs", s2.above.size()}, {"largest", support_max}}, status_if(support_max <= 2 * (m + 1)));
            c.add("transversal number m + 1: 2(m + 1) within the bound", at_most(limit), 2 * (m + 1),
                status_if(2 * (m + 1) <= limit));
            largest = std::max(largest, 2 * (m + 1));

            int value_max = 0;
            for (auto & e : s2.at)
                value_max = std::max(value_max, e.value);
            c.add("transversal number m: vertices plus edges of the critical subgraph", at_most(limit),
                {{"graphs", s2.at.size()}, {"largest", value_max}}, status_if(value_max <= limit));
            largest = std::max(largest, value_max);
        }
        catch (const BoundViolation & e) {
            c.add("second step", "no violation", e.what(), Status::fail);
        }

        if (m == 4) {
            auto cs = enumerate_case_candidates(4, policy);
            int sixteen = 0, fifteen = 0, case_value = 0;
            json table = json::array();
            for (auto & cand : cs) {
                if (cand.bound < 15) {
                    case_value = std::max(case_value, cand.bound);
                    table.push_back(candidate_json(cand));
                    continue;
                }
                auto o = realize_and_test(cand, policy);
                case_value = std::max(case_value, o.any_pass ? cand.bound : cand.bound - 1);
                table.push_back(o.record);
                auto name = "bound " + std::to_string(cand.bound) + " " + to_string(cand.core) + " candidate " +
                    string(edge_names(letter_labels(cand.graph)).dump());
                if (cand.bound == 16) {
                    ++sixteen;
                    c.compare(name + ": triples test", "REJECT", single(o.verdicts));
                    c.compare(name + ": witness size", 13, o.witness_size);
                }
                else {
                    ++fifteen;
                    bool c5 = are_isomorphic(cand.graph, zoo::cycle(5));
                    c.compare(name + ": triples test", c5 ? "PASS" : "REJECT", single(o.verdicts), Status::finding);
                }
            }
            c.compare("transversal number 3: candidates with bound 16", 1, sixteen);
            c.compare("transversal number 3: candidates with bound 15", 3, fifteen, Status::finding);
            c.add("transversal number 3: largest order not excluded", at_most(limit), case_value,
                status_if(case_value <= limit));
            largest = std::max(largest, case_value);
            c.witnesses.push_back({{"candidates", table}});
        }

        c.add("n <= C(m + 2, 2)", at_most(limit), largest, status_if(largest <= limit));
        return c;
    }

    auto cmd_extremal(const ExtremalOptions & options, ExecPolicy policy) -> Certificate
    {
        Certificate c;
        c.command = "extremal";
        c.inputs = {{"export", options.export_path}, {"check_private_pairs", options.check_private_pairs}};

        auto e = extremal_construct(PairIndexing::all_pairs);
        auto r = extremal_verify(e, policy);
        c.compare("order", 15, r.n);
        c.compare("order equals C(6, 2)", true, r.n_is_binomial);
        c.compare("every N_i is a clique of size 11", true, r.members_are_cliques);
        c.compare("clique number", 11, r.omega);
        c.compare("no 12-subset is a clique", true, r.no_12_clique);
        c.compare("maximum cliques have empty intersection", true, r.empty_intersection);
        c.compare("number of maximum cliques", 10, r.maximum_clique_count, Status::finding);
        c.compare("maximum cliques are exactly the ten N_i", true, r.maximum_cliques_equal_family, Status::finding);

        auto cyclic = extremal_construct(PairIndexing::cyclic);
        auto rc = extremal_verify(cyclic, policy);
        c.compare("clique number with p_i = p_(i-5) for i > 5", 11, rc.omega, Status::finding);

        auto h = e.hypergraph;
        json extra = json::array();
        for (auto m : maximum_cliques(h, policy).members)
            if (std::find(e.family.members.begin(), e.family.members.end(), m) == e.family.members.end())
                extra.push_back(h.names(m));
        c.witnesses.push_back({{"pairs", "p_1..p_5 = y_i y_(i+1), p_6..p_10 = y_i y_(i+2)"},
            {"family", family_to_json(h, e.family)}, {"maximum_cliques_outside_family", extra}});
        json cyc_witness = json::array();
        for (auto m : cliques_of_size(cyclic.hypergraph, rc.omega, policy))
            cyc_witness.push_back(cyclic.hypergraph.names(m));
        c.witnesses.push_back({{"cyclic_reading_largest_cliques", cyc_witness}});

        if (options.check_private_pairs) {
            c.compare("each p_i is private to N_i", vector<bool>(10, true), r.privacy.designated_private, Status::finding);
            c.compare("private pairs per member", vector<int>(10, 1), r.privacy.private_counts, Status::finding);
            c.compare("irredundant subfamily size", 10, r.privacy.irredundant_size, Status::finding);
            c.compare("cyclic reading: each p_i is private to N_i", vector<bool>(10, true),
                rc.privacy.designated_private, Status::finding);
            c.compare("cyclic reading: private pairs per member", vector<int>(10, 1), rc.privacy.private_counts,
                Status::finding);
        }

        if (! options.export_path.empty()) {
            {
                std::ofstream out{options.export_path};
                out << format_triple_list(h);
                if (! out)
                    throw Error("cannot write " + options.export_path);
            }
            std::ifstream in{options.export_path};
            std::stringstream text;
            text << in.rdbuf();
            c.compare("exported triple list round-trips", true, parse_triple_list(text.str()) == h);
        }
        return c;
    }

    auto cmd_oracle(int n, int m, ExecPolicy policy) -> Certificate
    {
        Certificate c;
        c.command = "oracle";
        c.inputs = {{"n", n}, {"m", m}};
        auto found = search_configurations(n, m, policy);
        long long labelled = count_labelled_configurations(n, m, policy);
        int limit = static_cast<int>(binomial(m + 2, 2));
        int count = static_cast<int>(found.size());
        if (n > limit)
            c.compare("survivors up to isomorphism above the bound", 0, count);
        else if (n == limit)
            c.add("survivors up to isomorphism at the bound", {{"at_least", 1}}, count, status_if(count >= 1));
        else
            c.add("survivors up to isomorphism below the bound", nullptr, count, Status::pass);
        c.add("distinct labelled survivors", nullptr, labelled, Status::pass);
        if (! found.empty()) {
            auto & w = found.front();
            json members = json::array();
            for (auto s : w.maximum.members)
                members.push_back(w.hypergraph.names(s));
            c.witnesses.push_back({{"triples", format_triple_list(w.hypergraph)}, {"maximum_cliques", members}});
        }
        return c;
    }

    auto cmd_enumerate_critical(int tau, ExecPolicy policy) -> Certificate
    {
        if (tau < 1 || tau > 5)
            throw OutOfRange("enumerate-critical covers tau = 1..5");
        Certificate c;
        c.command = "enumerate-critical";
        c.inputs = {{"tau", tau}};
        auto gs = enumerate_tau_critical(tau, 2 * tau, policy);
        c.add("critical graphs up to isomorphism", nullptr, gs.size(), Status::pass);
        if (tau == 3) {
            vector<LoopGraph> named{zoo::matching(3), zoo::k2_plus_c3(), zoo::cycle(5), zoo::complete(4)};
            bool all = gs.size() == named.size();
            for (auto & g : named)
                all = all && std::count_if(gs.begin(), gs.end(), [&](auto & h) { return are_isomorphic(g, h); }) == 1;
            c.compare("exactly 3K2, K2+C3, C5, K4", true, all);
        }
        bool eg = true, gl = true;
        for (auto & g : gs) {
            eg = eg && erdos_gallai_check(g);
            gl = gl && gyarfas_lehel_check(g);
            c.witnesses.push_back(edge_names(letter_labels(g)));
        }
        c.compare("support at most 2 tau for every graph", true, eg);
        c.compare("|V| + |E| at most C(tau + 2, 2) for every graph", true, gl);
        return c;
    }

    auto cmd_candidates(const CandidateOptions & options, ExecPolicy policy) -> Certificate
    {
        if (options.m != 4)
            throw OutOfRange("candidates covers m = 4");
        Certificate c;
        c.command = "candidates";
        c.inputs = {{"m", options.m}, {"emit_dot", options.dot_dir}, {"golden", options.golden_path}};
        auto cs = enumerate_case_candidates(4, policy);

        std::map<string, int> per_class;
        vector<int> k4_bounds;
        int sixteen = 0, fifteen = 0, cyclic_last = 0;
        json table = json::array();
        for (auto & cand : cs) {
            ++per_class[to_string(cand.core)];
            sixteen += cand.bound == 16;
            fifteen += cand.bound == 15;
            if (cand.core == CoreClass::k4)
                k4_bounds.push_back(cand.bound);
            if (cand.core == CoreClass::acyclic && ! is_forest(cand.graph))
                ++cyclic_last;
            table.push_back(candidate_json(cand));
        }
        c.add("candidates per class", nullptr, per_class, Status::pass);
        c.compare("candidates with bound 16", 1, sixteen);
        c.compare("candidates with bound 15", 3, fifteen, Status::finding);
        c.compare("K4 class bounds", vector<int>{16, 15, 14, 13}, k4_bounds, Status::finding);
        c.compare("last class is cycle-free", 0, cyclic_last, Status::finding);

        c.compare("bound of K4", 16, make_candidate(zoo::complete(4), 4).bound);
        c.compare("bound of C5", 15, make_candidate(zoo::cycle(5), 4).bound);
        c.compare("bound of 3K2", 12, make_candidate(zoo::matching(3), 4).bound);
        c.compare("bound of the triple star", 15, make_candidate(zoo::triple_star(), 4).bound);

        for (auto & cov : case_rule_coverage(cs, policy)) {
            json missed = json::array();
            for (auto & g : cov.missed)
                missed.push_back(edge_names(letter_labels(g)));
            c.compare(to_string(cov.core) + ": restricted growth rule reaches every candidate", cov.candidates,
                cov.reached, Status::finding);
            if (! cov.missed.empty())
                c.witnesses.push_back({{"rule", cov.rule}, {"missed", missed}});
        }

        if (! options.golden_path.empty()) {
            std::ifstream in{options.golden_path};
            if (! in)
                throw ParseError("cannot read " + options.golden_path);
            json data;
            try {
                data = json::parse(in);
            }
            catch (const json::exception & e) {
                throw ParseError(e.what());
            }
            for (auto & d : golden_diff(load_golden(data), cs)) {
                auto k = to_string(d.core);
                c.compare(k + ": printed bounds equal recomputed bounds of the drawings", d.stated, d.drawn_computed,
                    Status::finding);
                c.compare(k + ": drawn bounds equal enumerated bounds", d.stated, d.enumerated, Status::finding);
                c.witnesses.push_back({{"class", k}, {"notes", d.notes}, {"reduced_differs", d.reduced_differs}});
            }
        }

        if (! options.dot_dir.empty()) {
            std::filesystem::create_directories(options.dot_dir);
            std::map<string, int> index;
            for (auto & cand : cs) {
                auto k = to_string(cand.core);
                auto lettered = cand;
                lettered.weights = weigh(letter_labels(cand.graph), 4);
                std::ostringstream name;
                name << k << "_" << ++index[k] << "_n" << cand.bound;
                std::ofstream out{std::filesystem::path(options.dot_dir) / (name.str() + ".dot")};
                out << weighted_dot(lettered.weights, name.str());
            }
            c.add("DOT files written", cs.size(), cs.size(), Status::pass);
        }
        c.witnesses.push_back({{"candidates", table}});
        return c;
    }

    auto rerun(const string & command, const json & inputs, ExecPolicy policy) -> Certificate
    {
        try {
            if (command == "verify")
                return cmd_verify(inputs.at("m").get<int>(), policy);
            if (command == "extremal") {
                ExtremalOptions o;
                o.check_private_pairs = inputs.at("check_private_pairs").get<bool>();
                if (! inputs.at("export").get<string>().empty())
                    o.export_path = (std::filesystem::temp_directory_path() / "szp-recheck.tri").string();
                auto c = cmd_extremal(o, policy);
                c.inputs = inputs;
                return c;
            }
            if (command == "oracle")
                return cmd_oracle(inputs.at("n").get<int>(), inputs.at("m").get<int>(), policy);
            if (command == "enumerate-critical")
                return cmd_enumerate_critical(inputs.at("tau").get<int>(), policy);
            if (command == "candidates") {
                CandidateOptions o;
                o.m = inputs.at("m").get<int>();
                o.golden_path = inputs.at("golden").get<string>();
                if (! inputs.at("emit_dot").get<string>().empty())
                    o.dot_dir = (std::filesystem::temp_directory_path() / "szp-recheck-dot").string();
                auto c = cmd_candidates(o, policy);
                c.inputs = inputs;
                return c;
            }
        }
        catch (const json::exception & e) {
            throw ParseError(e.what());
        }
        throw ParseError("unknown command '" + command + "'");
    }

    auto cmd_check_cert(const json & cert, ExecPolicy policy) -> Certificate
    {
        auto original = certificate_from_json(cert);
        Certificate c;
        c.command = "check-cert";
        c.inputs = {{"command", original.command}, {"inputs", original.inputs}};
        auto again = rerun(original.command, original.inputs, policy);

        c.compare("toolkit version", original.version, again.version);
        c.compare("number of claims", original.claims.size(), again.claims.size());
        auto a = to_json(original), b = to_json(again);
        int mismatched = 0;
        for (std::size_t i = 0; i < std::min(a["claims"].size(), b["claims"].size()); ++i)
            if (a["claims"][i] != b["claims"][i]) {
                ++mismatched;
                c.witnesses.push_back({{"certified", a["claims"][i]}, {"recomputed", b["claims"][i]}});
            }
        c.compare("claims reproduced", 0, mismatched);
        c.compare("witnesses reproduced", true, a["witnesses"] == b["witnesses"]);
        c.compare("certified command has no failed claim", 0, original.count(Status::fail));
        return c;
    }
}
