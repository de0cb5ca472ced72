#include <szp/commands.hh>
#include <szp/errors.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace szp;

namespace
{
    auto emit(Certificate c, const std::string & path, bool quiet, std::chrono::steady_clock::time_point start) -> int
    {
        c.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        auto text = to_json(c).dump(2) + "\n";
        if (path.empty() || path == "-")
            std::cout << text;
        else {
            std::ofstream out{path};
            out << text;
            if (! out) {
                std::cerr << "cannot write " << path << "\n";
                return 1;
            }
        }
        if (! quiet) {
            for (auto & claim : c.claims)
                std::cerr << to_string(claim.status) << "  " << claim.name << ": " << claim.computed.dump() << "\n";
            std::cerr << c.count(Status::pass) << " pass, " << c.count(Status::finding) << " finding, "
                      << c.count(Status::fail) << " fail (" << c.runtime_ms << " ms)\n";
        }
        return c.failed() ? 1 : 0;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Exact checks for the order of 3-uniform hypergraphs whose maximum cliques have empty intersection"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string cert_path;
    bool serial = false, quiet = false;
    app.add_option("--cert", cert_path, "write the certificate here instead of stdout");
    app.add_flag("--serial", serial, "run every kernel on one thread");
    app.add_flag("-q,--quiet", quiet, "no claim summary on stderr");

    int m = 0;
    auto verify = app.add_subcommand("verify", "run the bound pipeline for one m");
    verify->add_option("--m", m, "complement size")->required()->check(CLI::Range(2, 4));

    ExtremalOptions extremal_options;
    auto extremal = app.add_subcommand("extremal", "build and check the fifteen-vertex construction");
    extremal->add_option("--export", extremal_options.export_path, "write the triple list here");
    extremal->add_flag("--check-private-pairs", extremal_options.check_private_pairs, "report which pairs are private");

    int oracle_n = 0, oracle_m = 0;
    auto oracle = app.add_subcommand("oracle", "exhaustive search over families of k-sets");
    oracle->add_option("--n", oracle_n, "vertices")->required();
    oracle->add_option("--m", oracle_m, "complement size")->required();

    int tau = 0;
    auto critical = app.add_subcommand("enumerate-critical", "list tau-critical graphs");
    critical->add_option("--tau", tau, "transversal number")->required()->check(CLI::Range(1, 5));

    CandidateOptions candidate_options;
    auto candidates = app.add_subcommand("candidates", "enumerate the weighted graphs of the m = 4 case analysis");
    candidates->add_option("--m", candidate_options.m, "complement size")->check(CLI::Range(4, 4));
    candidates->add_option("--emit-dot", candidate_options.dot_dir, "write one DOT file per candidate here");
    candidates->add_option("--golden", candidate_options.golden_path, "hand-drawn lists to compare against")
        ->check(CLI::ExistingFile);

    std::string cert_in;
    auto check = app.add_subcommand("check-cert", "recompute a certificate");
    check->add_option("path", cert_in, "certificate file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    auto policy = serial ? ExecPolicy::serial : ExecPolicy::parallel;
    auto start = std::chrono::steady_clock::now();
    try {
        if (*verify)
            return emit(cmd_verify(m, policy), cert_path, quiet, start);
        if (*extremal)
            return emit(cmd_extremal(extremal_options, policy), cert_path, quiet, start);
        if (*oracle)
            return emit(cmd_oracle(oracle_n, oracle_m, policy), cert_path, quiet, start);
        if (*critical)
            return emit(cmd_enumerate_critical(tau, policy), cert_path, quiet, start);
        if (*candidates)
            return emit(cmd_candidates(candidate_options, policy), cert_path, quiet, start);
        if (*check) {
            std::ifstream in{cert_in};
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            }
            catch (const nlohmann::json::exception & e) {
                throw ParseError(e.what());
            }
            return emit(cmd_check_cert(j, policy), cert_path, quiet, start);
        }
    }
    catch (const SearchTooLarge & e) {
        std::cerr << e.what() << "\n"
                  << "oracle needs n - m >= 3 and C(n, n - m) <= " << max_search_sets << "\n";
        return 2;
    }
    catch (const OutOfRange & e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    catch (const Error & e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
