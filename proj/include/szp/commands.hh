#pragma once

#include <szp/realize.hh>

#include <string>
#include <vector>

#include <json.hpp>

namespace szp
{
    inline constexpr const char * toolkit_version = "0.1.0";

    enum class Status
    {
        pass,
        fail,
        /// The computation disagrees with a statement or drawing it was
        /// checked against, without breaking the verified conclusion.
        finding
    };

    auto to_string(Status s) -> std::string;
    auto status_from_string(const std::string & s) -> Status;

    struct Claim
    {
        std::string name;
        nlohmann::json expected;
        nlohmann::json computed;
        Status status = Status::pass;
    };

    struct Certificate
    {
        std::string command;
        nlohmann::json inputs = nlohmann::json::object();
        std::vector<Claim> claims;
        nlohmann::json witnesses = nlohmann::json::array();
        std::string version = toolkit_version;
        long long runtime_ms = 0;

        void add(std::string name, nlohmann::json expected, nlohmann::json computed, Status status);
        /// PASS when expected == computed, otherwise the given status.
        void compare(std::string name, nlohmann::json expected, nlohmann::json computed, Status otherwise = Status::fail);
        auto failed() const -> bool;
        auto count(Status s) const -> int;
    };

    /// Keys are sorted; runtime_ms is the only field that varies between
    /// identical runs.
    auto to_json(const Certificate & c) -> nlohmann::json;
    auto certificate_from_json(const nlohmann::json & j) -> Certificate;

    /// Proof pipeline for m in {2, 3, 4}; OutOfRange otherwise.
    auto cmd_verify(int m, ExecPolicy policy = ExecPolicy::parallel) -> Certificate;

    struct ExtremalOptions
    {
        std::string export_path;
        bool check_private_pairs = false;
    };

    auto cmd_extremal(const ExtremalOptions & options, ExecPolicy policy = ExecPolicy::parallel) -> Certificate;

    auto cmd_oracle(int n, int m, ExecPolicy policy = ExecPolicy::parallel) -> Certificate;

    auto cmd_enumerate_critical(int tau, ExecPolicy policy = ExecPolicy::parallel) -> Certificate;

    struct CandidateOptions
    {
        int m = 4;
        std::string dot_dir;
        std::string golden_path;
    };

    auto cmd_candidates(const CandidateOptions & options, ExecPolicy policy = ExecPolicy::parallel) -> Certificate;

    /// Re-runs the certified command from its inputs, without writing any
    /// files, and compares every claim.
    auto cmd_check_cert(const nlohmann::json & cert, ExecPolicy policy = ExecPolicy::parallel) -> Certificate;

    /// Dispatches on the command name with the stored inputs.
    auto rerun(const std::string & command, const nlohmann::json & inputs, ExecPolicy policy) -> Certificate;
}
