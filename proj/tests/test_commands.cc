#include <szp/commands.hh>
#include <szp/errors.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace szp;
using nlohmann::json;

namespace
{
    auto without_runtime(json j) -> json
    {
        j.erase("runtime_ms");
        return j;
    }

    auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / name).string();
    }
}

TEST_CASE("certificates round trip through JSON")
{
    Certificate c;
    c.command = "oracle";
    c.inputs = {{"n", 5}, {"m", 2}};
    c.compare("same", 1, 1);
    c.compare("differs", 1, 2, Status::finding);
    c.add("failed", "x", "y", Status::fail);
    c.runtime_ms = 12;
    CHECK(c.claims[0].status == Status::pass);
    CHECK(c.claims[1].status == Status::finding);
    CHECK(c.failed());
    CHECK(c.count(Status::pass) == 1);

    auto j = to_json(c);
    auto back = certificate_from_json(j);
    CHECK(to_json(back) == j);
    CHECK_THROWS_AS(certificate_from_json(json{{"command", "x"}}), ParseError);
    CHECK_THROWS_AS(status_from_string("MAYBE"), ParseError);
}

TEST_CASE("verification pipeline for small m")
{
    for (int m : {2, 3}) {
        auto c = cmd_verify(m);
        CHECK(! c.failed());
        CHECK(c.count(Status::finding) == 0);
        auto & last = c.claims.back();
        CHECK(last.name == "n <= C(m + 2, 2)");
        CHECK(last.computed == (m == 2 ? 6 : 10));
        CHECK(without_runtime(to_json(c)) == without_runtime(to_json(cmd_verify(m, ExecPolicy::serial))));
    }
    CHECK_THROWS_AS(cmd_verify(5), OutOfRange);
    CHECK_THROWS_AS(cmd_verify(1), OutOfRange);
}

TEST_CASE("extremal certificate")
{
    ExtremalOptions o;
    o.export_path = temp_path("szp-test-extremal.tri");
    o.check_private_pairs = true;
    auto c = cmd_extremal(o);
    CHECK(! c.failed());
    CHECK(c.count(Status::finding) >= 3);
    bool exported = false;
    for (auto & claim : c.claims)
        if (claim.name == "exported triple list round-trips")
            exported = claim.status == Status::pass;
    CHECK(exported);
    CHECK(std::filesystem::exists(o.export_path));

    auto check = cmd_check_cert(to_json(c));
    CHECK(! check.failed());
}

TEST_CASE("oracle certificates")
{
    auto above = cmd_oracle(7, 2);
    CHECK(! above.failed());
    CHECK(above.claims[0].computed == 0);
    auto at = cmd_oracle(6, 2);
    CHECK(! at.failed());
    CHECK(at.claims[0].computed.get<int>() >= 1);
    CHECK(at.witnesses.size() == 1);
    CHECK_THROWS_AS(cmd_oracle(30, 2), SearchTooLarge);
}

TEST_CASE("critical graph certificates")
{
    auto c = cmd_enumerate_critical(3);
    CHECK(! c.failed());
    CHECK(c.claims[0].computed == 4);
    CHECK(c.witnesses.size() == 4);
    CHECK(cmd_enumerate_critical(1).claims[0].computed == 1);
    CHECK(cmd_enumerate_critical(2).claims[0].computed == 2);
    CHECK_THROWS_AS(cmd_enumerate_critical(0), OutOfRange);
}

TEST_CASE("candidate certificate with golden lists and DOT output")
{
    CandidateOptions o;
    o.golden_path = SZP_DATA_DIR "/figures.golden.json";
    o.dot_dir = temp_path("szp-test-dot");
    std::filesystem::remove_all(o.dot_dir);
    auto c = cmd_candidates(o);
    CHECK(! c.failed());
    int files = 0;
    for (auto & entry : std::filesystem::directory_iterator(o.dot_dir)) {
        ++files;
        std::ifstream in{entry.path()};
        std::string first;
        std::getline(in, first);
        CHECK(first.rfind("graph ", 0) == 0);
    }
    CHECK(files == 43);
    CHECK(! cmd_check_cert(to_json(c)).failed());

    o.golden_path = temp_path("szp-missing-golden.json");
    std::filesystem::remove(o.golden_path);
    CHECK_THROWS_AS(cmd_candidates(o), ParseError);
}

TEST_CASE("tampered certificates are caught")
{
    auto j = to_json(cmd_enumerate_critical(3));
    CHECK(! cmd_check_cert(j).failed());

    auto changed = j;
    changed["claims"][0]["computed"] = 5;
    CHECK(cmd_check_cert(changed).failed());

    auto versioned = j;
    versioned["toolkit_version"] = "0.0.0";
    CHECK(cmd_check_cert(versioned).failed());

    auto unknown = j;
    unknown["command"] = "prove";
    CHECK_THROWS_AS(cmd_check_cert(unknown), ParseError);

    auto failing = to_json(cmd_enumerate_critical(2));
    failing["claims"][0]["status"] = "FAIL";
    CHECK(cmd_check_cert(failing).failed());
}
