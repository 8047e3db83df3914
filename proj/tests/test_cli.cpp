#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "neoramsey/cli.hpp"

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
    std::ostringstream out, err;
    std::vector<std::string> argv(args.begin(), args.end());
    CliResult r;
    r.exit_code = neoramsey::cli::run(argv, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json parse_out(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("closure command prints the closure as a comma list") {
    CliResult r = run_cli({"closure", "7,14,21,28"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7,14,21,28\n");

    CliResult j = run_cli({"closure", "1,4", "--json"});
    CHECK(j.exit_code == 0);
    nlohmann::json doc = parse_out(j);
    CHECK(doc["closure"] == nlohmann::json({1, 3, 4}));
    CHECK(doc["closed"] == false);
}

TEST_CASE("distance lists are validated strictly") {
    CHECK(run_cli({"closure", "1,1"}).exit_code == 2);
    CHECK(run_cli({"closure", "0,2"}).exit_code == 2);
    CHECK(run_cli({"closure", "4,1"}).exit_code == 2);
    CHECK(run_cli({"closure", "1,x"}).exit_code == 2);
}

TEST_CASE("search command JSON") {
    CliResult r = run_cli({"search", "3", "3", "--json"});
    CHECK(r.exit_code == 0);
    nlohmann::json doc = parse_out(r);
    CHECK(doc["neo_ramsey"] == 6);
    CHECK(doc["last_legal_limit"] == 4);
    CHECK(doc["first_failing_limit"] == 5);
    CHECK(doc["status"] == "complete");
    REQUIRE(doc["certificates"].size() == 1);
    const auto& cert = doc["certificates"][0];
    CHECK(cert["parts"]["A"] == nlohmann::json({1, 4}));
    CHECK(cert["parts"]["B"] == nlohmann::json({2, 3}));
    CHECK(cert["property_valid"] == true);
    CHECK(cert["oracle_valid"] == true);
    CHECK(cert["kind"] == "bicolor");
    CHECK(cert["schema_version"] == "1");
    CHECK(cert["p"] == 5);
}

TEST_CASE("search thresholds below two are usage errors") {
    CHECK(run_cli({"search", "1", "3"}).exit_code == 2);
    CHECK(run_cli({"search", "3"}).exit_code == 2);
    CHECK(run_cli({"bogus"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
}

TEST_CASE("search JSON output is byte-stable apart from timing") {
    CliResult a = run_cli({"search", "3", "4", "--all-certificates", "--json"});
    CliResult b = run_cli({"search", "3", "4", "--all-certificates", "--json"});
    nlohmann::json da = parse_out(a);
    nlohmann::json db = parse_out(b);
    da.erase("elapsed_seconds");
    db.erase("elapsed_seconds");
    CHECK(da.dump(2) == db.dump(2));
}

TEST_CASE("verify command on the worked examples") {
    CliResult bad = run_cli({"verify", "--k", "3", "--l", "3", "--p", "5", "--a", "1,2",
                             "--b", "3,4"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("witness        : vertices {1,2,3}") != std::string::npos);

    CliResult good = run_cli({"verify", "--k", "3", "--l", "3", "--p", "5", "--a", "1,4",
                              "--b", "2,3", "--json"});
    CHECK(good.exit_code == 0);
    nlohmann::json doc = parse_out(good);
    CHECK(doc["property_valid"] == true);
    CHECK(doc["oracle_valid"] == true);
    CHECK(doc.contains("witness") == false);
}

TEST_CASE("verify rejects malformed partitions with a usage error") {
    CHECK(run_cli({"verify", "--k", "3", "--l", "3", "--p", "5", "--a", "1", "--b", "3"})
              .exit_code == 2);
    CHECK(run_cli({"verify", "--k", "3", "--l", "3", "--p", "5", "--a", "1,2", "--b", "2,3",
                   "--json"})
              .exit_code == 2);
    CHECK(run_cli({"verify"}).exit_code == 2);
    CHECK(run_cli({"verify", "--cert", "/nonexistent/cert.json"}).exit_code == 2);
}

TEST_CASE("certificates emitted by search re-verify from a file") {
    CliResult searched = run_cli({"search", "3", "4", "--json"});
    REQUIRE(searched.exit_code == 0);
    nlohmann::json doc = parse_out(searched);
    REQUIRE(doc["certificates"].size() >= 1);

    std::string path = "cli_roundtrip_cert.json";
    {
        std::ofstream f(path);
        f << doc["certificates"][0].dump(2);
    }
    CliResult verified = run_cli({"verify", "--cert", path.c_str()});
    std::remove(path.c_str());
    CHECK(verified.exit_code == 0);
    CHECK(verified.out.find("verdict        : VALID") != std::string::npos);
}

TEST_CASE("graph command") {
    CliResult ivab = run_cli({"graph", "--p", "5", "--a", "1,4", "--ivab"});
    CHECK(ivab.exit_code == 0);
    CHECK(ivab.out == "2 3* 4* 5\n3 4* 5*\n4 5*\n5\n");

    CliResult checks = run_cli({"graph", "--p", "5", "--a", "1,4", "--check-clique", "3",
                                "--check-indep", "3", "--json"});
    CHECK(checks.exit_code == 0);
    nlohmann::json doc = parse_out(checks);
    CHECK(doc["edge_count"] == 5);
    CHECK(doc["clique"]["found"] == false);
    CHECK(doc["independent_set"]["found"] == false);
    CHECK(doc["classification"]["all_adjacent"] == nlohmann::json({1, 4}));

    CHECK(run_cli({"graph", "--p", "5", "--a", "5"}).exit_code == 2);
}

TEST_CASE("turan command") {
    CliResult j = run_cli({"turan", "--p", "7", "--n", "4", "--json"});
    CHECK(j.exit_code == 0);
    nlohmann::json doc = parse_out(j);
    CHECK(doc["r"] == 2);
    CHECK(doc["removed_edges"] == 5);
    CHECK(doc["formula_edges"] == 16);
    CHECK(doc["construction_edges"] == 16);
    CHECK(doc["kn_free"] == true);

    CliResult ivab = run_cli({"turan", "--p", "7", "--n", "4", "--ivab"});
    CHECK(ivab.out == "2 3 4* 5 6 7*\n3 4 5* 6 7\n4 5 6* 7\n5 6 7*\n6 7\n7\n");

    CHECK(run_cli({"turan", "--p", "7", "--n", "1"}).exit_code == 2);
}

TEST_CASE("exhaustive command exit codes follow the arrow") {
    CliResult holds = run_cli({"exhaustive", "--k", "3", "--l", "3", "--n", "6", "--json"});
    CHECK(holds.exit_code == 0);
    nlohmann::json doc = parse_out(holds);
    CHECK(doc["arrow_holds"] == true);
    CHECK(doc["graph_count"] == 32768);

    CliResult fails = run_cli({"exhaustive", "--k", "3", "--l", "3", "--n", "5", "--json"});
    CHECK(fails.exit_code == 1);
    nlohmann::json fdoc = parse_out(fails);
    CHECK(fdoc["counterexample_count"] == 12);
    CHECK(fdoc["sample_counterexamples"].size() == 12);

    CHECK(run_cli({"exhaustive", "--k", "3", "--l", "3", "--n", "8"}).exit_code == 2);
}

TEST_CASE("classify command") {
    CliResult r = run_cli({"classify", "--p", "4", "--edges", "1-2,1-3,1-4", "--json"});
    CHECK(r.exit_code == 0);
    nlohmann::json doc = parse_out(r);
    CHECK(doc["all_adjacent"] == nlohmann::json({3}));
    CHECK(doc["all_nonadjacent"] == nlohmann::json::array());
    CHECK(doc["mixed"] == nlohmann::json({1, 2}));

    CHECK(run_cli({"classify", "--p", "4", "--edges", "1-2,2-1"}).exit_code == 2);
    CHECK(run_cli({"classify", "--p", "4", "--edges", "1-5"}).exit_code == 2);
    CHECK(run_cli({"classify", "--p", "1"}).exit_code == 2);
}

TEST_CASE("multicolor command") {
    CliResult r222 = run_cli({"multicolor", "2", "2", "2", "--json"});
    CHECK(r222.exit_code == 0);
    CHECK(parse_out(r222)["neo_ramsey"] == 2);

    CliResult r33 = run_cli({"multicolor", "3", "3", "--json"});
    nlohmann::json doc = parse_out(r33);
    CHECK(doc["neo_ramsey"] == 6);
    CHECK(doc["certificates"][0]["parts"]["A"] == nlohmann::json({1, 4}));

    CHECK(run_cli({"multicolor", "1", "2"}).exit_code == 2);
}

TEST_CASE("a capped search exits with the dedicated code") {
    CliResult r = run_cli({"search", "3", "4", "--max-limit", "5", "--json"});
    CHECK(r.exit_code == 3);
    nlohmann::json doc = parse_out(r);
    CHECK(doc["status"] == "cap_exceeded");
    CHECK(doc["cap"] == 5);
    CHECK(doc.contains("neo_ramsey") == false);
}
