#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "rmas/cli.hpp"
#include "rmas/generators.hpp"
#include "support/oracles.hpp"

using namespace rmas;
using json = nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string doc(const char* name) { return serialize_instance(fixture(name)); }

}  // namespace

TEST_CASE("solve prints a JSON report") {
    const Run r = run({"solve", "--alg", "combined", "--json"}, doc("two-cycle"));
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["algorithm"] == "combined");
    CHECK(j["value"] == 1.0);
    CHECK(j["W"] == 2.0);
    CHECK(j["labeling"].size() == 2);
    CHECK(j["guarantee"].get<double>() == doctest::Approx(0.5));
    CHECK_FALSE(j.contains("timings_ms"));
}

TEST_CASE("solve with the exact algorithm and optional fields") {
    const Run r = run({"solve", "--alg", "exact", "--json", "--opt", "--timings"}, doc("triangle"));
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["value"] == 2.0);
    CHECK(j["opt"] == 2.0);
    CHECK(j["lp"].is_null());
    CHECK(j.contains("timings_ms"));
}

TEST_CASE("plain text solve output") {
    const Run r = run({"solve", "--alg", "simple"}, doc("single-edge"));
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find("value 3") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string input = serialize_instance(oracle::load_golden("khandekar_gap_n5.rmas"));
    for (const char* alg : {"combined", "round-rand", "simple-rand"}) {
        const Run a = run({"solve", "--alg", alg, "--json", "--seed", "3"}, input);
        const Run b = run({"solve", "--alg", alg, "--json", "--seed", "3"}, input);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("eval scores a labeling") {
    Run r = run({"eval", "--labels", "1 2"}, doc("single-edge"));
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find('3') != std::string::npos);

    r = run({"eval", "--labels", "1 2", "--json"}, doc("two-cycle"));
    REQUIRE(r.code == cli::kExitOk);
    CHECK(json::parse(r.out)["value"] == 1.0);

    r = run({"eval", "--labels", "1 7"}, doc("two-cycle"));
    CHECK(r.code == cli::kExitDomainError);
}

TEST_CASE("gen writes a parseable instance") {
    const Run r = run({"gen", "--kind", "random", "-n", "3", "-m", "4", "--seed", "7"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out == oracle::read_file(oracle::golden("random_n3_m4_seed7.rmas")));

    const Run f = run({"gen", "--kind", "fixture", "--name", "triangle"});
    CHECK(parse_instance(f.out) == fixture("triangle"));
}

TEST_CASE("lp dumps a feasible solution") {
    const Run r = run({"lp", "--dump-solution"}, doc("two-cycle"));
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["lp"].get<double>() == doctest::Approx(1.0));
    CHECK(j["W"] == 2.0);
    CHECK(j["residual"].get<double>() <= 1e-7);
    CHECK(j["x"].is_array());
    CHECK(j["y"].is_array());
}

TEST_CASE("verify passes on golden instances") {
    for (const char* name : {"mas_gap_n5.rmas", "khandekar_gap_n5.rmas", "triangle.rmas"}) {
        const Run r = run({"verify", "--json"}, oracle::read_file(oracle::golden(name)));
        CHECK(r.code == cli::kExitOk);
        CHECK(json::parse(r.out)["pass"] == true);
    }
}

TEST_CASE("bench commands") {
    const Run ratio = run({"bench", "ratio", "--count", "5", "--seed", "1", "--out", "-"});
    CHECK(ratio.code == cli::kExitOk);
    CHECK(ratio.out.rfind("id,n,m,W,opt,lp,simple,round,combined,ratio\n", 0) == 0);

    const Run dicut = run({"bench", "dicut", "--count", "3", "--dicut-min-nodes", "4", "--dicut-max-nodes", "5"});
    CHECK(dicut.code == cli::kExitOk);
    CHECK(dicut.out.rfind("id,n,m,maxdicut,ratio\n", 0) == 0);

    const Run mc = run({"bench", "mc", "--arm", "simple", "--count", "500", "--json"}, doc("triangle"));
    CHECK(mc.code == cli::kExitOk);
    CHECK(json::parse(mc.out)["exact"].get<double>() == doctest::Approx(0.75));
}

TEST_CASE("errors and exit codes") {
    const std::string big = serialize_instance(Instance(std::vector<std::vector<Label>>(6, {1, 2, 3, 4, 5}), {}));
    Run r = run({"solve", "--alg", "exact", "--cap", "10"}, big);
    CHECK(r.code == cli::kExitDomainError);
    CHECK_FALSE(r.err.empty());

    r = run({"solve", "--alg", "exact", "--cap", "10", "--json"}, big);
    CHECK(r.code == cli::kExitDomainError);
    const json e = json::parse(r.err.empty() ? r.out : r.err);
    CHECK(e.contains("error"));
    CHECK(e.contains("detail"));

    r = run({"solve"}, "nodes 2\nlabels 0 1\nedge 0 1 1\n");
    CHECK(r.code == cli::kExitDomainError);

    CHECK(run({"solve", "--frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"solve", "--alg", "greedy"}, doc("two-cycle")).code != cli::kExitOk);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("output file option") {
    const auto path = std::filesystem::temp_directory_path() / "rmas_cli_test_out.rmas";
    const Run r = run({"gen", "--kind", "fixture", "--name", "blocked", "--out", path.string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    CHECK(parse_instance(oracle::read_file(path.string())) == fixture("blocked"));
    std::filesystem::remove(path);
}
