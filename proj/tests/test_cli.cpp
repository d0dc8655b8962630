#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qowp/verify.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QOWP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/qowp_test_") + name;
}

}  // namespace

TEST_CASE("verify-all passes, reports known typos, and is byte-deterministic") {
    RunResult first = run("verify-all");
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("known_typo") != std::string::npos);
    CHECK(first.out.find(" 0 fail") != std::string::npos);

    RunResult second = run("verify-all");
    CHECK(first.out == second.out);

    SECTION("global flags work on either side of the subcommand") {
        RunResult prefix = run("--json verify-all");
        RunResult postfix = run("verify-all --json");
        CHECK(prefix.exit_code == 0);
        CHECK(prefix.out == postfix.out);
    }

    SECTION("json form agrees") {
        RunResult js = run("--json verify-all");
        CHECK(js.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(js.out);
        CHECK(j["summary"]["fail"].get<int>() == 0);
        CHECK(j["summary"]["known_typo"].get<int>() >= 1);
        CHECK(j["entries"].size() >= 25);
        for (const auto& e : j["entries"]) {
            CHECK(e.contains("claim_id"));
            CHECK(e.contains("location"));
        }
    }
}

TEST_CASE("exit status contract") {
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("factor").exit_code == 2);           // missing required argument
    CHECK(run("chsh --box nonsense").exit_code == 2);
    CHECK(run("factor \"y+1\"").exit_code == 2);   // unparsable polynomial
    CHECK(run("--help").exit_code == 0);

    SECTION("ledger exit codes at the library level") {
        qowp::verify::VerificationLedger ok;
        ok.entries.push_back({"a", "loc", qowp::verify::Status::pass, ""});
        ok.entries.push_back({"b", "loc", qowp::verify::Status::known_typo, ""});
        CHECK(ok.exit_status() == 0);
        ok.entries.push_back({"c", "loc", qowp::verify::Status::fail, ""});
        CHECK(ok.exit_status() == 1);
    }
}

TEST_CASE("factor subcommand") {
    CHECK(run("factor x^2+x").out == "x * (x+1)\n");
    CHECK(run("factor x^2+1").out == "(x+1) * (x+1)\n");
    CHECK(run("factor x^3+x+1").out == "(x^3+x+1)\n");
    RunResult js = run("--json factor x^2+x");
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["factors"] == nlohmann::json({"x", "x+1"}));
    CHECK(j["irreducible"] == false);
}

TEST_CASE("chsh subcommand") {
    RunResult r = run("chsh --state phi+ --angles 0,90,45,-45");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("S = 2.828427") != std::string::npos);

    RunResult box = run("--json chsh --box pr");
    nlohmann::json j = nlohmann::json::parse(box.out);
    CHECK(j["S"].get<double>() == 4.0);
    CHECK(j["bounds"]["within_classical"] == false);

    RunResult lhv = run("--json chsh --lhv");
    CHECK(nlohmann::json::parse(lhv.out)["lhv_max"].get<double>() == 2.0);
}

TEST_CASE("sat subcommand round trips DIMACS through files") {
    const std::string path = temp_path("contradiction.cnf");
    RunResult expanded = run("sat --expand 3 --out " + path);
    CHECK(expanded.exit_code == 0);

    RunResult solved = run("sat --in " + path + " --solve");
    CHECK(solved.exit_code == 0);
    CHECK(solved.out == "UNSATISFIABLE\n");

    // Drop the first clause: the all-positive one. All-false becomes the model.
    std::ifstream in(path);
    std::string header, rest, line;
    std::getline(in, header);
    std::getline(in, line);  // clause to drop
    while (std::getline(in, line)) rest += line + "\n";
    in.close();
    const std::string path2 = temp_path("satisfiable.cnf");
    std::ofstream out(path2);
    out << "p cnf 3 7\n" << rest;
    out.close();
    RunResult sat2 = run("--json sat --in " + path2 + " --solve");
    nlohmann::json j = nlohmann::json::parse(sat2.out);
    CHECK(j["satisfiable"] == true);
    CHECK(j["witness"] == "000");

    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("poset subcommand emits the golden DOT text") {
    RunResult dot = run("poset --dot");
    std::ifstream golden(std::string(QOWP_TEST_DATA_DIR) + "/hasse_golden.dot", std::ios::binary);
    std::stringstream buf;
    buf << golden.rdbuf();
    CHECK(dot.out == buf.str());

    RunResult csv = run("poset --csv");
    CHECK(csv.out.find("111,x^2+x+1,000,0") != std::string::npos);
}

TEST_CASE("tables subcommand flags the printed typos") {
    RunResult r = run("tables --op mul");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[known typo]") != std::string::npos);
    CHECK(r.out.find("[UNEXPLAINED]") == std::string::npos);

    RunResult add = run("tables --op add");
    CHECK(add.out.find("matches on all 64 cells") != std::string::npos);

    RunResult csv = run("tables --op mul --csv");
    CHECK(csv.out.rfind("mul,000,", 0) == 0);
}

TEST_CASE("bell and cauchy subcommands") {
    RunResult bell = run("bell -x 0 --mode x2");
    CHECK(bell.out.find("|00") != std::string::npos);
    CHECK(bell.out.find("P(00) = 0.5") != std::string::npos);

    RunResult bell_json = run("--json bell -x 1 --mode x2p1");
    nlohmann::json j = nlohmann::json::parse(bell_json.out);
    CHECK(j["probabilities"][0].get<double>() == 0.5);
    CHECK(j["probabilities"][3].get<double>() == 0.5);

    RunResult cauchy = run("--json cauchy -T 1000 --steps 100000");
    nlohmann::json c = nlohmann::json::parse(cauchy.out);
    CHECK(c["normalized"].get<double>() == Catch::Approx(1.0).margin(1e-3));
}

TEST_CASE("config file overrides enumeration caps") {
    const std::string path = temp_path("caps.conf");
    {
        std::ofstream out(path);
        out << "# tiny caps for testing\nsat_max_vars=2\n";
    }
    RunResult r = run("--config " + path + " sat --expand 3 --solve");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("cap") != std::string::npos);

    {
        std::ofstream out(path);
        out << "bogus_key=1\n";
    }
    CHECK(run("--config " + path + " verify-all").exit_code == 2);
    std::remove(path.c_str());
}
