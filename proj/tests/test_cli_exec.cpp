// End-to-end checks of the CLI binary: subcommands, output shape, exit codes
// (0 success, 1 check failure, 2 usage error, 3 blow-up).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LEE_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kFixtureFlag = std::string("--fixture-dir ") + LEE_FIXTURE_DIR;

}  // namespace

TEST_CASE("classify: grid CSV") {
    REQUIRE(run_cli("classify --steps 5 --out cli_classify.csv > /dev/null 2>&1") == 0);
    const std::string csv = slurp("cli_classify.csv");
    CHECK(csv.find("gamma,lambda,f,det_sign,neg_count,case_label") == 0);
    CHECK(csv.find("0,0,1,positive,0,Interior") != std::string::npos);
    std::remove("cli_classify.csv");

    CHECK(run_cli("classify --steps 1 > /dev/null 2>&1") == 2);
}

TEST_CASE("quantize: fixture runs for both cases") {
    REQUIRE(run_cli("quantize --fixture case1 " + kFixtureFlag +
                    " --out cli_q1.json > /dev/null 2>&1") == 0);
    const std::string q1 = slurp("cli_q1.json");
    CHECK(q1.find("\"pipelineBranch\": \"bopp\"") != std::string::npos);
    std::remove("cli_q1.json");

    REQUIRE(run_cli("quantize --fixture case2 " + kFixtureFlag +
                    " --out cli_q2.json > /dev/null 2>&1") == 0);
    const std::string q2 = slurp("cli_q2.json");
    CHECK(q2.find("\"pipelineBranch\": \"relabel\"") != std::string::npos);
    CHECK(q2.find("\"relativeSign\": -1") != std::string::npos);
    std::remove("cli_q2.json");

    // gamma/lambda required without a fixture
    CHECK(run_cli("quantize > /dev/null 2>&1") == 2);
    // unknown flag is a usage error
    CHECK(run_cli("quantize --nonsense 1 > /dev/null 2>&1") == 2);
}

TEST_CASE("spectrum: table and eigenfunction dump") {
    REQUIRE(run_cli("spectrum --fixture case2 " + kFixtureFlag +
                    " --nmax 2 --out cli_spec.json > /dev/null 2>&1") == 0);
    const std::string spec = slurp("cli_spec.json");
    CHECK(spec.find("\"regime\": \"complex\"") != std::string::npos);
    CHECK(spec.find("\"im\": 0.5") != std::string::npos);
    std::remove("cli_spec.json");

    REQUIRE(run_cli("spectrum --fixture case2 " + kFixtureFlag +
                    " --dump-mode Y --dump-n 1 --out cli_eta.json > /dev/null 2>&1") == 0);
    const std::string eta = slurp("cli_eta.json");
    CHECK(eta.find("\"classTag\": \"tempered\"") != std::string::npos);
    std::remove("cli_eta.json");
}

TEST_CASE("simulate: CSV output and blow-up exit code") {
    REQUIRE(run_cli("simulate --system lee --gamma 1 --lambda 1 --T 1 --dt 0.01"
                    " --out cli_sim.csv > /dev/null 2>&1") == 0);
    const std::string sim = slurp("cli_sim.csv");
    CHECK(sim.find("t,x,y,xdot,ydot,p_lambda") == 0);
    std::remove("cli_sim.csv");

    CHECK(run_cli("simulate --system bateman --gamma 5 --y0 1 --x0 0 --T 40 --dt 0.01"
                  " --out cli_blow.csv > /dev/null 2>&1") == 3);
    std::remove("cli_blow.csv");
}

TEST_CASE("verify: passes with shipped fixtures, fails cleanly without") {
    CHECK(run_cli("verify " + kFixtureFlag + " > /dev/null 2>&1") == 0);
    CHECK(run_cli("verify --fixture-dir /no/such/dir > /dev/null 2>&1") == 1);
}
