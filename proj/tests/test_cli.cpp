#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the installed command-line surface, driving the real
// binary through std::system.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "blockdiag/matrix.hpp"
#include "blockdiag/report_io.hpp"
#include "blockdiag/random_matrix.hpp"
#include "blockdiag/sweep.hpp"
#include "test_support.hpp"

#ifndef BLOCKDIAG_CLI_PATH
#error "BLOCKDIAG_CLI_PATH must point at the CLI binary"
#endif

using namespace blockdiag;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::filesystem::path& dir) {
    const auto log = dir / "cli_output.txt";
    std::string cmd = std::string(BLOCKDIAG_CLI_PATH) + " " + args + " > " +
                      log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream buf;
    buf << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("blockdiag_cli_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("sweep writes csv and json, deterministically") {
    auto dir = fresh_dir("sweep");
    const std::string base = "sweep --n 8 --blocks \"0,1,2;3,4,5;6,7\" --seed 42";
    RunResult r1 = run_cli(base + " --out " + (dir / "a").string(), dir);
    CHECK(r1.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "a" / "sweep.csv"));
    CHECK(std::filesystem::exists(dir / "a" / "sweep.json"));

    RunResult r2 = run_cli(base + " --out " + (dir / "b").string(), dir);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(dir / "a" / "sweep.csv") == slurp(dir / "b" / "sweep.csv"));
    CHECK(slurp(dir / "a" / "sweep.json") == slurp(dir / "b" / "sweep.json"));

    const std::string csv = slurp(dir / "a" / "sweep.csv");
    CHECK(csv.rfind("lambda,residual,value\n", 0) == 0);
    CHECK(csv.find("prescription_split") != std::string::npos);

    // json format embeds the rows
    RunResult r3 = run_cli(base + " --format json --out " + (dir / "c").string(), dir);
    CHECK(r3.exit_code == 0);
    CHECK(!std::filesystem::exists(dir / "c" / "sweep.csv"));
    CHECK(slurp(dir / "c" / "sweep.json").find("\"rows\"") != std::string::npos);
}

TEST_CASE("transform on an input matrix") {
    auto dir = fresh_dir("transform");
    BlockPartition P = BlockPartition::parse("0,1;2,3");
    ComplexMatrix H0 = default_h0(P);
    ComplexMatrix H = H0 + 0.05 * generate_random_hermitian(4, 7, 1.0);
    write_matrix_json(dir / "H.json", H);

    RunResult r = run_cli("transform --input " + (dir / "H.json").string() +
                              " --blocks \"0,1;2,3\" --out " + dir.string(),
                          dir);
    CHECK(r.exit_code == 0);
    ComplexMatrix T = read_matrix_json(dir / "T.json");
    ComplexMatrix HB = read_matrix_json(dir / "H_block.json");
    CHECK(is_unitary(T, 1e-11));
    CHECK((HB - ComplexMatrix(T.adjoint() * H * T)).norm() < 1e-11 * H.norm());
    CHECK(off_block_norm(HB, P) < 1e-11 * H.norm());

    // missing input: input error
    RunResult miss = run_cli("transform --blocks \"0,1;2,3\"", dir);
    CHECK(miss.exit_code == 2);
}

TEST_CASE("series subcommand") {
    auto dir = fresh_dir("series");
    RunResult r = run_cli("series --n 8 --blocks \"0,1,2;3,4,5;6,7\" --seed 1 --out " +
                              dir.string(),
                          dir);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(dir / "series.json");
    for (const char* key :
         {"\"z\"", "\"t_least_action\"", "\"s_least_action\"", "\"s_block_offdiag\"",
          "\"h_block\""})
        CHECK(body.find(key) != std::string::npos);
}

TEST_CASE("error paths map to the documented exit codes") {
    auto dir = fresh_dir("errors");

    // malformed partition string: parse error
    RunResult bad_blocks = run_cli("sweep --n 4 --blocks \"0,x;2,3\"", dir);
    CHECK(bad_blocks.exit_code == 2);

    // malformed json input
    std::ofstream bad(dir / "bad.json");
    bad << "{\"n\": 2, \"re\": [[1,2]"; // truncated
    bad.close();
    RunResult bad_json = run_cli("transform --input " + (dir / "bad.json").string() +
                                     " --blocks \"0;1\"",
                                 dir);
    CHECK(bad_json.exit_code == 2);
    CHECK(bad_json.output.find("ParseError") != std::string::npos);

    // cross-block degenerate H0: numerical error naming the gap
    BlockPartition P = BlockPartition::parse("0,1;2,3");
    ComplexMatrix H0 = ComplexMatrix::Zero(4, 4);
    H0(0, 0) = 0.0;
    H0(1, 1) = 1.0;
    H0(2, 2) = 1.0;
    H0(3, 3) = 2.0;
    ComplexMatrix H1 = generate_random_hermitian(4, 2, 1.0);
    std::ostringstream inst;
    {
        auto tmp0 = dir / "h0.json";
        auto tmp1 = dir / "h1.json";
        write_matrix_json(tmp0, H0);
        write_matrix_json(tmp1, H1);
        inst << "{\"n\": 4, \"H0\": " << slurp(tmp0) << ", \"H1\": " << slurp(tmp1)
             << "}";
    }
    std::ofstream instf(dir / "instance.json");
    instf << inst.str();
    instf.close();
    RunResult degen = run_cli("sweep --blocks \"0,1;2,3\" --input " +
                                  (dir / "instance.json").string(),
                              dir);
    CHECK(degen.exit_code == 3);
    CHECK(degen.output.find("DegeneracyError") != std::string::npos);
    CHECK(degen.output.find("gap") != std::string::npos);
}
