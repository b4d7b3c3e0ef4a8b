#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "chromroot/catalog.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(CHROMROOT_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("chromatic subcommand") {
    auto triangle = write_temp("chromroot_test_triangle.txt", "0 1\n1 2\n0 2\n");
    auto r = run_cli("chromatic " + triangle.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 2 -3 1\n");

    auto pretty = run_cli("chromatic --format pretty " + triangle.string());
    CHECK(pretty.output == "q^3 - 3*q^2 + 2*q\n");

    auto bad = write_temp("chromroot_test_bad.txt", "0 x\n");
    CHECK(run_cli("chromatic " + bad.string()).exit_code == 2);
    CHECK(run_cli("chromatic /nonexistent/file").exit_code == 2);
    CHECK(run_cli("chromatic").exit_code == 2);
}

TEST_CASE("known factors report") {
    auto g1 = write_temp("chromroot_test_g1.txt", std::string(chromroot::b10_witness_g1_edge_list()));
    auto r = run_cli("chromatic --known-factors " + g1.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("q^2 - 5*q + 5") != std::string::npos);
    CHECK(r.output.find("cofactor: q^3 - 4*q^2 + 8*q - 7") != std::string::npos);
}

TEST_CASE("beraha subcommand") {
    auto ten = run_cli("beraha --n 10");
    CHECK(ten.exit_code == 0);
    CHECK(ten.output == "10; 5 -5 1; counts(0,0,0); ChromaticRootB10\n");

    auto five = run_cli("beraha --n 5");
    CHECK(five.output == "5; 1 -3 1; counts(0,1,0); ExcludedByConjugate\n");

    auto four = run_cli("beraha --n 4");
    CHECK(four.output.find("-2 1") != std::string::npos);
    CHECK(four.output.find("IntegerBeraha(2)") != std::string::npos);

    auto scan = run_cli("beraha --scan 12");
    CHECK(scan.exit_code == 0);
    CHECK(scan.output.find("10; 5 -5 1") != std::string::npos);

    CHECK(run_cli("beraha --n 0").exit_code == 2);
    CHECK(run_cli("beraha").exit_code == 2);
}

TEST_CASE("compose subcommand") {
    auto r = run_cli("compose \"edge*edge\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 1 -2 1\n");

    auto split = run_cli("compose --partitioned \"edge*edge\"");
    CHECK(split.output == "S: 0 -1 1\nD: 0 2 -3 1\nP: 0 1 -2 1\n");

    CHECK(run_cli("compose \"edge *\"").exit_code == 2);
    CHECK(run_cli("compose \"K(1)\"").exit_code == 2);
}

TEST_CASE("golden subcommand") {
    auto k4 = write_temp("chromroot_test_k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto r = run_cli("golden " + k4.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("identity holds") != std::string::npos);
    CHECK(r.output.find("3 + 4*phi") != std::string::npos);

    auto c4 = write_temp("chromroot_test_c4.txt", "0 1\n1 2\n2 3\n0 3\n");
    auto miss = run_cli("golden " + c4.string());
    CHECK(miss.exit_code == 1);
    CHECK(miss.output.find("not a triangulation candidate") != std::string::npos);
}

TEST_CASE("search subcommand") {
    auto empty = run_cli("search --hosts 4..8 --max-edges 1 --target \"5 -5 1\"");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.empty());

    auto r = run_cli("search --hosts 6 --max-edges 8 --target \"5 -5 1\" --workers 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("host=Kme(6); gadget=(edge*edge|edge*edge)*(edge*edge|edge*edge); "
                        "vertices=11;") != std::string::npos);

    auto rich = run_cli("search --hosts 4 --max-edges 2 --leaves \"edge,Kme(3)\" --target \"5 -5 1\"");
    CHECK(rich.exit_code == 0);

    CHECK(run_cli("search --hosts 6 --max-edges 2 --target \"1 2\"").exit_code == 2);
    CHECK(run_cli("search --hosts 6 --max-edges 2 --leaves \"edge*edge\"").exit_code == 2);
    CHECK(run_cli("search --max-edges 2").exit_code == 2);
}

TEST_CASE("verify subcommand") {
    auto first = run_cli("verify");
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("[1/5]") != std::string::npos);
    CHECK(first.output.find("[5/5]") != std::string::npos);
    CHECK(first.output.find("PASS") != std::string::npos);
    CHECK(first.output.find("FAIL") == std::string::npos);

    auto second = run_cli("verify");
    CHECK(second.output == first.output);  // byte-identical reruns

    auto faulty = run_cli("verify --inject-fault");
    CHECK(faulty.exit_code == 1);
    CHECK(faulty.output.find("G1") != std::string::npos);
    CHECK(faulty.output.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
}
