#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CUBECYCLE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (char c : s) lines += c == '\n';
    return lines;
}

}  // namespace

TEST_CASE("gen emits deterministic edge lists") {
    RunResult q2 = run_cli("gen --family bsq --n 2 --format edgelist");
    CHECK(q2.exit_code == 0);
    CHECK(q2.out == "00 01\n00 10\n01 11\n10 11\n");

    RunResult s6 = run_cli("gen --family ssq --n 6 --format edgelist");
    CHECK(s6.exit_code == 0);
    CHECK(count_lines(s6.out) == 96);

    RunResult again = run_cli("gen --family ssq --n 6 --format edgelist");
    CHECK(again.out == s6.out);

    RunResult dot = run_cli("gen --family bsq --n 2 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph bsq2 {") == 0);
}

TEST_CASE("gen rejects bad dimensions with a usage error") {
    CHECK(run_cli("gen --family ssq --n 7").exit_code == 2);
    CHECK(run_cli("gen --family ssq --n 4").exit_code == 2);
    CHECK(run_cli("gen --family nope --n 6").exit_code == 2);
}

TEST_CASE("gen reports the materialization cap as a resource error") {
    CHECK(run_cli("gen --family bsq --n 26 --format edgelist").exit_code == 3);
}

TEST_CASE("gen writes the same bytes to a file as to stdout") {
    std::string path = "/tmp/cubecycle_gen_out.txt";
    RunResult to_file = run_cli("gen --family ssq --n 6 --format edgelist --out " + path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f(path);
    std::stringstream have;
    have << f.rdbuf();
    RunResult direct = run_cli("gen --family ssq --n 6 --format edgelist");
    CHECK(have.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("cycle prints labels and verifies") {
    RunResult c3 = run_cli("cycle --family ssq --n 6 --vertex 000000 --length 3 --verify");
    CHECK(c3.exit_code == 0);
    CHECK(c3.out == "000000\n001000\n000100\n");

    RunResult odd = run_cli("cycle --family bsq --n 6 --vertex 000000 --length 5");
    CHECK(odd.exit_code == 4);

    RunResult big = run_cli("cycle --family bsq --n 10 --vertex 0000000000 --length 1024 --verify");
    CHECK(big.exit_code == 0);
    CHECK(count_lines(big.out) == 1024);

    RunResult bad_label = run_cli("cycle --family ssq --n 6 --vertex 010000 --length 3");
    CHECK(bad_label.exit_code == 4);

    RunResult repeat = run_cli("cycle --family ssq --n 10 --vertex 0011001100 --length 200");
    RunResult repeat2 = run_cli("cycle --family ssq --n 10 --vertex 0011001100 --length 200");
    CHECK(repeat.exit_code == 0);
    CHECK(repeat.out == repeat2.out);
}

TEST_CASE("edgecycle and hamcycle verify their outputs") {
    RunResult ring = run_cli("edgecycle --family bsq --n 6 --u 000000 --v 010000 --verify");
    CHECK(ring.exit_code == 0);
    CHECK(count_lines(ring.out) == 32);

    RunResult ham = run_cli("hamcycle --family ssq --n 6 --u 000000 --v 000001 --verify --json");
    CHECK(ham.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(ham.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 32);
    CHECK(j[0] == "000000");

    CHECK(run_cli("edgecycle --family ssq --n 6 --u 000000 --v 000011").exit_code == 4);
}

TEST_CASE("info reports structure") {
    RunResult info = run_cli("info --family ssq --n 6 --json");
    CHECK(info.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(info.out);
    CHECK(j["vertex_count"] == 32);
    CHECK(j["edge_count"] == 96);
    CHECK(j["regular_degree"] == 6);
    CHECK(j["bipartite"] == false);
    CHECK(j["girth"] == 3);
}

TEST_CASE("translate maps labels through the vertex translation") {
    RunResult t = run_cli("translate --family ssq --n 6 --vertex 001100 --label 001000");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "000100\n");
    RunResult back = run_cli("translate --family ssq --n 6 --vertex 001100 --label 000100 --inverse");
    CHECK(back.out == "001000\n");
}

TEST_CASE("check tables reports the repaired rows") {
    RunResult r = run_cli("check --suite tables --n 6");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"] == 61);
    CHECK(j["repaired"] == nlohmann::json::array({"bsq:48", "bsq:52", "bsq:54"}));
}

TEST_CASE("check lemma4 at n = 6 passes exhaustively") {
    RunResult r = run_cli("check --suite lemma4 --n 6");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["checks"] == 96);
    CHECK(j["pass"] == true);
}

TEST_CASE("check rejects unknown suites with a usage error") {
    CHECK(run_cli("check --suite nonsense --n 6").exit_code == 2);
}

TEST_CASE("regen-assets is byte-stable and fails loudly under an injected fault") {
    std::string dir = "/tmp/cubecycle_cli_assets";
    std::string file = dir + "/cubecycle_assets.json";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    CHECK(run_cli("regen-assets --out " + dir).exit_code == 0);
    std::ifstream f1(file);
    std::stringstream s1;
    s1 << f1.rdbuf();
    CHECK(run_cli("regen-assets --out " + dir).exit_code == 0);
    std::ifstream f2(file);
    std::stringstream s2;
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().size() > 1000);

    CHECK(run_cli("regen-assets --out " + dir + " --inject-fault").exit_code == 1);

    // the regenerated file can drive the process through CUBECYCLE_ASSETS
    std::string env_cmd = "CUBECYCLE_ASSETS=" + file + " " + std::string(CUBECYCLE_CLI_PATH) +
                          " cycle --family bsq --n 6 --vertex 000000 --length 48 --verify >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
    std::remove(file.c_str());
}
