#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "smp/hardness.hpp"
#include "smp/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SMP_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 512> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe))
        output += buffer.data();
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/smp_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* universal_text =
    "n=3\nm 1: 1 2 3\nm 2: 2 1 3\nm 3: 1 3 2\nw 1: 2 1 3\nw 2: 1 2 3\nw 3: 1 2 3\n";
const char* signature_text =
    "n=3\nm 1: 2 1 3\nm 2: 3 2 1\nm 3: 2 1 3\nw 1: 1 2 3\nw 2: 3 1 2\nw 3: 2 1 3\n";

}  // namespace

TEST_CASE("solve prints the matching and a stability verdict") {
    const auto path = write_temp("ex1", fixtures::example_one_text());
    const auto gs = run_cli("solve --proc gs-male --input " + path);
    CHECK(gs.exit_code == 0);
    CHECK(gs.output == "(m1,w1) (m2,w2) (m3,w3)\nstable: yes\n");

    const auto regret = run_cli("solve --proc lexmin:stv --input " + path);
    CHECK(regret.exit_code == 0);
    CHECK(regret.output.find("(m1,w1) (m2,w3) (m3,w2)") == 0);
}

TEST_CASE("solve reports parse failures with a line number and exit code 2") {
    const auto path = write_temp("bad", "n=2\nm 1: 1 1\nm 2: 2 1\nw 1: 1 2\nw 2: 2 1\n");
    const auto result = run_cli("solve --proc gs-male --input " + path);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("solve").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("signature subcommand reproduces the swap decision") {
    const auto path = write_temp("sig", signature_text);
    const auto result = run_cli("signature --input " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output == "men: 123123312  women: 123213312  decision: swap\n");
}

TEST_CASE("universal manipulation report ends at the female-optimal partner") {
    const auto path = write_temp("uni", universal_text);
    const auto result = run_cli("manipulate --mode universal --agent w1 --input " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("witness: m=m1 n=m2 v=w2") != std::string::npos);
    CHECK(result.output.find("manipulated partner: m2") != std::string::npos);
    CHECK(result.output.find("verdict: strictly-better") != std::string::npos);

    const auto none = run_cli("manipulate --mode universal --agent w3 --input " + path);
    CHECK(none.exit_code == 0);
    CHECK(none.output.find("not universally manipulable") != std::string::npos);
}

TEST_CASE("reduce emits a profile that decodes back to the graph") {
    const auto path = write_temp("graph", "n=3\ne 1 2\ne 2 3\n");
    const auto result = run_cli("reduce --graph " + path);
    CHECK(result.exit_code == 0);
    const smp::Profile hp = smp::parse_profile(result.output);
    CHECK(hp.size() == 6);
    const smp::DiGraph g = smp::decode_graph(hp);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.edges().size() == 2);
}

TEST_CASE("enumerate respects the brute-force bound") {
    const auto path = write_temp("ex1b", fixtures::example_one_text());
    const auto ok = run_cli("enumerate --input " + path);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("count: 2") != std::string::npos);

    const auto gen = run_cli("gen --what profile --n 9 --seed 3");
    const auto big = write_temp("big", gen.output);
    const auto refused = run_cli("enumerate --input " + big);
    CHECK(refused.exit_code == 3);
}

TEST_CASE("gen is deterministic and labels its generator") {
    const auto a = run_cli("gen --what profile --n 5 --seed 42");
    const auto b = run_cli("gen --what profile --n 5 --seed 42");
    const auto c = run_cli("gen --what profile --n 5 --seed 43");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output != c.output);
    CHECK(a.output.find("# seed=42 algorithm=mt19937/mask-rejection") == 0);
    CHECK(smp::parse_profile(a.output).size() == 5);

    const auto graph = run_cli("gen --what graph --n 5 --seed 7 --edge-percent 40");
    CHECK(graph.exit_code == 0);
    CHECK(smp::parse_digraph(graph.output).vertex_count() == 5);
}

TEST_CASE("json output round trips") {
    const auto path = write_temp("ex1c", fixtures::example_one_text());
    const auto solved = run_cli("solve --proc gs-male --input " + path + " --format json");
    CHECK(solved.exit_code == 0);
    const auto doc = nlohmann::json::parse(solved.output);
    CHECK(doc["stable"] == true);
    CHECK(smp::matching_from_json(doc["matching"].dump()) == fixtures::matching({0, 1, 2}));

    const auto gen = run_cli("gen --what profile --n 4 --seed 9 --format json");
    CHECK(gen.exit_code == 0);
    const auto gen_doc = nlohmann::json::parse(gen.output);
    const smp::Profile from_json = smp::parse_profile(gen_doc["profile"].dump());
    const auto gen_text = run_cli("gen --what profile --n 4 --seed 9");
    CHECK(from_json == smp::parse_profile(gen_text.output));
}

TEST_CASE("stv subcommand prints round traces") {
    const auto path = write_temp("ex1d", fixtures::example_one_text());
    const auto result = run_cli("stv --input " + path + " --target men");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("round 1: counts m1=1 m2=1 m3=1; eliminated=m3") != std::string::npos);
    CHECK(result.output.find("order: m1 m2 m3") != std::string::npos);

    const auto women = run_cli("stv --input " + path + " --target women");
    CHECK(women.output.find("order: w2 w1 w3") != std::string::npos);
}

TEST_CASE("gn subcommand emits the oriented profile") {
    const auto path = write_temp("sig2", signature_text);
    const auto result = run_cli("gn --input " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("decision: swap") != std::string::npos);
    const auto body = result.output.substr(result.output.find("n="));
    const smp::Profile oriented = smp::parse_profile(body);
    CHECK(oriented == smp::swap_genders(smp::parse_profile(signature_text)));
}
