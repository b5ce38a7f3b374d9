#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "cmt/enumerate.hpp"
#include "cmt/io.hpp"

using namespace cmt;

namespace {

SimplicialComplex make(int n, std::vector<Face> faces) {
    return SimplicialComplex(standard_labels(n), faces);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// runs the CLI binary named by the CMT_CLI environment variable
RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("CMT_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) res.output.append(buffer, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/cmt_test_") + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

bool cli_available() { return std::getenv("CMT_CLI") != nullptr; }

}  // namespace

TEST_CASE("parsing complexes") {
    auto path = parse_complex(R"({"vertices":["x1","x2","x3"],"facets":[["x1","x2"],["x2","x3"]]})");
    CHECK(path == make(3, {face_of({0, 1}), face_of({1, 2})}));

    auto collapsed = parse_complex(R"({"vertices":["x1","x2"],"facets":[["x1","x2"],["x1"]]})");
    CHECK(collapsed.facets() == std::vector<Face>{face_of({0, 1})});

    auto empty_complex = parse_complex(R"({"vertices":[],"facets":[[]]})");
    CHECK(empty_complex.is_empty_complex());

    CHECK_THROWS_AS(parse_complex(R"({"facets":[]})"), EmptyInputError);
    CHECK_THROWS_AS(parse_complex("not json"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices":["x1"]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices":["a"],"facets":[["b"]]})"), BadIndexError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices":["a","a"],"facets":[["a"]]})"), VertexClashError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices":["a","b"],"facets":[["a"]]})"), GhostVertexError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices":["a_b_c"],"facets":[["a_b_c"]]})"), ParseError);
}

TEST_CASE("parsing graphs and ideals") {
    auto g = parse_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","b"],"edges":[["a"]]})"), ParseError);

    auto ideal = parse_ideal(R"({"vertices":["x1","x2"],"generators":[{"x1":2,"x2":1}]})");
    REQUIRE(ideal.generators().size() == 1);
    CHECK(ideal.generators()[0] == Monomial({{0, 2}, {1, 1}}));
    CHECK_THROWS_AS(parse_ideal(R"({"vertices":["x1"],"generators":[{"x1":0}]})"), ParseError);
    CHECK_THROWS_AS(parse_ideal(R"({"vertices":["x1"],"generators":[{"y":1}]})"), BadIndexError);
}

TEST_CASE("kind detection") {
    CHECK(std::holds_alternative<SimplicialComplex>(
        parse_any(R"({"vertices":["a"],"facets":[["a"]]})")));
    CHECK(std::holds_alternative<SimpleGraph>(parse_any(R"({"vertices":["a"],"edges":[]})")));
    CHECK(std::holds_alternative<MonomialIdeal>(
        parse_any(R"({"vertices":["a"],"generators":[]})")));
    CHECK_THROWS_AS(parse_any(R"({"vertices":["a"]})"), ParseError);
    CHECK_THROWS_AS(parse_any(R"({"vertices":["a"],"facets":[["a"]],"edges":[]})"), ParseError);
}

TEST_CASE("serialize-parse identity on canonical output") {
    for (int n = 0; n <= 5; ++n)
        for_each_complex_on(n, [&](const std::vector<Face>& facets) {
            auto dx = make(n, facets);
            REQUIRE(parse_complex(serialize(dx)) == dx);
        });
    // six vertices: one representative per relabeling orbit
    for_each_complex_on(6, [&](const std::vector<Face>& facets) {
        if (!is_canonical_labeling(facets, 6)) return;
        auto dx = make(6, facets);
        REQUIRE(parse_complex(serialize(dx)) == dx);
    });
    for (int n = 0; n <= 4; ++n)
        for_each_graph_on(n, [&](const SimpleGraph& g) {
            REQUIRE(parse_graph(serialize(g)) == g);
        });
    Rng rng(424242);
    for (int draw = 0; draw < 200; ++draw) {
        auto ideal = random_ideal(rng, 4, 3, 5);
        REQUIRE(parse_ideal(serialize(ideal)) == ideal);
    }
    // expanded labels survive the round trip
    auto expanded = expand_complex(make(2, {face_of({0, 1})}), ExpansionVector({2, 1}));
    CHECK(parse_complex(serialize(expanded)) == expanded);
}

TEST_CASE("cli: classification and worked examples" * doctest::skip(!cli_available())) {
    auto path_file = write_temp(
        "path.json", R"({"vertices":["x1","x2","x3"],"facets":[["x1","x2"],["x2","x3"]]})");
    auto cm = run_cli("cm --field q " + path_file);
    CHECK(cm.exit_code == 0);
    CHECK(cm.output.find("pure=true minimal_t=0") != std::string::npos);

    auto expand = run_cli("expand --alpha 2,1,1 " + path_file);
    CHECK(expand.exit_code == 0);
    CHECK(expand.output.find(R"([["x1_1","x1_2","x2_1"],["x2_1","x3_1"]])") != std::string::npos);
    CHECK(expand.output.find("pure=false") != std::string::npos);

    auto ex4_file = write_temp("ex4.json",
                               R"({"vertices":["x1","x2","x3","x4","x5"],)"
                               R"("facets":[["x1","x2","x3"],["x2","x3","x4"],)"
                               R"(["x1","x4","x5"],["x2","x3","x5"]]})");
    auto contract = run_cli("contract " + ex4_file);
    CHECK(contract.exit_code == 0);
    CHECK(contract.output.find("alpha=1,2,1,1") != std::string::npos);
    CHECK(contract.output.find("classes=[x1][x2,x3][x4][x5]") != std::string::npos);

    auto hollow_file = write_temp(
        "hollow.json",
        R"({"vertices":["x1","x2","x3"],"facets":[["x1","x2"],["x2","x3"],["x1","x3"]]})");
    auto homology = run_cli("homology --field q " + hollow_file);
    CHECK(homology.exit_code == 0);
    CHECK(homology.output.find("betti[-1..1]=0,0,1") != std::string::npos);

    auto info = run_cli("info " + path_file);
    CHECK(info.exit_code == 0);
    CHECK(info.output.find("kind=complex") != std::string::npos);
}

TEST_CASE("cli: exit codes" * doctest::skip(!cli_available())) {
    // parse error -> 2
    auto broken = write_temp("broken.json", "{");
    CHECK(run_cli("cm " + broken).exit_code == 2);
    // usage error -> 2
    CHECK(run_cli("expand --alpha 2 /nonexistent.json").exit_code == 2);
    // verification failure -> 1: the two-vertex expansion sweep contains the
    // simplex counterexamples to the predicted level formula
    auto fail_sweep = run_cli("verify --theorem expansion --max-vertices 2 --alpha-max 2");
    CHECK(fail_sweep.exit_code == 1);
    // clean sweep -> 0
    auto ok_sweep = run_cli("verify --theorem contraction --max-vertices 3");
    CHECK(ok_sweep.exit_code == 0);
    // random mode needs a seed
    CHECK(run_cli("verify --theorem expansion --mode random").exit_code == 2);
}

TEST_CASE("cli: sweep reports are deterministic" * doctest::skip(!cli_available())) {
    const std::string cmd = "verify --theorem lemmas --max-vertices 2 --alpha-max 2 --seed 7 --count 25";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"summary\"") != std::string::npos);

    auto graph_file = write_temp("c5.json",
                                 R"({"vertices":["a","b","c","d","e"],)"
                                 R"("edges":[["a","b"],["b","c"],["c","d"],["d","e"],["a","e"]]})");
    auto contract = run_cli("contract-graph " + graph_file);
    CHECK(contract.exit_code == 0);
    CHECK(contract.output.find("alpha=1,1,1,1,1") != std::string::npos);
}
