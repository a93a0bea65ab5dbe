#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef FOCKFORGE_CLI
#error "FOCKFORGE_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the binary through the shell with stderr discarded.
Run run(const std::string& args) {
    const std::string command = std::string("'") + FOCKFORGE_CLI + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("gr-table") {
    const Run r = run("--ell 1 --m 2 --charge 0 --max-degree 2 gr-table");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["params"]["m"] == 2);
    CHECK(j["params"]["charge"] == nlohmann::json::array({0}));
    CHECK(j["tables"][0] == nlohmann::json::parse(R"({"n":0,"dims":[[0,0,1]]})"));
    CHECK(j["tables"][2] == nlohmann::json::parse(R"({"n":2,"dims":[[0,1,1],[2,0,1]]})"));

    const Run other = run("--ell 2 --m 3 --charge 1,-1 --max-degree 3 gr-table");
    REQUIRE(other.code == 0);
    CHECK(nlohmann::json::parse(other.out)["tables"][0]["dims"] == nlohmann::json::parse("[[0,0,1]]"));
}

TEST_CASE("csv and json carry the same numbers") {
    const std::string common = "--ell 2 --m 2 --charge 1,-1 --max-degree 4 gr-table";
    const Run js = run(common), csv = run("--format csv " + common);
    REQUIRE(js.code == 0);
    REQUIRE(csv.code == 0);
    std::ostringstream rebuilt;
    rebuilt << "n,i,j,dim\n";
    const auto parsed = nlohmann::json::parse(js.out);
    for (const auto& t : parsed["tables"])
        for (const auto& d : t["dims"]) rebuilt << t["n"] << ',' << d[0] << ',' << d[1] << ',' << d[2] << '\n';
    CHECK(rebuilt.str() == csv.out);
}

TEST_CASE("output is deterministic") {
    for (const char* args : {"--ell 2 --m 2 --max-degree 4 gr-table", "--ell 2 --m 3 --charge 1,-1 --max-degree 3 crystal",
                             "--ell 3 --m 2 --charge 1,0,-1 --max-degree 4 findim --format json"}) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("findim") {
    const Run r = run("--ell 1 --m 2 --max-degree 2 --format json findim");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["h"] == nlohmann::json::array({1, 0, 0}));
    CHECK(j["singular"] == j["h"]);
    CHECK(j["match"] == true);
    const Run text = run("--ell 2 --m 2 --max-degree 5 --format text findim");
    CHECK(text.code == 0);
    CHECK(text.out.find("h_0 = 1") != std::string::npos);
    CHECK(text.out.find("match: true") != std::string::npos);
}

TEST_CASE("apply") {
    CHECK(run("--ell 1 --m 2 --charge 0 apply e 0 '[1]'").out == "[]\n");
    CHECK(run("--ell 1 --m 2 apply b 1 '[]'").out == "[2] - [1,1]\n");
    CHECK(run("--ell 1 --m 2 apply casimir '[2]'").out == "1/2 [2] - 1/2 [1,1]\n");
    CHECK(run("--ell 1 --m 2 apply \"b'\" 1 '[2] - [1,1]'").out == "2 []\n");
    CHECK(run("--ell 2 --m 2 apply b 1 '[]|[]'").out == "[2]|[] - [1,1]|[] + []|[2] - []|[1,1]\n");
    CHECK(run("--ell 1 --m 2 apply e 1 '[1]'").out == "0\n");
    // Both addable nodes of (1) have residue 1.
    const Run js = run("--ell 1 --m 2 --format json apply f 1 '[1]'");
    CHECK(nlohmann::json::parse(js.out) == nlohmann::json::parse(R"({"[2]":"1","[1,1]":"1"})"));
}

TEST_CASE("crystal export") {
    const Run dot = run("--ell 1 --m 2 --max-degree 0 crystal");
    REQUIRE(dot.code == 0);
    CHECK(dot.out == "digraph crystal {\n  v0 [label=\"[]\"];\n}\n");
    const Run js = run("--ell 2 --m 2 --max-degree 3 --format json crystal");
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    std::array<int, 4> per_degree{};
    for (const auto& v : j["vertices"]) ++per_degree[v["degree"].get<int>()];
    CHECK(per_degree == std::array<int, 4>{1, 2, 5, 10});
    CHECK(j["crystal_order"] == "content-then-component");
}

TEST_CASE("check") {
    const Run zero = run("--ell 2 --m 3 --max-degree 0 check");
    CHECK(zero.code == 0);
    CHECK(zero.out.find("33/33 invariants hold") != std::string::npos);
    const Run small = run("--ell 2 --m 2 --charge 1,-1 --max-degree 4 --crystal-order component-then-content check");
    CHECK(small.code == 0);
    CHECK(small.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("--ell 2 --charge 0 gr-table").code == 2);
    CHECK(run("--m 1 gr-table").code == 2);
    CHECK(run("--max-degree -1 gr-table").code == 2);
    CHECK(run("--charge 1,x --ell 2 gr-table").code == 2);
    CHECK(run("gr-table --format dot").code == 2);
    CHECK(run("--format yaml gr-table").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("apply e 0 '[1,2]'").code == 2);
    CHECK(run("apply e 5 '[1]'").code == 2);
    CHECK(run("apply g 0 '[1]'").code == 2);
    CHECK(run("apply b 0 '[1]'").code == 2);
    CHECK(run("apply casimir").code == 2);
    CHECK(run("apply casimir '[2]' --m 3").code == 2);
    CHECK(run("--crystal-order sideways crystal").code == 2);
    CHECK(run("--help").code == 0);
}
