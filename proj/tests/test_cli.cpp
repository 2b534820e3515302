#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

std::string dp6_bin() {
    const char* env = std::getenv("DP6_BIN");
    REQUIRE(env != nullptr);
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = dp6_bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/dp6_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("cohomology command") {
    RunResult r = run("cohomology --type 2 --divisor 0,1,-1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(1,1,0)\n");
    CHECK(run("cohomology --type 0 --divisor 0,0,0,0").out == "(1,0,0)\n");
    CHECK(run("cohomology --type 1 --divisor 1,-1,-1,-1").out == "(1,1,0)\n");
    CHECK(run("cohomology --type 0 --divisor 1,2").exit_code == 2);
}

TEST_CASE("classify pencil") {
    std::string path = write_temp("pencil.json",
                                  R"({"b0": [[1,0,0],[0,1,0],[0,0,1]],
                                      "b1": [[0,0,0],[0,1,0],[0,0,2]]})");
    RunResult r = run("classify pencil " + path);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["results"]["type"] == 0);
    CHECK(j["results"]["z2"] == json::array({1, 1, 1}));
    CHECK(j["command"] == "classify pencil");

    // identical runs are byte-identical
    RunResult r2 = run("classify pencil " + path);
    CHECK(r.out == r2.out);

    RunResult table = run("classify pencil " + path + " --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("type            0") != std::string::npos);
}

TEST_CASE("classify tensor: accept and reject") {
    std::string w = write_temp("tensor_w.json",
                               R"({"t": [[[0,1],[1,0]],[[1,0],[0,0]]]})");
    RunResult r = run("classify tensor " + w);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["results"]["type"] == 1);
    CHECK(j["results"]["z3"] == json::array({2}));

    std::string bad = write_temp("tensor_o4.json",
                                 R"({"t": [[[1,0],[0,1]],[[0,0],[0,0]]]})");
    RunResult rb = run("classify tensor " + bad);
    CHECK(rb.exit_code == 2);
    json jb = json::parse(rb.out);
    CHECK(jb["error"]["code"] == "NotDelPezzo");
    CHECK(jb["error"]["condition"] == "O4");
}

TEST_CASE("classify batch keeps input order") {
    std::string path = write_temp("batch.json", R"([
        {"kind": "points", "points": [[1,0,0],[0,1,0],[0,0,1]]},
        {"kind": "points", "points": [[1,0,0],[0,1,0],[1,1,0]]},
        {"kind": "jet3", "point": [1,0,0], "tangent": [0,1,0], "c": 0}
    ])");
    RunResult r = run("classify blowup-p2 " + path);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["results"].size() == 3);
    CHECK(j["results"][0]["type"] == 0);
    CHECK(j["results"][1]["type"] == 1);
    CHECK(j["results"][2]["type"] == 5);
}

TEST_CASE("malformed input exits 2 with a ParseError payload") {
    std::string path = write_temp("garbage.json", "{nonsense");
    RunResult r = run("classify pencil " + path);
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["error"]["code"] == "ParseError");
}

TEST_CASE("tables command") {
    RunResult r = run("tables");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["results"].size() == 6);
    CHECK(j["results"][5]["z2"] == json::array({3}));
    CHECK(j["results"][5]["singularities"] == "A2 + A1");
    CHECK(j["results"][4]["blocks"][1] == json::array({"R3"}));

    RunResult single = run("tables --type 5 --format table");
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("A2 + A1") != std::string::npos);

    // JSON mode round-trips
    RunResult again = run("tables");
    CHECK(r.out == again.out);
}

TEST_CASE("verify --quick passes and is deterministic under DP6_SEED") {
    RunResult r = run("verify --quick");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    bool all = true;
    for (const auto& c : j["results"]["checks"])
        if (!c["pass"].get<bool>()) all = false;
    CHECK(all);

    std::string with_seed = "DP6_SEED=42 " + dp6_bin() + " verify --quick 2>/dev/null";
    FILE* p1 = popen(with_seed.c_str(), "r");
    REQUIRE(p1 != nullptr);
    std::string out1;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p1)) > 0) out1.append(buf.data(), n);
    pclose(p1);
    FILE* p2 = popen(with_seed.c_str(), "r");
    REQUIRE(p2 != nullptr);
    std::string out2;
    while ((n = fread(buf.data(), 1, buf.size(), p2)) > 0) out2.append(buf.data(), n);
    pclose(p2);
    CHECK(out1 == out2);
}

TEST_CASE("verify --inject-fault inventory fails with UnrecognizedPattern") {
    RunResult r = run("verify --quick --inject-fault inventory");
    CHECK(r.exit_code != 0);
    json j = json::parse(r.out);
    bool found = false;
    for (const auto& c : j["results"]["checks"])
        if (!c["pass"].get<bool>() &&
            c["detail"].get<std::string>().find("UnrecognizedPattern") != std::string::npos)
            found = true;
    CHECK(found);
}
