#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ogk/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ogk::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string golden_dir() { return OGK_GOLDEN_DIR; }

} // namespace

TEST_CASE("solve emits the chromatic value as JSON") {
    CliRun r = run({"solve", "K 4 4"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["chi"] == 13);
    CHECK(j["witness"]["k"] == 13);
    CHECK(j["stats"]["nodes_explored"].get<long long>() > 0);
}

TEST_CASE("solve prints infinite for non-bipartite input, exit 0") {
    CliRun r = run({"solve", "cycle 5"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["chi"] == "infinite");
}

TEST_CASE("bound on the 18-vertex Moebius ladder lists the square value 10") {
    CliRun r = run({"bound", "mobius 18"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    bool seen = false;
    for (const auto& e : j["upper"])
        if (e["value"] == 10 && e["source"] == "SquareChromatic") seen = true;
    CHECK(seen);
}

TEST_CASE("gen piped through a file matches solving the DSL directly") {
    CliRun gen = run({"gen", "K 3 3", "--format", "text"});
    REQUIRE(gen.code == 0);
    std::string path = std::string(OGK_BINARY_DIR) + "/k33.edges";
    std::ofstream(path) << gen.out;
    CliRun from_file = run({"solve", "--input", path});
    CliRun direct = run({"solve", "K 3 3"});
    CHECK(json::parse(from_file.out)["chi"] == json::parse(direct.out)["chi"]);
}

TEST_CASE("verify reads graph and labeling files") {
    std::string graph_path = std::string(OGK_BINARY_DIR) + "/square.edges";
    std::string lab_path = std::string(OGK_BINARY_DIR) + "/square.labels.json";
    std::ofstream(graph_path) << run({"gen", "K 2 2", "--format", "text"}).out;
    std::ofstream(lab_path) << R"({"k": 5, "labels": [1, 5, 2, 4]})";
    CliRun ok = run({"verify", graph_path, lab_path});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["valid"] == true);

    std::ofstream(lab_path) << R"({"k": 4, "labels": [1, 3, 0, 4]})";
    CliRun bad = run({"verify", graph_path, lab_path});
    CHECK(bad.code == 0); // an invalid labeling is an answer, not an error
    json j = json::parse(bad.out);
    CHECK(j["valid"] == false);
    CHECK(j["violations"][0]["kind"] == "LabelOutOfRange");
}

TEST_CASE("exit codes: usage 1, resource 2, domain 3") {
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"solve"}).code == 3); // parsed fine, but no input given
    CHECK(run({"solve", "mobius 7"}).code == 3);
    CHECK(run({"solve", "K 4 4", "--node-limit", "3"}).code == 2);
    CHECK(run({"oracle", "path 8"}).code == 3);
    CHECK(run({"enumerate", "K 2 2"}).code == 1); // -k missing
}

TEST_CASE("OGK_NODE_LIMIT lowers the default budget") {
    setenv("OGK_NODE_LIMIT", "3", 1);
    CHECK(run({"solve", "K 4 4"}).code == 2);
    setenv("OGK_NODE_LIMIT", "not-a-number", 1);
    CHECK(run({"solve", "K 2 2"}).code == 3);
    unsetenv("OGK_NODE_LIMIT");
    CHECK(run({"solve", "K 2 2"}).code == 0);
}

TEST_CASE("help exits cleanly") {
    CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theorem-check") != std::string::npos);
}

TEST_CASE("golden outputs stay byte-stable") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"gen_k22.json", {"gen", "K 2 2"}},
        {"gen_mobius10.dot", {"gen", "mobius 10", "--format", "dot"}},
        {"gen_path4.edges", {"gen", "path 4", "--format", "text"}},
        {"chi_cycle7.json", {"chi", "cycle 7"}},
        {"bound_mobius18.json", {"bound", "mobius 18"}},
        {"bound_k42.json", {"bound", "K 4 2"}},
        {"construct_k44.json", {"construct", "K 4 4"}},
        {"construct_k54_r2.dot", {"construct", "K 5 4 - K1 2", "--format", "dot"}},
        {"exists_p3_k4.json", {"exists", "path 3", "-k", "4", "--canonical"}},
        {"enumerate_k42_dedupe.json", {"enumerate", "K 4 2", "-k", "9", "--dedupe"}},
        {"oracle_p3.json", {"oracle", "path 3"}},
    };
    for (const auto& [file, args] : commands) {
        CAPTURE(file);
        CliRun r = run(args);
        CHECK(r.code == 0);
        CHECK(r.out == slurp(golden_dir() + "/" + file));
    }
}
