#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "twcst/cli.hpp"
#include "twcst/core.hpp"
#include "twcst/io.hpp"

using namespace twcst;
namespace fs = std::filesystem;

namespace {

fs::path scratch_file(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "twcst-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// id -> label for every node line of a DOT graph.
std::map<std::string, std::string> dot_nodes(const std::string& dot) {
    std::map<std::string, std::string> nodes;
    const std::regex line(R"re(^\s*(n\d+) \[(?:shape=box, )?label="([^"]*)"\];$)re");
    std::istringstream in(dot);
    for (std::string s; std::getline(in, s);) {
        std::smatch m;
        if (std::regex_match(s, m, line)) nodes[m[1]] = m[2];
    }
    return nodes;
}

std::size_t dot_edges(const std::string& dot) {
    std::size_t count = 0;
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++count;
    return count;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("instance json") {
    const Instance inst({8, 3, 4});
    CHECK(instance_from_json(to_json(inst)) == inst);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"({"weights":[1,2.5]})")), InvalidInstance);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"({"weights":["1"]})")), InvalidInstance);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"({"w":[1]})")), InvalidInstance);
}

TEST_CASE("tree json") {
    const Tree t = parse_tree("(<3 (=1 1 2) (=3 3 4))");
    const json j = to_json(t);
    CHECK(j["kind"] == "lt");
    CHECK(j["lt"]["kind"] == "eq");
    CHECK(j["ge"]["no"]["key"] == 4);
    CHECK(tree_from_json(j) == t);
    CHECK_THROWS_AS(tree_from_json(json::parse(R"({"kind":"eq","key":1,"yes":{"kind":"leaf","key":1}})")),
                    InvalidTree);
    CHECK_THROWS_AS(tree_from_json(json::parse(R"({"kind":"gt","key":1})")), InvalidTree);
}

TEST_CASE("dot export") {
    const Instance inst({5, 7});
    const std::string dot = to_dot(parse_tree("(=1 1 2)"), &inst);
    const auto nodes = dot_nodes(dot);
    CHECK(nodes.size() == 3);
    CHECK(dot_edges(dot) == 2);
    CHECK(nodes.at("n0") == "=1");
    CHECK(nodes.at("n1") == "1 (5)");
    CHECK(nodes.at("n2") == "2 (7)");
}

TEST_CASE("csv row") {
    const ThresholdReport r = evaluate(Instance({3, 4, 3}));
    CHECK(csv_header() == "n,weights,w_max,W,ratio,E,L,verdict");
    CHECK(csv_row(r) == "3,3 4 3,4,10,2/5,16,17,eq-strict");
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("solve and oracle agree on the cost") {
    const auto inst = scratch_file("eight.json", R"({"weights": [8, 3, 4, 3, 2, 9, 8, 7]})");
    const Run s = run({"solve", "--instance", inst.string()});
    const Run o = run({"oracle", "--instance", inst.string()});
    REQUIRE(s.code == 0);
    REQUIRE(o.code == 0);
    CHECK(json::parse(s.out)["cost"] == 127);
    CHECK(json::parse(s.out)["cost"].dump() == json::parse(o.out)["cost"].dump());
    const Tree t = tree_from_json(json::parse(s.out)["tree"]);
    CHECK(cost(t, Instance({8, 3, 4, 3, 2, 9, 8, 7})) == 127);
}

TEST_CASE("solve and oracle agree for n <= 9") {
    for (int n = 1; n <= 9; ++n) {
        const Instance inst = gen_random_instance(n, 1, 30, 100 + n);
        const auto p = scratch_file("r" + std::to_string(n) + ".json", to_json(inst).dump());
        const Run s = run({"solve", "--instance", p.string()});
        const Run o = run({"oracle", "--instance", p.string()});
        CHECK(json::parse(s.out)["cost"].dump() == json::parse(o.out)["cost"].dump());
    }
}

TEST_CASE("verify theorem sweep exits 0") {
    const Run r = run({"verify", "--theorem", "--n", "7", "--samples", "1000", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["failures"] == 0);
}

TEST_CASE("verify one instance") {
    const auto p = scratch_file("i322.json", R"({"weights": [3, 2, 2]})");
    const Run r = run({"verify", "--instance", p.string()});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["theorem"]["applicable"] == true);
    CHECK(j["theorem"]["report"]["verdict"] == "tie");
}

TEST_CASE("render round trip keeps nodes and labels") {
    const Tree t = parse_tree("(<3 (=1 1 2) (=3 3 (<5 4 5)))");
    const auto p = scratch_file("tree.json", to_json(t).dump());
    const Run r = run({"render", "--tree", p.string()});
    REQUIRE(r.code == 0);
    const auto nodes = dot_nodes(r.out);
    CHECK(nodes.size() == t.node_count());
    std::vector<std::string> labels;
    for (const auto& [id, label] : nodes) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"1", "2", "3", "4", "5", "<3", "<5", "=1", "=3"});

    const auto single = scratch_file("eq12.json", to_json(parse_tree("(=1 1 2)")).dump());
    const Run e = run({"render", "--tree", single.string()});
    CHECK(dot_nodes(e.out).size() == 3);
    CHECK(dot_edges(e.out) == 2);
}

TEST_CASE("transform command") {
    const auto inst = scratch_file("t322.json", R"({"weights": [3, 2, 2]})");
    const auto tree = scratch_file("t322-tree.json", to_json(parse_tree("(<2 1 (=2 2 3))")).dump());
    const Run r = run({"transform", "--instance", inst.string(), "--tree", tree.string()});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["tree"]["kind"] == "eq");
    CHECK(j["trace"]["outputCost"] == 11);
    CHECK(j["trace"]["steps"][0]["case"] == "base-r∈{2,n}");

    const Run dot = run({"transform", "--instance", inst.string(), "--tree", tree.string(), "--format", "dot"});
    CHECK(dot.out.find("digraph before") != std::string::npos);
    CHECK(dot.out.find("digraph after") != std::string::npos);
}

TEST_CASE("transform refuses a light instance with exit 1") {
    const auto inst = scratch_file("light.json", R"({"weights": [1, 1, 1, 1]})");
    const auto tree = scratch_file("light-tree.json", to_json(parse_tree("(<3 (<2 1 2) (<4 3 4))")).dump());
    const Run r = run({"transform", "--instance", inst.string(), "--tree", tree.string()});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["error"] == "MaxWeightTooSmall");
}

TEST_CASE("sweep writes csv") {
    const Run r = run({"sweep", "--bound", "plus", "--n", "4", "--max-weight", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(csv_header() + "\n", 0) == 0);
    const auto out = fs::temp_directory_path() / "twcst-tests" / "sweep.json";
    const Run j = run({"sweep", "--bound", "minus", "--n", "5", "--max-weight", "4", "--format", "json", "--out",
                       out.string()});
    CHECK(j.code == 0);
    CHECK(read_json_file(out)["violations"] == 0);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"solve"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"solve", "--instance", "/nonexistent/x.json"}).code == 2);
    const auto bad = scratch_file("bad.json", R"({"weights": [1, 1.5]})");
    const Run r = run({"solve", "--instance", bad.string()});
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"] == "InvalidInstance");
    const auto big = scratch_file("big.json", to_json(Instance(std::vector<Weight>(16, 1))).dump());
    CHECK(run({"oracle", "--instance", big.string()}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
