#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli/commands.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cyclic");
    std::ostringstream out, err;
    const int code = cyclic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected = 0) {
    const auto r = run_cli(std::move(args));
    EXPECT_EQ(r.code, expected) << r.err;
    return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST(Cli, SolveRightTriangle) {
    const auto j = run_json({"solve", "--geometry", "euclidean", "--sides", "3,4,5", "--json"});
    EXPECT_EQ(j["command"], "solve");
    EXPECT_NEAR(j["outputs"]["radius"].get<double>(), 2.5, 1e-13);
    EXPECT_TRUE(j["outputs"]["center_inside"].get<bool>());
    EXPECT_TRUE(j["outputs"]["feasible"].get<bool>());
    EXPECT_EQ(j["verdict"], "solved");
    EXPECT_EQ(j["tolerance"].get<double>(), 1e-13);
}

TEST(Cli, SolveHumanReadable) {
    const auto r = run_cli({"solve", "-g", "hyperbolic", "--sides", "1,1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("radius"), std::string::npos);
    EXPECT_NE(r.out.find("center-inside"), std::string::npos);
}

TEST(Cli, SolveExitCodes) {
    EXPECT_EQ(run_cli({"solve", "-g", "euclidean", "--sides", "10,1,1"}).code, 2);
    EXPECT_EQ(run_cli({"solve", "-g", "spherical", "--sides", "3,3,3"}).code, 2);
    EXPECT_EQ(run_cli({"solve", "-g", "spherical", "--sides", "1.4,1.4,3.1"}).code, 2);
    EXPECT_EQ(run_cli({"solve", "-g", "euclidean", "--sides", "1,x,1"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "-g", "euclidean", "--sides", "1,0,1"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "-g", "euclidean", "--sides", "1,1"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "-g", "elliptic", "--sides", "1,1,1"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "-g", "euclidean"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "-g", "euclidean", "--sides", "1,1,1", "--tol", "0"}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, SolveFromDocument) {
    const auto path = temp_file("square.json", R"({"geometry": "euclidean", "radius": 2.0,
        "angles": [0, 1.5707963267948966, 3.141592653589793, 4.71238898038469]})");
    const auto j = run_json({"solve", "--input", path, "--json"});
    EXPECT_NEAR(j["outputs"]["radius"].get<double>(), 2.0, 1e-12);
    EXPECT_EQ(run_cli({"solve", "--input", path, "-g", "spherical"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "--input", temp_file("bad.json", "{")}).code, 1);
    EXPECT_EQ(run_cli({"solve", "--input", ::testing::TempDir() + "missing.json"}).code, 1);
}

TEST(Cli, Diagonals) {
    const auto j = run_json({"diagonals", "-g", "euclidean", "--sides", "3,4,3,4", "--json"});
    const auto& d = j["outputs"]["diagonals"];
    ASSERT_EQ(d.size(), 2u);
    for (const auto& item : d) EXPECT_NEAR(item["length"].get<double>(), 5.0, 1e-12);
    EXPECT_EQ(d[0]["i"], 0);
    EXPECT_EQ(d[0]["j"], 2);

    // Regular pentagon with unit sides: every diagonal is the golden ratio.
    const auto p = run_json({"diagonals", "-g", "euclidean", "--sides", "1,1,1,1,1", "--json"});
    ASSERT_EQ(p["outputs"]["diagonals"].size(), 5u);
    for (const auto& item : p["outputs"]["diagonals"]) {
        EXPECT_NEAR(item["length"].get<double>(), (1 + std::sqrt(5.0)) / 2, 1e-12);
    }
    EXPECT_EQ(run_cli({"diagonals", "-g", "euclidean", "--sides", "10,1,1,1"}).code, 2);
}

TEST(Cli, VerifyBuiltins) {
    const auto j = run_json({"verify", "ptolemy", "--trials", "50", "--json"});
    EXPECT_EQ(j["verdict"], "holds");
    EXPECT_EQ(j["seed"], 42);
    const auto& item = j["outputs"]["identities"][0];
    EXPECT_EQ(item["name"], "ptolemy");
    EXPECT_EQ(item["degree"], 2);
    EXPECT_EQ(item["geometries"].size(), 3u);

    const auto q = run_json({"verify", "quad-diagonals", "--trials", "20", "--json"});
    EXPECT_EQ(q["outputs"]["identities"].size(), 2u);
    EXPECT_EQ(run_cli({"verify", "fuhrmann", "--trials", "20"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "gregorac", "--n", "4", "--trials", "20", "--threads", "2"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "gregorac", "--n", "3", "--trials", "20"}).code, 1);
    EXPECT_EQ(run_cli({"verify", "nonsense"}).code, 1);
}

TEST(Cli, VerifyPolynomialFile) {
    const auto bad = temp_file("bad.poly", "u_0_1 - u_1_2\n");
    const auto j = run_json({"verify", "--poly-file", bad, "--trials", "20", "--json"}, 3);
    EXPECT_EQ(j["verdict"], "fails");
    for (const auto& g : j["outputs"]["identities"][0]["geometries"]) {
        EXPECT_EQ(g["verdict"], "fails");
        EXPECT_TRUE(g.contains("counterexample"));
    }
    const auto good = temp_file("good.poly", "u_0_2 u_1_3 - u_0_1 u_2_3 - u_1_2 u_0_3");
    EXPECT_EQ(run_cli({"verify", "--poly-file", good, "--trials", "20"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "--poly-file", temp_file("junk.poly", "u_0_1 +")}).code, 1);
}

TEST(Cli, VerifyIsByteStable) {
    const std::vector<std::string> args{"verify", "ptolemy", "--trials", "30", "--seed", "7", "--json"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    EXPECT_EQ(run_cli(args).out, run_cli(threaded).out);
}

TEST(Cli, Sample) {
    const auto j = run_json({"sample", "-g", "spherical", "--n", "5", "--seed", "3"});
    EXPECT_EQ(j["geometry"], "spherical");
    EXPECT_EQ(j["angles"].size(), 5u);
    EXPECT_EQ(j["sides"].size(), 5u);
    EXPECT_EQ(j["vertices"][0].size(), 3u);
    EXPECT_EQ(run_cli({"sample", "-g", "spherical", "--n", "5", "--seed", "3"}).out,
              run_cli({"sample", "-g", "spherical", "--n", "5", "--seed", "3"}).out);

    const auto h = run_json({"sample", "-g", "hyperbolic", "--n", "4", "--radius", "2"});
    EXPECT_EQ(h["radius"].get<double>(), 2.0);
    // A sampled document feeds back into solve.
    const auto path = temp_file("sample.json", run_cli({"sample", "-g", "hyperbolic", "--n", "6"}).out);
    const auto doc = json::parse(run_cli({"sample", "-g", "hyperbolic", "--n", "6"}).out);
    const auto solved = run_json({"solve", "--input", path, "--json"});
    EXPECT_NEAR(solved["outputs"]["radius"].get<double>(), doc["radius"].get<double>(),
                1e-9 * doc["radius"].get<double>());

    EXPECT_EQ(run_cli({"sample", "-g", "euclidean", "--n", "4", "--radius", "-1"}).code, 1);
    EXPECT_EQ(run_cli({"sample", "-g", "spherical", "--n", "4", "--radius", "2"}).code, 1);
    EXPECT_EQ(run_cli({"sample", "-g", "euclidean", "--n", "2"}).code, 1);
    EXPECT_EQ(run_cli({"sample", "-g", "euclidean"}).code, 1);
}

TEST(Cli, ProjectRoundTrip) {
    const auto to_plane =
        run_json({"project", "--direction", "sphere-to-plane", "--points", "[[0.8, 0, 0.6], [0, 0, -1]]", "--json"});
    const auto& pts = to_plane["outputs"]["points"];
    EXPECT_NEAR(pts[0][0].get<double>(), 2.0, 1e-15);
    EXPECT_NEAR(pts[0][1].get<double>(), 0.0, 1e-15);
    EXPECT_NEAR(pts[1][0].get<double>(), 0.0, 1e-15);

    const auto back = run_json({"project", "--direction", "plane-to-sphere", "--points", pts.dump(), "--json"});
    EXPECT_NEAR(back["outputs"]["points"][0][0].get<double>(), 0.8, 1e-15);
    EXPECT_NEAR(back["outputs"]["points"][0][2].get<double>(), 0.6, 1e-15);
    EXPECT_NEAR(back["outputs"]["points"][1][2].get<double>(), -1.0, 1e-15);
}

TEST(Cli, ProjectCircleRadius) {
    // Points at angular radius 1 about the south pole map to a circle of
    // radius tan(1/2) about the origin.
    const double s = std::sin(1.0), c = -std::cos(1.0);
    std::ostringstream pts;
    pts.precision(17);
    pts << "[[" << s << ",0," << c << "],[0," << s << "," << c << "],[" << -s << ",0," << c << "]]";
    const auto j = run_json({"project", "--direction", "sphere-to-plane", "--points", pts.str(), "--json"});
    ASSERT_TRUE(j["outputs"].contains("circle"));
    EXPECT_NEAR(j["outputs"]["circle"]["spherical_radius"].get<double>(), 1.0, 1e-14);
    EXPECT_NEAR(j["outputs"]["circle"]["planar_radius"].get<double>(), std::tan(0.5), 1e-14);
    for (const auto& p : j["outputs"]["points"]) {
        EXPECT_NEAR(std::hypot(p[0].get<double>(), p[1].get<double>()), std::tan(0.5), 1e-14);
    }
}

TEST(Cli, ProjectErrors) {
    EXPECT_EQ(run_cli({"project", "--direction", "sphere-to-plane", "--points", "[[0,0,1]]"}).code, 1);
    EXPECT_EQ(run_cli({"project", "--direction", "sphere-to-plane", "--points", "[[1,1,1]]"}).code, 1);
    EXPECT_EQ(run_cli({"project", "--direction", "sideways", "--points", "[[0,0]]"}).code, 1);
    EXPECT_EQ(run_cli({"project", "--direction", "plane-to-sphere", "--points", "[[0,0,0]]"}).code, 1);
    EXPECT_EQ(run_cli({"project", "--direction", "plane-to-sphere", "--points", "[["}).code, 1);
    EXPECT_EQ(run_cli({"project", "--direction", "plane-to-sphere", "--points", "[]"}).code, 1);
}

TEST(StableJson, Formatting) {
    json j;
    j["b"] = 0.1;
    j["a"] = json::array({1, 2.5});
    j["c"] = {{"z", true}, {"y", nullptr}};
    EXPECT_EQ(cyclic::cli::stable_json(j),
              "{\n  \"a\": [1, 2.5],\n  \"b\": 0.10000000000000001,\n  \"c\": {\n    \"y\": null,\n    \"z\": true\n  }\n}\n");
    EXPECT_EQ(cyclic::cli::stable_json(json(std::nan(""))), "null\n");
}
