#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" COHANN_CLI "' " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string("'" COHANN_DATA_DIR "/") + name + "'"; }

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

std::string write_temp(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / ("cohann_cli_" + name);
    std::ofstream(p) << content;
    return "'" + p.string() + "'";
}

}  // namespace

TEST(Cli, SannCusp) {
    CliRun r = run("sann " + data("cusp.json"));
    ASSERT_EQ(r.code, 0);
    auto j = json_of(r);
    EXPECT_EQ(j["generators"], nlohmann::json({"x", "y"}));
    EXPECT_EQ(j["stabilized"], true);
    EXPECT_EQ(j["truncation"], 10);
}

TEST(Cli, SannTrivialIsUnit) {
    CliRun r = run("sann " + data("cusp_trivial.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["generators"], nlohmann::json({"1"}));
}

TEST(Cli, SannDeterminantal) {
    CliRun r = run("sann " + data("det2.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["generators"], nlohmann::json({"x11", "x12", "x21", "x22"}));
}

TEST(Cli, CaAn) {
    CliRun r4 = run("ca --an 4");
    ASSERT_EQ(r4.code, 0);
    EXPECT_EQ(json_of(r4)["generators"], nlohmann::json({"x", "y^2"}));
    CliRun r2 = run("ca --an 2");
    EXPECT_EQ(json_of(r2)["generators"], nlohmann::json({"x", "y"}));
}

TEST(Cli, CaEmptyCatalog) {
    std::string path = write_temp("empty.json", R"({"f": "x^2+y^3", "vars": ["x", "y"], "complete": true, "entries": []})");
    EXPECT_EQ(run("ca --catalog " + path).code, 2);
}

TEST(Cli, TruncationOverrides) {
    EXPECT_EQ(json_of(run("--trunc 8 sann " + data("cusp.json")))["truncation"], 8);
    EXPECT_EQ(json_of(run("sann " + data("cusp.json"), "COHANN_TRUNC=7"))["truncation"], 7);
    EXPECT_EQ(json_of(run("--trunc 9 sann " + data("cusp.json"), "COHANN_TRUNC=7"))["truncation"], 9);
    EXPECT_NE(run("--trunc 1 sann " + data("cusp.json")).code, 0);
}

TEST(Cli, RequireStable) {
    // At N = 3 the A_6 annihilator has not settled yet.
    CliRun r = run("--trunc 3 --require-stable ca --an 6");
    auto j = json_of(r);
    EXPECT_EQ(j["stabilized"], false);
    EXPECT_EQ(r.code, 4);
}

TEST(Cli, ExitCodes) {
    std::string bad_product =
        write_temp("bad.json", R"({"vars": ["x","y"], "f": "x^2+y^3", "A": [["x"]], "B": [["x"]], "label": "bad"})");
    EXPECT_EQ(run("sann " + bad_product).code, 2);
    std::string bad_syntax =
        write_temp("syntax.json", R"({"vars": ["x","y"], "f": "x^2+", "A": [["x"]], "B": [["x"]]})");
    EXPECT_EQ(run("sann " + bad_syntax).code, 3);
    EXPECT_EQ(run("sann " + write_temp("notjson.json", "{")).code, 3);
    EXPECT_EQ(run("verify --suite bogus").code, 1);
    EXPECT_EQ(run("").code, 1);
}

TEST(Cli, KnorrerCover) {
    CliRun r = run("knorrer " + data("cusp.json") + " --var z");
    ASSERT_EQ(r.code, 0);
    auto j = json_of(r);
    EXPECT_EQ(j["A"].size(), 4u);
    EXPECT_EQ(j["f"], "y^3+x^2+z^2");
    EXPECT_EQ(run("knorrer " + data("cusp.json") + " --var y").code, 1);
    std::string one_by_one =
        write_temp("one.json", R"({"vars": ["x","y"], "f": "x^2+y^3", "A": [["x^2+y^3"]], "B": [["1"]]})");
    CliRun t = run("knorrer " + one_by_one);
    EXPECT_EQ(json_of(t)["A"], nlohmann::json::parse(R"([["1", "-z"], ["z", "y^3+x^2"]])"));
}

TEST(Cli, Invariants) {
    auto s = json_of(run("semigroup 2 3"))["rows"][0];
    EXPECT_EQ(s["frobenius"], 1);
    EXPECT_EQ(s["delta"], 1);
    EXPECT_EQ(s["mu"], 2);
    EXPECT_EQ(json_of(run("milnor x^3+y^5"))["mu"], 8);
    auto mj = json_of(run("mj 2 3 --l 1"));
    EXPECT_EQ(mj["mj_holds"], true);
    EXPECT_EQ(mj["mu"], 2);
    EXPECT_EQ(json_of(run("jacobian --f 'x*w^2-y*z' --vars x,y,z,w"))["generators"],
              nlohmann::json({"w^2", "-z", "-y", "2*x*w"}));
    EXPECT_EQ(json_of(run("cover --f 'x^3+z^2' --m 3 --var w"))["cover"], "x^3+w^3+z^2");
}

TEST(Cli, IntersectTorus) {
    CliRun r = run("--trunc 6 intersect --vars x,y,z,w --rel 'x*w^2-y*z' --ideal w,z,y --ideal 'x,y,z,w^2' "
                "--compare 'x*w,y,z,w^2' --compare 'w^2,z,y,x*w'");
    ASSERT_EQ(r.code, 0);
    auto j = json_of(r);
    EXPECT_EQ(j["comparisons"][0]["equal"], true);
    EXPECT_EQ(j["comparisons"][1]["equal"], true);
}

TEST(Cli, ValidateMf) {
    EXPECT_EQ(run("validate-mf " + data("det2.json")).code, 0);
    EXPECT_EQ(run("validate-mf " + data("a4_catalog.json")).code, 0);
}

TEST(Cli, TextFormat) {
    CliRun r = run("--format text ca --an 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("generators: (x, y)"), std::string::npos) << r.out;
}

TEST(Cli, PropertiesSuite) {
    CliRun r = run("verify --suite properties --seed 0");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["passed"], true);
}

TEST(Cli, DeterministicOutput) {
    for (const char* args : {"ca --an 4", "sann '" COHANN_DATA_DIR "/det2.json'", "semigroup --max 9"}) {
        CliRun a = run(args), b = run(args);
        ASSERT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << args;
    }
}
