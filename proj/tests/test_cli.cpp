#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hsx/scenario.hpp"

namespace fs = std::filesystem;

namespace {

int run_cmd(const std::string& cmd) {
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string scenario_path(const std::string& name) {
    return std::string(HSX_SOURCE_DIR) + "/scenarios/" + name + ".json";
}

std::string fresh_dir(const std::string& tag) {
    std::string d = (fs::temp_directory_path() / ("hsx2_test_" + tag)).string();
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Message of the InputError raised while parsing, or "" if none.
std::string parse_error(const std::string& text) {
    try {
        hsx::parse_scenario(text);
    } catch (const hsx::InputError& e) {
        return e.what();
    }
    return "";
}

const char* kBaseScenario = R"({
  "name": "t",
  "initial": {"lagrangian": {"xi": [0.0, 1.0], "y": [0.0, 0.5], "U": [0.0, 0.5],
                             "H": [0.0, 0.5], "V": [0.0, 0.5], "r": [0.0]}},
  "alpha": {"constant": 0.25},
  "times": [0.0, 1.0]
})";

}  // namespace

TEST_CASE("scenario files run with a clean exit") {
    for (const char* name : {"zero", "a1", "a2", "a3", "intro"}) {
        std::string out = fresh_dir(std::string("run_") + name);
        int code = run_cmd(std::string(HSX2_BIN) + " --out " + out + " run " +
                           scenario_path(name));
        CHECK_MESSAGE(code == 0, name);
    }
}

TEST_CASE("the degenerate coefficient is rejected unless overridden") {
    std::string out = fresh_dir("a4");
    CHECK(run_cmd(std::string(HSX2_BIN) + " --out " + out + " run " +
                  scenario_path("a4")) == 3);
    CHECK(run_cmd(std::string(HSX2_BIN) + " --out " + out +
                  " --allow-invalid-alpha run " + scenario_path("a4")) == 0);
}

TEST_CASE("built-in examples pass their reference comparisons") {
    for (const char* name : {"a1", "a2", "a3", "a4", "intro"}) {
        std::string out = fresh_dir(std::string("ex_") + name);
        int code =
            run_cmd(std::string(HSX2_BIN) + " --out " + out + " example " + name);
        CHECK_MESSAGE(code == 0, name);
    }
}

TEST_CASE("malformed input exits with code 3") {
    CHECK(run_cmd(std::string(HSX2_BIN) + " run /nonexistent/file.json") == 3);
    std::string bad = fresh_dir("bad") + "/bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_cmd(std::string(HSX2_BIN) + " run " + bad) == 3);
    CHECK(run_cmd(std::string(HSX2_BIN) + " example no_such_example") == 3);
}

TEST_CASE("schema violations report the JSON pointer of the offender") {
    std::string base = kBaseScenario;
    CHECK(parse_error("[1,2]").find("scenario must be") != std::string::npos);

    std::string unsorted = base;
    unsorted.replace(unsorted.find("\"times\": [0.0, 1.0]"), 19,
                     "\"times\": [1.0, 0.5]");
    CHECK(parse_error(unsorted).find("/times/1") != std::string::npos);

    std::string negtime = base;
    negtime.replace(negtime.find("\"times\": [0.0, 1.0]"), 19,
                    "\"times\": [-1.0, 1.0]");
    CHECK(parse_error(negtime).find("/times/0") != std::string::npos);

    std::string badalpha = base;
    badalpha.replace(badalpha.find("{\"constant\": 0.25}"), 18,
                     "{\"constant\": 1.5}");
    CHECK(parse_error(badalpha).find("/alpha") != std::string::npos);

    std::string noinit = R"({"name":"t","initial":{},"alpha":{"constant":0.1},"times":[0]})";
    CHECK(parse_error(noinit).find("/initial") != std::string::npos);

    std::string badout = base;
    badout.insert(badout.rfind('}'), ",\"outputs\":[\"bogus\"]");
    CHECK(parse_error(badout).find("/outputs") != std::string::npos);

    std::string badmode = base;
    badmode.insert(badmode.rfind('}'), ",\"mode\":\"magic\"");
    CHECK(parse_error(badmode).find("/mode") != std::string::npos);

    std::string nopicard = base;
    nopicard.insert(nopicard.rfind('}'), ",\"mode\":\"picard\"");
    CHECK(parse_error(nopicard).find("/picard") != std::string::npos);

    std::string badgrid = base;
    badgrid.replace(badgrid.find("\"xi\": [0.0, 1.0]"), 16, "\"xi\": [1.0, 0.0]");
    CHECK(parse_error(badgrid).find("/initial/lagrangian") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
    std::string d1 = fresh_dir("repro1"), d2 = fresh_dir("repro2");
    REQUIRE(run_cmd(std::string(HSX2_BIN) + " --out " + d1 + " run " +
                    scenario_path("a2")) == 0);
    REQUIRE(run_cmd(std::string(HSX2_BIN) + " --out " + d2 + " run " +
                    scenario_path("a2")) == 0);
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(d1)) {
        std::string name = entry.path().filename().string();
        CHECK(slurp(d1 + "/" + name) == slurp(d2 + "/" + name));
        ++compared;
    }
    CHECK(compared >= 2);
}

TEST_CASE("the environment variable overrides the output flag") {
    std::string denv = fresh_dir("envout"), dflag = fresh_dir("flagout");
    setenv("HSX2_OUT", denv.c_str(), 1);
    CHECK(hsx::resolve_outdir(dflag) == denv);
    unsetenv("HSX2_OUT");
    CHECK(hsx::resolve_outdir(dflag) == dflag);
    CHECK(hsx::resolve_outdir("") == ".");

    std::string cmd = "HSX2_OUT=" + denv + " " + HSX2_BIN + " run " +
                      scenario_path("zero");
    REQUIRE(run_cmd(cmd) == 0);
    CHECK(fs::exists(denv + "/zero_lagrangian.csv"));
}

TEST_CASE("plot exports") {
    hsx::RunResult res = hsx::run_scenario(hsx::builtin_example("a2"));
    std::string d = fresh_dir("plots");
    for (const char* kind : {"profile", "cdf", "characteristics", "metric_growth"}) {
        std::string p = d + "/" + kind + ".csv";
        hsx::export_plot_data(res, kind, p);
        std::string text = slurp(p);
        CHECK(text.find(',') != std::string::npos);
        CHECK(text.find('\n') != std::string::npos);
    }
    CHECK(slurp(d + "/profile.csv").rfind("t,x,u,rho\n", 0) == 0);
    CHECK(slurp(d + "/characteristics.csv").rfind("xi,t,y\n", 0) == 0);
    // No metric entries were requested, so that export is header-only.
    CHECK(slurp(d + "/metric_growth.csv") == "t,dtilde,bound\n");
    CHECK_THROWS_AS(hsx::export_plot_data(res, "surface", d + "/x.csv"),
                    hsx::InputError);
}

TEST_CASE("run_scenario rejects inconsistent initial measures") {
    hsx::Scenario s = hsx::parse_scenario(R"({
      "name": "neq",
      "initial": {"eulerian": {
        "u": {"knots": [[-1.0, 0.0], [0.0, 1.0], [1.0, 0.0]]},
        "nu": {"cdf": {"knots": [[-1.0, 0.0], [1.0, 2.0]]}},
        "mu": {"cdf": {"knots": [[-1.0, 0.0], [1.0, 1.0]]}}
      }},
      "alpha": {"constant": 0.5},
      "times": [1.0]
    })");
    CHECK_THROWS_AS(hsx::run_scenario(s), hsx::InvariantError);
}
