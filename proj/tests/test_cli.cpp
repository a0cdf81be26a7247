#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef FLOWFORMS_CLI_PATH
#error "FLOWFORMS_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(FLOWFORMS_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/flowforms_test_") + name;
}

}  // namespace

TEST_CASE("models list") {
    auto r = run("models list");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("sl2-geodesic") != std::string::npos);
    CHECK(r.output.find("sl2-horocycle-plus") != std::string::npos);
    CHECK(r.output.find("torus") != std::string::npos);
}

TEST_CASE("models show prints the structure equations") {
    auto r = run("models show sl2-geodesic");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dω₀ = ω₊∧ω₋") != std::string::npos);
    CHECK(r.output.find("i_X(ω₀) = 1") != std::string::npos);
}

TEST_CASE("unknown model name exits with the usage code") {
    auto r = run("models show nosuch");
    CHECK(r.exit_code == 2);
    auto r2 = run("report --model nosuch");
    CHECK(r2.exit_code == 2);
    auto r3 = run("bogus-subcommand");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("report on the torus passes and shows the dimension table") {
    auto r = run("report --model torus --n 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
    CHECK(r.output.find("\"h_basic\"") != std::string::npos);
}

TEST_CASE("report on the sl2 models") {
    auto r = run("report --model sl2-geodesic --genus 2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim H^0_C - dim H^1_C = 1") != std::string::npos);
    auto r2 = run("report --model sl2-horocycle-plus --genus 2 --format json");
    CHECK(r2.exit_code == 0);
    // derived H_C dims (2g, 2g, 1) with g = 2
    auto j = nlohmann::json::parse(r2.output);
    CHECK(j["report"]["theorem2"]["h_C"] == nlohmann::json({4, 4, 1}));
}

TEST_CASE("solve-torus round trip") {
    const std::string series = temp_path("series.json");
    {
        std::ofstream out(series);
        out << R"({"real_valued": true, "terms": [
              {"m": 1, "n": -1, "re": 1.0, "im": 0.5},
              {"m": -1, "n": 1, "re": 1.0, "im": -0.5},
              {"m": 3, "n": 2, "re": -0.25, "im": 0.0},
              {"m": -3, "n": -2, "re": -0.25, "im": 0.0}]})";
    }
    const std::string out_path = temp_path("solution.json");
    auto r = run("solve-torus --alpha golden --coeffs " + series + " --out " + out_path);
    CHECK(r.exit_code == 0);
    std::ifstream check(out_path);
    REQUIRE(check.good());
    std::string content((std::istreambuf_iterator<char>(check)), std::istreambuf_iterator<char>());
    CHECK(content.find("\"residual\"") != std::string::npos);
}

TEST_CASE("solve-torus obstruction and resonance exit codes") {
    const std::string series = temp_path("const.json");
    {
        std::ofstream out(series);
        out << R"([{"m": 0, "n": 0, "re": 1.0, "im": 0.0}, {"m": 1, "n": 1, "re": 1.0, "im": 0.0}])";
    }
    CHECK(run("solve-torus --alpha golden --coeffs " + series).exit_code == 1);
    CHECK(run("solve-torus --alpha golden --coeffs " + series + " --subtract-mean").exit_code == 0);

    const std::string resonant = temp_path("resonant.json");
    {
        std::ofstream out(resonant);
        out << R"([{"m": 1, "n": -2, "re": 1.0, "im": 0.0}])";
    }
    CHECK(run("solve-torus --alpha 1/2 --coeffs " + resonant).exit_code == 3);
}

TEST_CASE("verify-all is deterministic for a fixed seed") {
    auto r1 = run("verify-all --seed 5 --samples 20 --series 5 --format json");
    auto r2 = run("verify-all --seed 5 --samples 20 --series 5 --format json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
}

TEST_CASE("fault injection fails with the named check") {
    auto r = run("verify-all --seed 5 --samples 5 --series 2 --inject-fault operator-table");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("operator-table") != std::string::npos);
    auto r2 = run("verify-all --seed 5 --samples 5 --series 2 --inject-fault sequence");
    CHECK(r2.exit_code == 1);
    CHECK(r2.output.find("sequence") != std::string::npos);
}

TEST_CASE("custom model file through the CLI") {
    const std::string model = temp_path("model.json");
    {
        std::ofstream out(model);
        out << R"({"name": "sl2-copy", "generators": ["w0", "wp", "wm"],
                   "d": {"w0": [["1", ["wp", "wm"]]],
                         "wp": [["1", ["w0", "wp"]]],
                         "wm": [["-1", ["w0", "wm"]]]},
                   "iX": {"w0": "1"}, "betti": [1, 4, 4, 1], "genus": 2})";
    }
    auto r = run("report --model-file " + model + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("sl2-copy") != std::string::npos);

    const std::string bad = temp_path("bad_model.json");
    {
        std::ofstream out(bad);
        out << R"({"generators": ["a", "b", "c"],
                   "d": {"a": [["1", ["b", "c"]]], "b": [["1", ["a", "b"]]]}})";
    }
    CHECK(run("report --model-file " + bad).exit_code == 2);
}
