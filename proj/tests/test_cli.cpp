#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args) {
    std::string cmd = std::string(DRLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const Run &r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("dr-series symbolic n = 2") {
    auto r = run("dr-series --n 2 --mode symbolic");
    REQUIRE(r.code == 0);
    auto j = parse(r);
    CHECK(j["tool"] == "drlab");
    CHECK(j.contains("version"));
    CHECK(j["config"]["n"] == 2);
    auto entries = j["result"]["entries"];
    REQUIRE(entries.size() == 3);
    CHECK(entries[1]["value"].empty());
    CHECK(entries[2]["value"] == nlohmann::json::parse(R"([{"coefficient": "1", "exponents": {"b0": 2}}])"));
    CHECK(entries[0]["value"].size() == 2);
}

TEST_CASE("dr-series numeric with a common factor") {
    // f = (x - y)(x - 2y)(x - 3y), g = x - y
    auto r = run(R"(dr-series --in '{"f": {"degree": 3, "coefficients": ["-6", "11", "-6", "1"]}, "g": {"degree": 1, "coefficients": ["-1", "1"]}}')");
    REQUIRE(r.code == 0);
    auto j = parse(r);
    CHECK(j["result"]["entries"][3]["value"] == "0");
    CHECK(j["result"]["entries"][1]["value"] == "0");
}

TEST_CASE("dr-series input errors") {
    CHECK(run(R"(dr-series --in '{"f": [1, 2')").code == 2);
    CHECK(run("dr-series --in /nonexistent/forms.json").code == 2);
    CHECK(run(R"(dr-series --in '{"f": {"coefficients": ["1", "2", "3"]}}')").code == 2);
    CHECK(run(R"(dr-series --in '{"f": {"coefficients": ["0", "2", "3"]}, "g": {"coefficients": ["1"]}}')").code == 1);
    CHECK(run("dr-series --n 2").code == 2);
}

TEST_CASE("dr-series from a file") {
    const char *path = "cli_forms.json";
    {
        std::ofstream f(path);
        f << R"({"f": {"degree": 2, "coefficients": ["1", "3", "2"]}, "g": {"degree": 0, "coefficients": ["5"]}})";
    }
    auto r = run(std::string("dr-series --in ") + path + " --format text");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("DR_{2,0} = -1") != std::string::npos);
    CHECK(r.out.find("DR_{2,2} = 25") != std::string::npos);
    std::remove(path);
}

TEST_CASE("verify targets") {
    CHECK(run("verify theorem1 --n 4 --trials 100 --seed 7").code == 0);
    CHECK(run("verify vanishing --n 6").code == 0);
    CHECK(run("verify vanishing --n 3 --mode symbolic").code == 0);
    CHECK(run("verify plucker --n 4 --trials 200").code == 0);
    CHECK(run("verify invariance --n 4 --trials 5").code == 0);
    CHECK(run("verify laurent --n 4 --trials 20").code == 0);
}

TEST_CASE("verify failure path") {
    auto r = run("verify theorem1 --n 3 --trials 3 --seed 1 --inject-fault");
    CHECK(r.code == 1);
    auto j = parse(r);
    CHECK(j["result"]["passed"] == false);
    REQUIRE(j["result"]["failures"].size() > 0);
    CHECK(j["result"]["failures"][0].contains("assignment"));
}

TEST_CASE("usage errors") {
    CHECK(run("verify nonsense --n 3").code == 2);
    CHECK(run("verify theorem1 --n 1").code == 2);
    CHECK(run("verify theorem1 --n 3 --trials 0").code == 2);
    CHECK(run("verify theorem1 --n 3 --mode fancy").code == 2);
    CHECK(run("verify laurent --n 2").code == 2);
    CHECK(run("verify theorem1 --n 9 --mode symbolic").code == 2);
    CHECK(run("independence --n 2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("independence") {
    auto r5 = run("independence --n 5");
    REQUIRE(r5.code == 0);
    auto j5 = parse(r5);
    CHECK(j5["result"]["certificate"]["rank"] == 5);
    CHECK(j5["result"]["verdict"] == "independent");
    CHECK(j5["result"]["jacobian"]["max_rank"] == 5);

    auto r3 = run("independence --n 3");
    REQUIRE(r3.code == 0);
    auto j3 = parse(r3);
    CHECK(j3["result"]["matrix_P"]["method"] == "direct");
    CHECK(j3["result"]["certificate"]["rank"] == 3);

    auto t = run("independence --n 4 --format text");
    CHECK(t.code == 0);
    CHECK(t.out.find("time:") != std::string::npos);
}

TEST_CASE("byte-identical json for identical runs") {
    for (const char *args : {"verify theorem1 --n 3 --trials 10 --seed 5", "independence --n 4 --seed 3",
                             "verify invariance --n 3 --trials 4 --seed 2"}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("output file and budget") {
    const char *path = "cli_out.json";
    auto r = run(std::string("verify plucker --n 3 --trials 10 --out ") + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    auto j = nlohmann::json::parse(ss.str());
    CHECK(j["result"]["passed"] == true);
    std::remove(path);

    CHECK(run("verify vanishing --n 3 --budget 60").code == 0);
    CHECK(run("verify theorem1 --n 8 --trials 100000 --budget 0.2").code == 1);
}
