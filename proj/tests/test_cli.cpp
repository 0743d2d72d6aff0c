#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <string>

#ifndef GLYNDON_CLI_PATH
#define GLYNDON_CLI_PATH "glyndon"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(GLYNDON_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 512> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

nlohmann::json first_json_line(const std::string& out) {
    auto nl = out.find('\n');
    return nlohmann::json::parse(out.substr(0, nl));
}

}  // namespace

TEST_CASE("is-lyndon end to end", "[cli]") {
    auto r = run_cli("is-lyndon 01000010 --order alternating --alphabet 0,1");
    CHECK(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j.at("is_gl") == true);
    CHECK(j.at("word") == "01000010");

    r = run_cli("is-lyndon 0011 --order alternating --alphabet 0,1");
    CHECK(r.exit_code == 1);
    j = first_json_line(r.out);
    CHECK(j.at("is_gl") == false);
    CHECK(j.contains("witness_rotation"));

    r = run_cli("\"is-lyndon\" \"01000010(0)^w\" --order alternating");
    CHECK(r.exit_code == 1);
    j = first_json_line(r.out);
    CHECK(j.at("is_gl") == false);
}

TEST_CASE("compare end to end", "[cli]") {
    auto r = run_cli("compare 0 1 --order opposite --alphabet 0,1");
    CHECK(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j.at("ordering") == "GT");
    CHECK(j.at("decision_index") == 1);

    r = run_cli("compare 0 \"(01)^w\" --order standard");
    j = first_json_line(r.out);
    CHECK(j.at("ordering") == "LT");
    CHECK(j.at("decision_index") == 0);

    r = run_cli("compare \"(01)^w\" \"0(10)^w\" --order standard");
    j = first_json_line(r.out);
    CHECK(j.at("ordering") == "EQ");
}

TEST_CASE("factorize end to end", "[cli]") {
    auto r = run_cli("factorize banana --order standard --alphabet a,b,n");
    CHECK(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j.at("factors") == nlohmann::json({"b", "an", "an", "a"}));

    r = run_cli("factorize \"(01)^w\" --order alternating --alphabet 0,1");
    CHECK(r.exit_code == 0);
    j = first_json_line(r.out);
    CHECK(j.at("head") == nlohmann::json::array());
    CHECK(j.at("tail").at("kind") == "periodic");
    CHECK(j.at("tail").at("value") == "01");

    r = run_cli("factorize \"010000100(1)^w\" --order alternating");
    j = first_json_line(r.out);
    CHECK(j.at("tail").at("kind") == "infinite");
    CHECK(j.at("head") == nlohmann::json::array());

    r = run_cli("factorize \"1(0)^w\" --order standard");
    j = first_json_line(r.out);
    CHECK(j.at("head") == nlohmann::json({"1"}));
    CHECK(j.at("tail").at("kind") == "periodic");
    CHECK(j.at("tail").at("value") == "0");
}

TEST_CASE("census and factorize-stream end to end", "[cli]") {
    auto r = run_cli("census \"(0)^w\" --budget 64 --order standard");
    CHECK(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j.at("gl_prefix_lengths") == nlohmann::json({1}));
    CHECK(j.at("verdict") == "LIKELY_NOT_GL");

    r = run_cli("census thue_morse --budget 256 --order standard");
    j = first_json_line(r.out);
    CHECK(j.at("gl_prefix_lengths") == nlohmann::json({1, 2, 3}));

    r = run_cli("factorize-stream fibonacci_word --budget 1024 --order standard");
    CHECK(r.exit_code == 0);
    j = first_json_line(r.out);
    CHECK(j.at("tail").at("kind") == "open");
    CHECK(j.at("tail").at("residual_start").get<std::size_t>() >= 1);
}

TEST_CASE("check and conjecture end to end", "[cli]") {
    auto r = run_cli("check c1 --trials 100 --seed 5");
    CHECK(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j.at("trials") == 100);
    CHECK(j.at("failed") == 0);

    r = run_cli("check h --trials 50");
    CHECK(r.exit_code == 0);

    r = run_cli("conjecture 01 --max-period 4 --max-preperiod 6 --order standard");
    CHECK(r.exit_code == 0);
    j = first_json_line(r.out);
    CHECK(j.at("witness") == "0(1)^w");
}

TEST_CASE("exit codes for malformed input", "[cli]") {
    CHECK(run_cli("is-lyndon \"(01\" --order standard").exit_code == 2);       // usage
    CHECK(run_cli("is-lyndon 012 --order standard").exit_code == 3);           // domain
    CHECK(run_cli("compare 0 1 --order sideways").exit_code == 2);             // usage
    CHECK(run_cli("census nosuchstream --budget 8").exit_code == 2);           // usage
    CHECK(run_cli("check nosuchsuite --trials 5").exit_code == 2);             // usage
    CHECK(run_cli("conjecture 10 --order standard").exit_code == 2);           // not GL
    CHECK(run_cli("factorize \"\" --order standard").exit_code == 2);          // empty word
}

TEST_CASE("order schedule files work end to end", "[cli]") {
    std::string path = "/tmp/glyndon_test_schedule.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs(R"({"alphabet":["0","1"],"preperiod":[],"period":[["0","1"],["1","0"]]})", f);
        fclose(f);
    }
    auto r = run_cli("compare 01 10 --order @" + path);
    CHECK(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j.at("ordering") == "LT");  // this file is the alternating order
    CHECK(j.at("decision_index") == 1);

    auto morphism = std::string("/tmp/glyndon_test_morphism.json");
    {
        FILE* f = fopen(morphism.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs(R"({"seed":"0","rules":{"0":"01","1":"0"}})", f);
        fclose(f);
    }
    r = run_cli("census @" + morphism + " --budget 32 --order standard");
    CHECK(r.exit_code == 0);
}
