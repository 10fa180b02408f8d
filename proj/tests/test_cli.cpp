#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

// Scratch files are per process; ctest runs the cases in parallel.
std::string scratch(const std::string& name) { return "cli_" + std::to_string(::getpid()) + "_" + name; }

struct Run {
    int status;
    std::string out;
};

std::string cli() {
    if (const char* p = std::getenv("COMPOSITAE_CLI")) return p;
#ifdef COMPOSITAE_CLI
    return COMPOSITAE_CLI;
#else
    return "compositae";
#endif
}

// stdout only; stderr goes to a side file.
Run run(const std::string& args, const std::string& env = "", const std::string& stdin_file = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli() + "' " + args + " 2>" + scratch("stderr.txt");
    if (!stdin_file.empty()) cmd += " <'" + stdin_file + "'";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int raw = ::pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string last_stderr() {
    std::ifstream in(scratch("stderr.txt"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string bell_value(const nlohmann::json& doc, int n, int k) {
    for (const auto& e : doc["records"])
        if (e["n"] == n && e["k"] == k) return e["value"];
    return "<missing>";
}

}  // namespace

TEST(Cli, SymbolicBellRows) {
    const auto r = run("bell --expr generic --symbolic --n 6");
    ASSERT_EQ(r.status, 0) << last_stderr();
    EXPECT_NE(r.out.find("row 3: y3 ; 3*y1*y2 ; y1^3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("6*y1*y5 + 15*y2*y4 + 10*y3^2"), std::string::npos);
}

TEST(Cli, BellOfSineAtZero) {
    const auto r = run("bell --expr sin --n 5 --at 0 --format json");
    ASSERT_EQ(r.status, 0) << last_stderr();
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema_version"], 1);
    EXPECT_EQ(doc["exact"], true);
    EXPECT_EQ(bell_value(doc, 4, 2), "-4");
    EXPECT_EQ(bell_value(doc, 5, 1), "1");
    EXPECT_EQ(bell_value(doc, 3, 1), "-1");
}

TEST(Cli, CompositaOfInverseSquare) {
    const auto r = run("composita --expr 'inv(pow:2)' --n 3 --at 4 --format json");
    ASSERT_EQ(r.status, 0) << last_stderr();
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(bell_value(doc, 1, 1), "1/4");
    EXPECT_EQ(bell_value(doc, 2, 1), "-1/64");
}

TEST(Cli, DecimalPointIsExact) {
    const auto r = run("composita --expr sin --n 2 --at 0.25 --format json");
    ASSERT_EQ(r.status, 0) << last_stderr();
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["at"], "1/4");
    EXPECT_EQ(doc["exact"], false);
}

TEST(Cli, Derivatives) {
    auto r = run("derivative --outer exp --inner sin --n 4 --at 0");
    ASSERT_EQ(r.status, 0) << last_stderr();
    EXPECT_NE(r.out.find(": -3"), std::string::npos) << r.out;
    r = run("derivative --outer pow:3 --inner sin --n 5 --at 0 --format json");
    ASSERT_EQ(r.status, 0) << last_stderr();
    EXPECT_EQ(nlohmann::json::parse(r.out)["records"][0]["value"], "-60");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("bell --n 3").status, 2);
    EXPECT_EQ(run("bell --expr cosh").status, 2);
    EXPECT_NE(last_stderr().find("parse error"), std::string::npos);
    EXPECT_EQ(run("bell --expr 'sum(ln'").status, 2);
    EXPECT_EQ(run("bell --expr ln --n 0").status, 2);
    EXPECT_EQ(run("bell --expr ln --n 61").status, 2);
    EXPECT_EQ(run("bell --expr ln --at 1/0").status, 2);
    EXPECT_EQ(run("bell --expr ln --format xml").status, 2);
    EXPECT_EQ(run("verify --suite nothing").status, 2);
    EXPECT_EQ(run("derivative --outer exp --n 21").status, 2);
    EXPECT_EQ(run("bell --expr ln --at -1").status, 1);
    EXPECT_NE(last_stderr().find("domain error"), std::string::npos);
    EXPECT_EQ(run("composita --expr 'inv(pow:2)' --at 0").status, 1);
    EXPECT_NE(last_stderr().find("not invertible"), std::string::npos);
    EXPECT_EQ(run("bell --expr ln --at 2").status, 0);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, EnvironmentFormatAndRenderRoundTrip) {
    const std::string args = "composita --expr 'comp(recip, ln)' --n 4 --at 3";
    const auto text = run(args);
    ASSERT_EQ(text.status, 0) << last_stderr();
    const auto json = run(args, "COMPOSITAE_FORMAT=json");
    ASSERT_EQ(json.status, 0);
    EXPECT_TRUE(nlohmann::json::parse(json.out).is_object());
    {
        std::ofstream f(scratch("doc.json"));
        f << json.out;
    }
    const auto rendered = run("render", "", scratch("doc.json"));
    ASSERT_EQ(rendered.status, 0) << last_stderr();
    EXPECT_EQ(rendered.out, text.out);
    // explicit flag beats the environment
    EXPECT_EQ(run(args + " --format text", "COMPOSITAE_FORMAT=json").out, text.out);
    EXPECT_EQ(run(args, "COMPOSITAE_FORMAT=yaml").status, 2);
}

TEST(Cli, VerifyWritesCsv) {
    const std::string path = scratch("verify.csv");
    std::filesystem::remove(path);
    const auto r = run("verify --suite all --seed 3 --csv " + path);
    EXPECT_EQ(r.status, 0) << last_stderr();
    EXPECT_NE(r.out.find(" records, "), std::string::npos);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.rfind("suite,entry,", 0), 0u);
    const auto j = run("verify --suite paper-tables --format json");
    ASSERT_EQ(j.status, 0);
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["summary"]["failed"], 0);
}
