#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(DEFSET_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST(Cli, ConstructPaley) {
    const auto r = run("--p 7 --m 1 construct --family paley");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("{1,2,4}"), std::string::npos) << r.out;
}

TEST(Cli, ConstructJson) {
    const auto r = run("--json construct --family hkm:1");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["size"], 4);
    EXPECT_EQ(j["elements"].size(), 4u);
    const auto s = run("--m 5 construct --family maschietti:segre");
    EXPECT_NE(s.out.find("size 15"), std::string::npos);
}

TEST(Cli, CodeExpect) {
    const auto r = run("code --family hkm:1 --expect thm-HKMcodes");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("1+12z^2+8z^3+6z^4"), std::string::npos);
    const auto g = run("--m 7 code --family maschietti:glynn2 --expect none");
    EXPECT_EQ(g.status, 0);
    EXPECT_NE(g.out.find("[63,7,28]"), std::string::npos);
    EXPECT_NE(g.out.find("1+36z^28+63z^32+28z^36"), std::string::npos);
    const auto q = run("--p 3 --m 2 code --family paley --expect thm-part1");
    EXPECT_EQ(q.status, 0);
    EXPECT_NE(q.out.find("[4,2,2]"), std::string::npos);
    EXPECT_NE(q.out.find("1+4z^2+4z^4"), std::string::npos);
}

TEST(Cli, CodeJsonEmbedsEnumerator) {
    const auto r = run("--json code --family hkm:1");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j["enumerator"].dump(),
              R"({"p":3,"m":3,"n":4,"k":3,"weights":[{"w":0,"A":1},{"w":2,"A":12},{"w":3,"A":8},{"w":4,"A":6}]})");
}

TEST(Cli, MismatchExitsTwo) {
    // right length for the skew-set prediction at q = 27, but not a one-weight code
    const auto r = run("--p 3 --m 3 code --family custom:1,2,3,4,5,6,7,8,9,10,11,12,13 --expect thm-part2");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("fail"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("frobnicate").status, 1);
    EXPECT_EQ(run("construct").status, 1);
    EXPECT_EQ(run("--p 4 --m 1 construct --family paley").status, 1);
    EXPECT_EQ(run("code --family hkm:1 --expect thm-nope").status, 1);
    EXPECT_EQ(run("--m 6 walsh --func 1@").status, 1);
    EXPECT_EQ(run("verify-paper --case no-such-case").status, 1);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Walsh) {
    const auto r = run("--m 5 walsh --func 1@3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("0:16"), std::string::npos);
    EXPECT_NE(r.out.find("Semibent"), std::string::npos);
    const auto a = run("--m 4 walsh --func 1@1");
    EXPECT_NE(a.out.find("Other"), std::string::npos);
    const auto j = nlohmann::json::parse(run("--json --m 6 walsh --func 1@5").out);
    EXPECT_EQ(j["rank"], 4);
}

TEST(Cli, AnalyzeDesign) {
    const auto r = run("analyze-design --family hkm:1 --group cyclic:13");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("DifferenceSet(13,4,1)"), std::string::npos) << r.out;
    const auto a = run("--p 13 --m 1 analyze-design --family paley");
    EXPECT_NE(a.out.find("AlmostDifferenceSet(13,6,2,6)"), std::string::npos);
}

TEST(Cli, ExportGen) {
    const auto r = run("--p 2 --m 3 export-gen --family custom:1,2,4");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "2 3 3\n1 0 0\n0 0 1\n0 1 0\n");
}

TEST(Cli, VerifySingleCase) {
    const auto r = run("verify-paper --case glynn2-m9");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("pass"), std::string::npos);
    const auto j = nlohmann::json::parse(run("--json verify-paper --case hkm-h3").out);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["cases"][0]["case_id"], "hkm-h3");
}

TEST(Cli, Deterministic) {
    const auto a = run("--json code --family hkm:2");
    const auto b = run("--json code --family hkm:2");
    EXPECT_EQ(a.out, b.out);
}
