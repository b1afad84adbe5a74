#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

// stdout only; stderr is discarded
Result run(const std::string& args, const std::string& stdin_file = "") {
    std::string cmd = std::string(UL2_CLI_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_file.empty()) cmd += " < " + stdin_file;
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
    std::vector<nlohmann::json> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

} // namespace

TEST(Cli, Lambda2Family) {
    Result r = run("--format json lambda2 --family S:g=3,sizes=7,7,7");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["lambda2"].get<double>(), 0.19422, 5e-5);
    EXPECT_EQ(j["verdict"], "ABOVE");
    Result e = run("lambda2 --family S:g=4,sizes=2,2,2,17");
    ASSERT_EQ(e.code, 0);
    EXPECT_NE(e.out.find("EQUAL"), std::string::npos);
}

TEST(Cli, Lambda2FileAndStdin) {
    std::string c4 = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    Result r = run("--format json lambda2 --input " + c4);
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(nlohmann::json::parse(r.out)["lambda2"].get<double>(), 1.0, 1e-12);
    Result s = run("--format json lambda2 --input -", c4);
    EXPECT_EQ(s.out, r.out);
}

TEST(Cli, SpectrumCsv) {
    std::string k2 = temp_file("k2.txt", "2 1\n0 1\n");
    Result r = run("--format csv spectrum --input " + k2);
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    double a, b;
    in >> a >> b;
    EXPECT_NEAR(a, 0, 1e-12);
    EXPECT_NEAR(b, 2, 1e-12);
}

TEST(Cli, SpectrumContainsExpectedValues) {
    Result r = run("--format json spectrum --family H42:l0=1,l1=0,l2=5");
    ASSERT_EQ(r.code, 0);
    auto vals = nlohmann::json::parse(r.out)["spectrum"].get<std::vector<double>>();
    EXPECT_EQ(vals.size(), 21u);
    auto has = [&](double x) {
        for (double v : vals)
            if (std::fabs(v - x) <= 1e-9) return true;
        return false;
    };
    EXPECT_TRUE(has(1 - std::sqrt(6.0) / 3));
    EXPECT_TRUE(has(1 + std::sqrt(6.0) / 3));
}

TEST(Cli, Classify) {
    Result r = run("--format json classify --family S:g=5,sizes=2,16,2,1,1");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["outcome"], "Above");
    EXPECT_EQ(j["family"], "S5");
    Result g6 = run("--format json classify --family S:g=6,sizes=16,1,1,1,1,1");
    ASSERT_EQ(g6.code, 0);
    auto k = nlohmann::json::parse(g6.out);
    EXPECT_EQ(k["outcome"], "Below");
    EXPECT_EQ(k["reason"], "girth > 5");
    EXPECT_EQ(run("classify --family C:n=20").code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("lambda2 --family Q9").code, 2);
    EXPECT_EQ(run("lambda2").code, 2);
    EXPECT_EQ(run("--format xml families").code, 2);
    EXPECT_EQ(run("verify nosuch").code, 2);
    std::string loop = temp_file("loop.txt", "2 1\n0 0\n");
    EXPECT_EQ(run("lambda2 --input " + loop).code, 2);
    // one wrong golden value is a verification failure, not a usage error
    std::string bad = temp_file("bad.csv", "spec,value,mode,location\nC:n=11,0.2,approx,x\n");
    EXPECT_EQ(run("verify golden --golden " + bad).code, 1);
}

TEST(Cli, VerifyJsonAndDeterminism) {
    Result a = run("--seed 7 verify lemma3 --json");
    ASSERT_EQ(a.code, 0);
    auto js = json_lines(a.out);
    ASSERT_EQ(js.size(), 1u);
    EXPECT_EQ(js[0]["suite"], "lemma3");
    EXPECT_TRUE(js[0]["ok"].get<bool>());
    EXPECT_FALSE(js[0].contains("wall_seconds"));
    EXPECT_EQ(run("--seed 7 --jobs 4 verify lemma3 --json").out, a.out);
    EXPECT_EQ(run("--seed 7 verify lemma3 --json").out, a.out);
    EXPECT_NE(run("--seed 8 verify lemma3 --json").out, a.out);
    Result t = run("--seed 7 verify lemma3 --json --timing");
    EXPECT_TRUE(json_lines(t.out)[0].contains("wall_seconds"));
}

TEST(Cli, SeedFromEnvironment) {
    Result a = run("--seed 7 verify lemma2 --json");
    std::string cmd = "UL2_SEED=7 " + std::string(UL2_CLI_PATH) + " verify lemma2 --json";
    FILE* p = popen(cmd.c_str(), "r");
    ASSERT_TRUE(p);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    EXPECT_EQ(pclose(p), 0);
    EXPECT_EQ(out, a.out);
}

TEST(Cli, VerifyGoldenAndLemma5) {
    EXPECT_EQ(run("verify golden").code, 0);
    EXPECT_EQ(run("verify lemma5 --exhaustive-n 10").code, 0);
    EXPECT_EQ(run("verify lemma5 --exhaustive-n 13").code, 2);
}

TEST(Cli, Enumerate) {
    Result r = run("enumerate n=4");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4 4\n0 1\n0 2\n0 3\n1 2\n\n4 4\n0 1\n0 3\n1 2\n2 3\n");
    Result c = run("enumerate n=8 girth=5 --count");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "10\n"); // labeled brute force gives 10 classes
    EXPECT_EQ(run("enumerate 7 --count").out, "33\n");
    EXPECT_EQ(run("enumerate n=15").code, 2);
    EXPECT_EQ(run("--enum-bound 14 enumerate n=13 --girth 13 --count").out, "1\n");
}

TEST(Cli, FamiliesListing) {
    Result r = run("--format json families");
    ASSERT_EQ(r.code, 0);
    auto js = json_lines(r.out);
    EXPECT_EQ(js.size(), 23u);
    EXPECT_EQ(js[1]["name"], "G0");
    EXPECT_EQ(js[1]["girth"], 5);
}
