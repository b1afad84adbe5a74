#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include <ul2/verify/suites.hpp>

using namespace ul2;
using namespace ul2::verify;

namespace {

RunOptions quick() {
    RunOptions o;
    o.golden_path = UL2_GOLDEN_PATH;
    o.exhaustive_n = 8;
    o.sample_scale = 0.1;
    return o;
}

std::string dump(const std::vector<VerifyReport>& rs) {
    std::string s;
    for (auto& r : rs) s += to_json(r, false) + "\n";
    return s;
}

} // namespace

TEST(Golden, ParsesValueForms) {
    std::istringstream in("spec,value,mode,location\n"
                          "\"S:g=3,sizes=7,7,7\",0.19422,approx,star-3\n"
                          "\"S:g=4,sizes=2,2,2,17\",t,exact,equality\n"
                          "C:n=11,cyc(11),exact,cycle\n");
    auto es = parse_golden(in);
    ASSERT_EQ(es.size(), 3u);
    EXPECT_EQ(es[0].spec, "S:g=3,sizes=7,7,7");
    EXPECT_DOUBLE_EQ(es[0].value, 0.19422);
    EXPECT_EQ(es[0].mode, GoldenMode::Rounded);
    EXPECT_DOUBLE_EQ(es[1].value, threshold());
    EXPECT_EQ(es[1].mode, GoldenMode::Exact);
    EXPECT_DOUBLE_EQ(es[2].value, cycle_lambda2_closed_form(11));
    std::istringstream bad("spec,value,mode,location\nH5,zzz,approx,x\n");
    EXPECT_THROW(parse_golden(bad), Error);
}

TEST(Golden, ShippedTableReproduces) {
    auto table = load_golden(UL2_GOLDEN_PATH);
    EXPECT_GE(table.size(), 90u);
    VerifyReport r = reproduce_paper_values(table, quick());
    EXPECT_TRUE(r.ok()) << dump({r});
    EXPECT_EQ(r.cases, static_cast<long>(table.size()));
}

TEST(Golden, WrongValueFails) {
    std::istringstream in("spec,value,mode,location\n\"S:g=3,sizes=7,7,7\",0.19500,approx,x\n");
    VerifyReport r = reproduce_paper_values(parse_golden(in), quick());
    EXPECT_FALSE(r.ok());
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_NEAR(r.failures[0].delta, 0.19422225065938706 - 0.195, 1e-9);
}

TEST(Suites, EachSmallSuitePasses) {
    for (const char* s : {"lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6", "equality", "brooms", "enumeration"}) {
        for (auto& r : run_suite(s, quick())) {
            EXPECT_TRUE(r.ok()) << s << "\n" << dump({r});
            EXPECT_GT(r.cases, 0) << s;
        }
    }
}

TEST(Suites, TheoremsAtOneOrderHasNoDisagreement) {
    RunOptions o = quick();
    o.n_min = o.n_max = 22;
    o.jobs = 2;
    auto rs = run_suite("theorems", o);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_TRUE(rs[0].ok()) << dump(rs);
    for (auto& n : rs[0].notes) EXPECT_EQ(n.rfind("disputed range", 0), 0u) << n;
}

TEST(Suites, UnknownSuite) { EXPECT_THROW(run_suite("lemma9", quick()), Error); }

TEST(Suites, DeterministicAcrossJobCounts) {
    RunOptions a = quick(), b = quick();
    b.jobs = 4;
    EXPECT_EQ(dump(run_suite("lemma3", a)), dump(run_suite("lemma3", b)));
    EXPECT_EQ(dump(run_suite("lemma5", a)), dump(run_suite("lemma5", b)));
    RunOptions c = quick();
    c.seed = 1;
    EXPECT_NE(dump(run_suite("lemma3", a)), dump(run_suite("lemma3", c)));
}

TEST(Suites, SmallLemmaExamples) {
    // pendant on C4 lowers lambda2 below 1
    EXPECT_LE(lambda2(star_composition(4, {2, 1, 1, 1})), 1.0 + 1e-9);
    Graph p4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_LE(lambda2(p4), lambda2(separate_edge(p4, 1, 2)) + 1e-9);
    Graph s6 = star_composition(6, {12, 1, 1, 1, 1, 1});
    EXPECT_NEAR(lambda2(s6), 0.17959, 5e-5);
    std::vector<int> sizes{12, 1, 1, 1, 1, 1};
    sizes[0] += 4;
    EXPECT_LT(lambda2(star_composition(6, sizes)), threshold());
}

TEST(Report, JsonShapeAndTiming) {
    VerifyReport r;
    r.suite = "x";
    r.pass();
    r.fail({"in", "a", "b", 0.5});
    r.notes.push_back("n1");
    r.wall_seconds = 1.25;
    auto j = nlohmann::json::parse(to_json(r, false));
    EXPECT_EQ(j["suite"], "x");
    EXPECT_EQ(j["cases"], 2);
    EXPECT_EQ(j["passes"], 1);
    EXPECT_EQ(j["failures"].size(), 1u);
    EXPECT_EQ(j["failures"][0]["input"], "in");
    EXPECT_FALSE(j.contains("wall_seconds"));
    auto t = nlohmann::json::parse(to_json(r, true));
    EXPECT_DOUBLE_EQ(t["wall_seconds"].get<double>(), 1.25);
    EXPECT_FALSE(r.ok());
}

TEST(Report, ParallelForCoversEveryIndex) {
    std::vector<int> hits(1000, 0);
    parallel_for(1000, 8, [&](long i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
}
