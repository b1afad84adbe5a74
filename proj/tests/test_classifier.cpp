#include <gtest/gtest.h>

#include <json.hpp>

#include <ul2/classifier.hpp>
#include <ul2/random.hpp>

using namespace ul2;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no ul2::Error thrown";
    return ErrorCode::Parse;
}

Graph spec(const std::string& s) { return make_family(parse_family_spec(s)).graph; }

// C5 with a path of length 16 hanging off vertex 0: depth 16, n=21
Graph long_tail() { return realize_unicyclic({5, {path_tree(17), bare_root(), bare_root(), bare_root(), bare_root()}}); }

} // namespace

TEST(Classify, EqualityMember) {
    Verdict v = classify(spec("S:g=4,sizes=2,2,2,17"));
    EXPECT_EQ(v.outcome, Outcome::Equal);
    EXPECT_EQ(v.structural, Outcome::Equal);
    EXPECT_TRUE(v.agreement);
    EXPECT_NEAR(v.lambda2, threshold(), 1e-9);
}

TEST(Classify, AboveStarItem) {
    Verdict v = classify(spec("S:g=3,sizes=4,4,13"));
    EXPECT_EQ(v.outcome, Outcome::Above);
    EXPECT_TRUE(v.agreement);
    EXPECT_NEAR(v.lambda2, 0.18484, 5e-5);
}

TEST(Classify, BelowJustOutsideRange) {
    Verdict v = classify(spec("S:g=5,sizes=2,19,2,1,1"));
    EXPECT_EQ(v.outcome, Outcome::Below);
    EXPECT_TRUE(v.agreement);
    EXPECT_NEAR(v.lambda2, 0.18309, 5e-5);
}

TEST(Classify, GirthSixIsBelow) {
    Graph g = star_composition(6, {16, 1, 1, 1, 1, 1});
    EXPECT_FALSE(girth_prefilter(g));
    Verdict v = classify(g);
    EXPECT_EQ(v.outcome, Outcome::Below);
    EXPECT_EQ(v.reason, "girth > 5");
    EXPECT_LT(v.lambda2, threshold());
    Graph c21 = cycle_graph(21);
    EXPECT_FALSE(girth_prefilter(c21));
    EXPECT_LT(lambda2(c21), threshold());
}

TEST(Classify, Preconditions) {
    EXPECT_EQ(code_of([] { classify(cycle_graph(20)); }), ErrorCode::Precondition);
    EXPECT_EQ(code_of([] { classify(graph_from_edges(21, [] {
                  std::vector<Edge> es;
                  for (int i = 0; i < 20; ++i) es.emplace_back(i, i + 1);
                  return es;
              }())); }),
              ErrorCode::NotUnicyclic);
}

TEST(MatchStructure, Examples) {
    auto m = match_structure(spec("S:g=5,sizes=2,16,2,1,1"));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->id.tag, Family::StarComp);
    EXPECT_EQ(m->id.girth, 5);
    EXPECT_EQ(m->params, (std::vector<int>{2, 16, 2, 1, 1}));
    EXPECT_TRUE(m->item.holds);

    auto h = match_structure(spec("H42:l0=1,l1=0,l2=5"));
    ASSERT_TRUE(h);
    EXPECT_EQ(h->id.tag, Family::H42);
    EXPECT_EQ(h->params, (std::vector<int>{1, 0, 5}));
    EXPECT_TRUE(h->item.equal);

    EXPECT_FALSE(match_structure(long_tail()));
    Verdict v = classify(long_tail());
    EXPECT_EQ(v.reason, "no catalogued pattern");
    EXPECT_EQ(v.outcome, Outcome::Below);
}

TEST(MatchStructure, InvariantUnderRelabeling) {
    Rng rng(5);
    Graph g = spec("E0:l0=10,l1=3");
    auto base = match_structure(g);
    ASSERT_TRUE(base);
    for (int i = 0; i < 20; ++i) {
        auto m = match_structure(shuffle_labels(rng, g));
        ASSERT_TRUE(m);
        EXPECT_EQ(m->id, base->id);
        EXPECT_EQ(m->params, base->params);
    }
}

TEST(Classify, RangeEndpoints) {
    // G0 with l1=0 holds for 15 <= l0 <= 29 and is strict
    EXPECT_EQ(classify(spec("G0:l0=15,l1=0")).outcome, Outcome::Above);
    EXPECT_EQ(classify(spec("G0:l0=29,l1=0")).outcome, Outcome::Above);
    EXPECT_EQ(classify(spec("G0:l0=30,l1=0")).outcome, Outcome::Below);
    // E0 closes with equality at the top of each row
    EXPECT_EQ(classify(spec("E0:l0=25,l1=0")).outcome, Outcome::Equal);
    EXPECT_EQ(classify(spec("E0:l0=26,l1=0")).outcome, Outcome::Below);
}

TEST(Classify, DisputedRowsCarryBothReadings) {
    Verdict p = classify(spec("P0:l0=30,l1=1"));
    EXPECT_TRUE(p.disputed);
    EXPECT_NE(p.readings.find("stated 13<=l0<=26"), std::string::npos);
    EXPECT_NE(p.readings.find("derived 13<=l0<=36"), std::string::npos);
    EXPECT_EQ(p.numeric, Outcome::Above);
    EXPECT_EQ(classify(spec("P0:l0=36,l1=1")).numeric, Outcome::Equal);

    Verdict b = classify(spec("B45:l0=20,l1=1"));
    EXPECT_TRUE(b.disputed);
    EXPECT_EQ(b.structural, Outcome::Below);
    EXPECT_EQ(b.numeric, Outcome::Above);
    EXPECT_EQ(b.outcome, Outcome::Above);
    EXPECT_FALSE(classify(spec("B45:l0=18,l1=1")).disputed);
}

TEST(Classify, FixedGraphs) {
    EXPECT_EQ(classify(spec("H5")).outcome, Outcome::Above);
    EXPECT_EQ(classify(spec("H4")).outcome, Outcome::Above);
    EXPECT_EQ(classify(spec("B35")).outcome, Outcome::Above);
    EXPECT_EQ(classify(spec("H65")).outcome, Outcome::Equal);
}

TEST(Classify, NumericOutcome) {
    double t = threshold();
    EXPECT_EQ(numeric_outcome(t), Outcome::Equal);
    EXPECT_EQ(numeric_outcome(t + 5e-10), Outcome::Equal);
    EXPECT_EQ(numeric_outcome(t + 2e-9), Outcome::Above);
    EXPECT_EQ(numeric_outcome(t - 2e-9), Outcome::Below);
    EXPECT_LT(t, cycle_lambda2_closed_form(5));
    EXPECT_GT(t, 0.15875);
}

TEST(Classify, JsonShape) {
    Verdict v = classify(spec("S:g=3,sizes=7,7,7"));
    auto j = nlohmann::json::parse(to_json(v));
    EXPECT_EQ(j["outcome"], "Above");
    EXPECT_EQ(j["family"], "S3");
    EXPECT_EQ(j["params"], nlohmann::json::array({7, 7, 7}));
    EXPECT_TRUE(j["agreement"].get<bool>());
    EXPECT_NEAR(j["lambda2"].get<double>(), 0.19422225065938706, 1e-12);
    EXPECT_FALSE(j.contains("readings"));
    auto none = nlohmann::json::parse(to_json(classify(long_tail())));
    EXPECT_TRUE(none["family"].is_null());
}

TEST(Classify, RandomAgreementOutsideDisputes) {
    Rng rng(21);
    for (int i = 0; i < 150; ++i) {
        Graph g = realize_unicyclic(random_unicyclic_desc(rng, 21, 26, 3, 7));
        Verdict v = classify(g);
        if (!v.disputed) EXPECT_TRUE(v.agreement) << to_text(g);
    }
}
