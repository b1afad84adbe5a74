#include <gtest/gtest.h>

#include <set>

#include <ul2/canonical.hpp>
#include <ul2/families.hpp>
#include <ul2/laplacian.hpp>

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

FamilyId fam(Family f) { return {f, 0}; }

} // namespace

TEST(Families, CatalogGirths) {
    std::set<std::string> names;
    for (const auto& d : family_catalog()) {
        names.insert(d.name);
        EXPECT_EQ(static_cast<int>(d.slots.size()), d.girth);
        EXPECT_GE(d.girth, 3);
        EXPECT_LE(d.girth, 5);
    }
    EXPECT_EQ(names.size(), family_catalog().size());
    EXPECT_EQ(family_girth(fam(Family::H42)), 5);
    EXPECT_EQ(family_girth(fam(Family::P0)), 4);
    EXPECT_EQ(family_girth(fam(Family::B66)), 3);
    EXPECT_EQ(family_girth({Family::StarComp, 6}), 6);
    EXPECT_EQ(family_name({Family::StarComp, 4}), "S4");
}

TEST(Families, OrderFormula) {
    EXPECT_EQ(family_order(fam(Family::H94), {5, 2, 2}), 21);
    EXPECT_EQ(family_order({Family::StarComp, 4}, {2, 2, 2, 17}), 23);
    EXPECT_EQ(family_order(fam(Family::B4), {0, 0, 0}), 5);
    EXPECT_EQ(family_order(fam(Family::H42), {16, 0, 0}), 21);
    EXPECT_EQ(family_order(fam(Family::B10), {0, 0}), 7);
    EXPECT_EQ(family_order(fam(Family::H5), {}), 22);
    EXPECT_EQ(family_order(fam(Family::H4), {}), 21);
    EXPECT_EQ(family_order(fam(Family::B35), {}), 21);
}

TEST(Families, OrderMatchesRealizedGraph) {
    for (const auto& d : family_catalog()) {
        std::vector<int> p(d.arity, 2);
        FamilyInstance fi = make_family(fam(d.tag), p);
        EXPECT_EQ(fi.n, family_order(fam(d.tag), p)) << d.name;
        EXPECT_EQ(fi.graph.size(), fi.n) << d.name;
        EXPECT_TRUE(is_unicyclic(fi.graph)) << d.name;
        EXPECT_EQ(girth_and_cycle(fi.graph).girth, d.girth) << d.name;
    }
}

TEST(Families, MakeExamples) {
    FamilyInstance s5 = make_family({Family::StarComp, 5}, {2, 15, 2, 1, 1});
    EXPECT_EQ(s5.n, 21);
    FamilyInstance h42 = make_family(fam(Family::H42), {16, 0, 0});
    EXPECT_EQ(h42.n, 21);
    EXPECT_EQ(h42.graph.degree(broom_root(h42.id)), 2 + 16);
    FamilyInstance b66 = make_family(fam(Family::B66), {0, 0, 6});
    EXPECT_EQ(b66.n, 21);
    int root = broom_root(b66.id);
    EXPECT_EQ(b66.graph.degree(root), 2 + 6);
    for (int w : b66.graph.neighbors(root))
        if (w >= 3) { EXPECT_EQ(b66.graph.degree(w), 3); } // cherry centres
}

TEST(Families, ParamErrors) {
    EXPECT_EQ(code_of([] { family_order(fam(Family::H42), {1, 2}); }), ErrorCode::MalformedParams);
    EXPECT_EQ(code_of([] { family_order(fam(Family::G0), {-1, 0}); }), ErrorCode::MalformedParams);
    EXPECT_EQ(code_of([] { family_order({Family::StarComp, 4}, {1, 1, 1}); }), ErrorCode::MalformedParams);
    EXPECT_EQ(code_of([] { family_order({Family::StarComp, 4}, {1, 0, 1, 1}); }), ErrorCode::MalformedParams);
    EXPECT_EQ(code_of([] { family_order({Family::StarComp, 2}, {1, 1}); }), ErrorCode::GirthTooSmall);
}

TEST(FamilySweep, H42AtTwentyOne) {
    auto xs = sweep_family(fam(Family::H42), 21, 21);
    std::set<std::vector<int>> got, want;
    for (auto& fi : xs) {
        got.insert(fi.params);
        EXPECT_EQ(fi.n, 21);
    }
    for (int l2 = 0; 3 * l2 <= 16; ++l2)
        for (int l1 = 0; 2 * l1 + 3 * l2 <= 16; ++l1) want.insert({16 - 2 * l1 - 3 * l2, l1, l2});
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.size(), xs.size());
}

TEST(FamilySweep, B10Range) {
    auto xs = sweep_family(fam(Family::B10), 21, 28);
    size_t want = 0;
    for (int l1 = 0; 2 * l1 <= 21; ++l1)
        for (int l0 = 0; l0 + 2 * l1 <= 21; ++l0)
            if (l0 + 2 * l1 >= 14) ++want;
    EXPECT_EQ(xs.size(), want);
    for (auto& fi : xs) {
        EXPECT_GE(fi.params[0] + 2 * fi.params[1], 14);
        EXPECT_LE(fi.params[0] + 2 * fi.params[1], 21);
    }
}

TEST(FamilySweep, StarCompOnePerClass) {
    auto xs = sweep_family({Family::StarComp, 5}, 21, 24);
    std::set<std::string> forms;
    bool seen[4] = {};
    for (auto& fi : xs) {
        EXPECT_GE(fi.n, 21);
        EXPECT_LE(fi.n, 24);
        if (fi.n <= 12) forms.insert(canonical_form(fi.graph));
        auto& p = fi.params;
        // (2,k,2,1,1) appears in dihedral-minimal orientation (1,1,2,k,2)
        if (p == std::vector<int>{1, 1, 2, p[3], 2} && p[3] >= 15 && p[3] <= 18) seen[p[3] - 15] = true;
    }
    for (bool s : seen) EXPECT_TRUE(s);
    std::set<std::string> keys;
    for (auto& fi : xs) keys.insert(desc_key(decompose_unicyclic(fi.graph)));
    EXPECT_EQ(keys.size(), xs.size());
}

TEST(FamilySweep, FixedGraphOnlyWhenInRange) {
    EXPECT_EQ(sweep_family(fam(Family::H5), 21, 26).size(), 1u);
    EXPECT_EQ(sweep_family(fam(Family::H5), 23, 26).size(), 0u);
}

TEST(FamilySpecText, Parse) {
    FamilySpec a = parse_family_spec("S:g=4,sizes=2,2,2,17");
    EXPECT_EQ(a.id.tag, Family::StarComp);
    EXPECT_EQ(a.id.girth, 4);
    EXPECT_EQ(a.params, (std::vector<int>{2, 2, 2, 17}));
    FamilySpec b = parse_family_spec("H42:l0=1,l2=5");
    EXPECT_EQ(b.id.tag, Family::H42);
    EXPECT_EQ(b.params, (std::vector<int>{1, 0, 5}));
    FamilySpec c = parse_family_spec("C:n=11");
    EXPECT_EQ(c.params, std::vector<int>(11, 1));
    FamilySpec h = parse_family_spec("H5");
    EXPECT_TRUE(h.params.empty());
    EXPECT_EQ(format_family_spec(b.id, b.params), "H42:l0=1,l1=0,l2=5");
    EXPECT_EQ(format_family_spec(a.id, a.params), "S:g=4,sizes=2,2,2,17");
    EXPECT_EQ(parse_family_spec(format_family_spec(b.id, b.params)).params, b.params);
}

TEST(FamilySpecText, Errors) {
    EXPECT_EQ(code_of([] { parse_family_spec("Q7:l0=1"); }), ErrorCode::UnknownFamily);
    EXPECT_EQ(code_of([] { parse_family_spec("H42:l3=1"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_family_spec("G0:l2=1"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_family_spec("H42:l0=x"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_family_spec("S:g=4"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { parse_family_spec("S:g=4,sizes=1,1,1"); }), ErrorCode::MalformedParams);
    EXPECT_EQ(code_of([] { parse_family_spec("C:n=2"); }), ErrorCode::GirthTooSmall);
    EXPECT_EQ(code_of([] { parse_family_spec("H42:l0=-2"); }), ErrorCode::MalformedParams);
}

TEST(Families, FrozenLambda2) {
    // oracle: numpy eigvalsh on independently built adjacency matrices
    struct Case {
        const char* spec;
        double want;
    } cases[] = {
        {"H5", 0.1851191631255654},         {"H4", 0.1873189619673582},
        {"B35", 0.18582457338491737},       {"G0:l0=15,l1=0", 0.20359762808116555},
        {"P0:l0=26,l1=1", 0.18884445022139185}, {"B45:l0=20,l1=1", 0.19089048616670082},
    };
    for (auto& c : cases) EXPECT_NEAR(lambda2(make_family(parse_family_spec(c.spec)).graph), c.want, 1e-10) << c.spec;
}
