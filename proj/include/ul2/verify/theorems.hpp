#pragma once

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "../broom_spectra.hpp"
#include "../classifier.hpp"
#include "../families.hpp"
#include "../random.hpp"
#include "../unicyclic.hpp"
#include "lemmas.hpp"
#include "report.hpp"

namespace ul2::verify {

struct Probe {
    std::string label;
    UnicyclicDesc desc;
};

namespace detail {

class ProbeSet {
public:
    void add(const std::string& label, const UnicyclicDesc& d) {
        if (d.order() < 21) return;
        if (seen_.insert(desc_key(d)).second) probes_.push_back({label, d});
    }
    void add(const FamilyId& id, const std::vector<int>& p) {
        for (int x : p)
            if (x < 0) return;
        add(format_family_spec(id, p), family_desc(id, p));
    }
    std::vector<Probe>& probes() { return probes_; }

private:
    std::set<std::string> seen_;
    std::vector<Probe> probes_;
};

// fixed-graph families with l0 moved by one
inline UnicyclicDesc with_broom(const FamilyDef& d, int l0, int l1) {
    UnicyclicDesc u = family_desc({d.tag, 0}, {});
    for (int i = 0; i < d.girth; ++i) {
        BroomSpec b;
        RootedTree t = u.trees[i];
        if (as_broom(t, b) && b.at(1) == 1 && t.order() > 4) u.trees[i] = broom_tree({{l0, l1}});
    }
    return u;
}

} // namespace detail

// All family sweeps over [n_min, n_max], every range endpoint +-1, every
// l0 between the stated and derived bound of the disputed rows, and the
// full star-composition sweep for girth 3..5.
inline std::vector<Probe> theorem_probes(int n_min, int n_max) {
    detail::ProbeSet ps;
    for (const auto& d : family_catalog()) {
        FamilySweep sw({d.tag, 0}, n_min, n_max);
        while (auto fi = sw.next()) ps.add(fi->id, fi->params);
    }
    for (const auto& t : range_tables()) {
        FamilyId id{t.family, 0};
        int max_l1 = 0;
        for (const auto& r : t.rows) {
            max_l1 = std::max(max_l1, r.l1);
            for (int l0 : {r.lo - 1, r.lo, r.hi_stated, r.hi_stated + 1, r.hi_derived, r.hi_derived + 1})
                ps.add(id, {l0, r.l1});
            for (int l0 = std::min(r.hi_stated, r.hi_derived); l0 <= std::max(r.hi_stated, r.hi_derived); ++l0)
                ps.add(id, {l0, r.l1});
        }
        for (int l0 = 0; l0 <= 4; ++l0) ps.add(id, {l0, max_l1 + 1});
        for (int l0 = 0; l0 <= 30; ++l0) // first valid n for the next row up
            if (family_order(id, {l0, max_l1 + 1}) >= 21) {
                ps.add(id, {l0, max_l1 + 1});
                break;
            }
    }
    // star-composition items and their neighbours
    for (int k = 14; k <= 19; ++k) ps.add({Family::StarComp, 5}, {2, k, 2, 1, 1});
    for (int k = 14; k <= 18; ++k) ps.add({Family::StarComp, 4}, {2, 2, 2, k});
    for (int k = 13; k <= 17; ++k) ps.add({Family::StarComp, 3}, {3, 4, k});
    for (int k = 12; k <= 14; ++k) ps.add({Family::StarComp, 3}, {4, 4, k});
    for (int k = 6; k <= 8; ++k) ps.add({Family::StarComp, 3}, {7, 7, k});
    // fixed graphs with the free pendant count moved by one
    for (Family f : {Family::H4, Family::H5, Family::H65, Family::B35}) {
        const FamilyDef& d = family_def(f);
        for (int l0 = 10; l0 <= 15; ++l0) ps.add(std::string(d.name) + "~l0=" + std::to_string(l0), detail::with_broom(d, l0, 1));
    }
    for (int g = 3; g <= 5; ++g) {
        FamilySweep sw({Family::StarComp, g}, n_min, n_max);
        while (auto fi = sw.next()) ps.add(fi->id, fi->params);
    }
    return std::move(ps.probes());
}

inline VerifyReport cross_validate_theorems(int n_min, int n_max, const RunOptions& opt) {
    std::vector<Probe> probes = theorem_probes(n_min, n_max);
    std::vector<std::string> notes(probes.size());
    VerifyReport r = detail::run_cases("theorems", probes, opt.jobs, [](const Probe& p, VerifyReport& rep) {
        Verdict v = classify(realize_unicyclic(p.desc));
        std::string fam = v.family ? format_family_spec(*v.family, v.params) : "none";
        std::string what = p.label + " -> " + fam + " structural " + to_string(v.structural) + ", numeric " +
                           to_string(v.numeric) + " (lambda2 " + fmt17(v.lambda2) + ")";
        if (v.disputed) {
            rep.notes.push_back("disputed range: " + what + "; " + v.readings +
                                (v.agreement ? "; agrees with stated reading" : "; numeric follows derived reading"));
            rep.pass();
            return;
        }
        if (!v.agreement) {
            rep.fail({p.label, to_string(v.structural), to_string(v.numeric), v.lambda2 - v.threshold});
            return;
        }
        // strict members sit clearly above t
        if (v.structural == Outcome::Above && v.lambda2 - v.threshold < 1e-6) {
            rep.fail({p.label, "margin >= 1e-6", fmt17(v.lambda2 - v.threshold), v.lambda2 - v.threshold});
            return;
        }
        rep.pass();
    });
    return r;
}

// Graphs of the equality clauses. Parametric families are taken at every
// tuple of their smallest n >= 21 and at n = 24.
inline std::vector<Probe> equality_members() {
    std::vector<Probe> out;
    for (const auto& d : family_catalog()) {
        int e = equality_l2(d.tag);
        if (e < 0) continue;
        FamilyId id{d.tag, 0};
        int n_min = std::max(21, family_order(id, {0, 0, e}));
        for (int n : {n_min, 24}) {
            for (auto& fi : sweep_family(id, n, n))
                if (fi.params[2] >= e) out.push_back({format_family_spec(id, fi.params), family_desc(id, fi.params)});
        }
    }
    out.push_back({"H65", family_desc({Family::H65, 0}, {})});
    out.push_back({"S:g=4,sizes=2,2,2,17", family_desc({Family::StarComp, 4}, {2, 2, 2, 17})});
    for (const auto& t : range_tables()) {
        if (!t.equal_at_hi) continue;
        for (const auto& r : t.rows) {
            FamilyId id{t.family, 0};
            std::vector<int> p{r.hi_derived, r.l1};
            out.push_back({format_family_spec(id, p), family_desc(id, p)});
        }
    }
    return out;
}

inline VerifyReport verify_equality(const RunOptions& opt) {
    std::vector<Probe> ms = equality_members();
    double tol = tolerances().identity, t = threshold();
    return detail::run_cases("equality", ms, opt.jobs, [tol, t](const Probe& p, VerifyReport& r) {
        double l = lambda2(realize_unicyclic(p.desc));
        r.check(std::fabs(l - t) <= tol, {p.label + " n=" + std::to_string(p.desc.order()), "t", fmt17(l), l - t});
    });
}

inline VerifyReport verify_brooms(int samples, const RunOptions& opt) {
    Rng rng(opt.seed ^ 0xB0);
    std::vector<std::pair<Family, std::vector<int>>> cases;
    for (const auto& d : family_catalog()) {
        if (!has_root_deleted_closed_form(d.tag)) continue;
        for (int i = 0; i < samples; ++i)
            cases.push_back({d.tag, {uniform(rng, 0, 20), uniform(rng, 0, 8), uniform(rng, 0, 6)}});
    }
    double tol = tolerances().identity;
    return detail::run_cases("brooms", cases, opt.jobs, [tol](const auto& c, VerifyReport& r) {
        Spectrum cf = broom_root_deleted_spectrum(c.first, c.second);
        Spectrum num = numeric_root_deleted_spectrum(c.first, c.second);
        double d = max_abs_diff(cf.values, num.values);
        r.check(d <= tol, {format_family_spec({c.first, 0}, c.second), "closed form", "numeric", d});
    });
}

} // namespace ul2::verify
