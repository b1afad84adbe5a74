#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "families.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "laplacian.hpp"
#include "rooted_tree.hpp"
#include "unicyclic.hpp"

namespace ul2 {

enum class Outcome { Above, Equal, Below };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::Above: return "Above";
    case Outcome::Equal: return "Equal";
    case Outcome::Below: return "Below";
    }
    return "?";
}

// l0 range for one value of l1. hi_derived differs from hi_stated only on
// the two rows whose printed bound disagrees with the case analysis.
struct RangeRow {
    int l1, lo, hi_stated, hi_derived;
};

struct RangeTable {
    Family family;
    std::vector<RangeRow> rows;
    bool equal_at_hi;
};

inline const std::vector<RangeTable>& range_tables() {
    static const std::vector<RangeTable> t = {
        {Family::G0, {{7, 1, 1, 1}, {6, 3, 5, 5}, {5, 5, 9, 9}, {4, 7, 13, 13}, {3, 9, 17, 17},
                      {2, 11, 21, 21}, {1, 13, 25, 25}, {0, 15, 29, 29}}, false},
        {Family::E0, {{5, 5, 5, 5}, {4, 7, 9, 9}, {3, 9, 13, 13}, {2, 11, 17, 17}, {1, 13, 21, 21},
                      {0, 15, 25, 25}}, true},
        {Family::F0, {{5, 4, 4, 4}, {4, 6, 8, 8}, {3, 8, 12, 12}, {2, 10, 16, 16}, {1, 12, 20, 20},
                      {0, 14, 24, 24}}, true},
        {Family::D0, {{1, 11, 12, 12}, {0, 13, 16, 16}}, true},
        {Family::P0, {{10, 0, 0, 0}, {9, 0, 4, 4}, {8, 0, 8, 8}, {7, 1, 12, 12}, {6, 3, 16, 16},
                      {5, 5, 20, 20}, {4, 7, 24, 24}, {3, 9, 28, 28}, {2, 11, 32, 32}, {1, 13, 26, 36},
                      {0, 15, 40, 40}}, true},
        {Family::B10, {{3, 8, 9, 9}, {2, 10, 13, 13}, {1, 12, 17, 17}, {0, 14, 21, 21}}, false},
        {Family::C2, {{7, 0, 2, 2}, {6, 2, 6, 6}, {5, 4, 10, 10}, {4, 6, 14, 14}, {3, 8, 18, 18},
                      {2, 10, 22, 22}, {1, 12, 26, 26}, {0, 14, 30, 30}}, false},
        {Family::B45, {{8, 0, 1, 1}, {7, 1, 5, 5}, {6, 3, 9, 9}, {5, 5, 13, 13}, {4, 7, 17, 17},
                       {3, 9, 21, 21}, {2, 11, 25, 25}, {1, 13, 19, 29}, {0, 15, 33, 33}}, false},
    };
    return t;
}

inline const RangeTable* range_table(Family f) {
    for (const auto& t : range_tables())
        if (t.family == f) return &t;
    return nullptr;
}

// equality threshold on l2 for the three-parameter broom families
inline int equality_l2(Family f) {
    switch (f) {
    case Family::H94: case Family::A8: case Family::B7: return 1;
    case Family::H42: case Family::A11: case Family::A35: case Family::B4:
    case Family::B42: case Family::B44: case Family::B66: return 2;
    default: return -1;
    }
}

struct ItemCheck {
    bool holds = false;
    bool equal = false;
    bool disputed = false; // l0 lies between the stated and derived bounds
    std::string readings;
};

struct Pattern {
    FamilyId id;
    std::vector<Slot> slots;
    std::function<ItemCheck(const std::vector<int>&)> check;
    // maps matched broom counts / star order to the reported params
    std::function<std::vector<int>(const std::vector<int>&)> params;
};

namespace detail {

inline ItemCheck check_range(const RangeTable& t, const std::vector<int>& p) {
    ItemCheck c;
    int l0 = p[0], l1 = p[1];
    for (const auto& r : t.rows) {
        if (r.l1 != l1) continue;
        c.holds = l0 >= r.lo && l0 <= r.hi_stated;
        c.equal = t.equal_at_hi && l0 == r.hi_stated;
        if (r.hi_stated != r.hi_derived) {
            int a = std::min(r.hi_stated, r.hi_derived), b = std::max(r.hi_stated, r.hi_derived);
            c.disputed = l0 >= a && l0 <= b;
            c.readings = "l1=" + std::to_string(l1) + ": stated " + std::to_string(r.lo) + "<=l0<=" +
                         std::to_string(r.hi_stated) + ", derived " + std::to_string(r.lo) + "<=l0<=" +
                         std::to_string(r.hi_derived);
        }
    }
    return c;
}

inline std::vector<Pattern> make_patterns() {
    std::vector<Pattern> ps;
    auto ident = [](const std::vector<int>& p) { return p; };
    for (const auto& d : family_catalog()) {
        Pattern p{{d.tag, 0}, d.slots, {}, ident};
        if (const RangeTable* t = range_table(d.tag)) {
            p.check = [t](const std::vector<int>& l) { return check_range(*t, l); };
        } else if (int e = equality_l2(d.tag); e >= 0) {
            p.check = [e](const std::vector<int>& l) { return ItemCheck{true, l[2] >= e, false, {}}; };
        } else {
            bool eq = d.tag == Family::H65;
            p.check = [eq](const std::vector<int>&) { return ItemCheck{true, eq, false, {}}; };
        }
        ps.push_back(std::move(p));
    }
    auto S = fixed_star;
    Slot var{Slot::StarVar, {}};
    auto star_item = [&](int g, std::vector<Slot> slots, int lo, int hi, int eq) {
        std::vector<int> shape;
        for (auto& s : slots) shape.push_back(s.kind == Slot::StarVar ? 0 : tree_from_code(s.code).order());
        Pattern p{{Family::StarComp, g}, std::move(slots),
                  [lo, hi, eq](const std::vector<int>& k) {
                      return ItemCheck{k[0] >= lo && k[0] <= hi, k[0] == eq, false, {}};
                  },
                  [shape](const std::vector<int>& k) {
                      std::vector<int> s = shape;
                      for (int& x : s)
                          if (x == 0) x = k[0];
                      return s;
                  }};
        ps.push_back(std::move(p));
    };
    star_item(5, {S(2), var, S(2), S(1), S(1)}, 15, 18, -1);
    star_item(4, {S(2), S(2), S(2), var}, 15, 17, 17);
    star_item(3, {S(3), S(4), var}, 14, 16, -1);
    star_item(3, {S(4), S(4), var}, 13, 13, -1);
    star_item(3, {S(7), S(7), var}, 7, 7, -1);
    return ps;
}

} // namespace detail

inline const std::vector<Pattern>& patterns() {
    static const std::vector<Pattern> p = detail::make_patterns();
    return p;
}

struct Match {
    FamilyId id;
    std::vector<int> params;
    ItemCheck item;
    int pattern_index = 0;
};

namespace detail {

inline bool slot_match(const Slot& s, const RootedTree& t, const std::string& code, std::vector<int>& out) {
    switch (s.kind) {
    case Slot::Fixed:
        return code == s.code;
    case Slot::StarVar:
        if (t.depth() > 1) return false;
        out.push_back(t.order());
        return true;
    case Slot::Broom2:
    case Slot::Broom3: {
        size_t arity = s.kind == Slot::Broom2 ? 2 : 3;
        BroomSpec b;
        if (!as_broom(t, b) || b.l.size() > arity) return false;
        for (size_t i = 0; i < arity; ++i) out.push_back(b.at(i));
        return true;
    }
    }
    return false;
}

} // namespace detail

// Every (pattern, dihedral placement) that fits the graph, deduplicated.
inline std::vector<Match> all_matches(const UnicyclicDesc& d) {
    std::vector<Match> out;
    int g = d.girth;
    std::vector<std::string> codes;
    for (const auto& t : d.trees) codes.push_back(tree_code(t));
    const auto& ps = patterns();
    for (size_t pi = 0; pi < ps.size(); ++pi) {
        const Pattern& p = ps[pi];
        if (static_cast<int>(p.slots.size()) != g) continue;
        for (int refl = 0; refl < 2; ++refl)
            for (int sh = 0; sh < g; ++sh) {
                std::vector<int> raw;
                bool ok = true;
                for (int i = 0; i < g && ok; ++i) {
                    int at = ((refl ? sh - i : sh + i) % g + g) % g;
                    ok = detail::slot_match(p.slots[i], d.trees[at], codes[at], raw);
                }
                if (!ok) continue;
                Match m{p.id, p.params(raw), p.check(raw), static_cast<int>(pi)};
                bool dup = false;
                for (auto& o : out) dup = dup || (o.pattern_index == m.pattern_index && o.params == m.params);
                if (!dup) out.push_back(std::move(m));
            }
    }
    return out;
}

namespace detail {

inline void require_classifiable(const Graph& g) {
    if (!is_unicyclic(g)) throw Error(ErrorCode::NotUnicyclic, "input is not a connected unicyclic graph");
    if (g.order() < 21)
        throw Error(ErrorCode::Precondition, "n >= 21 required (got n=" + std::to_string(g.order()) + ")");
}

// satisfied items first, equality before plain membership, then catalog
// order, then smaller params
inline bool better(const Match& a, const Match& b) {
    auto rank = [](const Match& m) { return m.item.holds ? (m.item.equal ? 0 : 1) : 2; };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.pattern_index != b.pattern_index) return a.pattern_index < b.pattern_index;
    return a.params < b.params;
}

} // namespace detail

inline bool girth_prefilter(const Graph& g) {
    detail::require_classifiable(g);
    return girth_and_cycle(g).girth <= 5;
}

inline std::optional<Match> match_structure(const Graph& g) {
    detail::require_classifiable(g);
    UnicyclicDesc d = decompose_unicyclic(g);
    if (d.girth > 5) return std::nullopt;
    auto ms = all_matches(d);
    if (ms.empty()) return std::nullopt;
    return *std::min_element(ms.begin(), ms.end(), detail::better);
}

struct Verdict {
    Outcome outcome = Outcome::Below;
    Outcome structural = Outcome::Below;
    Outcome numeric = Outcome::Below;
    std::optional<FamilyId> family;
    std::vector<int> params;
    double lambda2 = 0;
    double threshold = 0;
    bool agreement = false;
    bool disputed = false;
    std::string reason;
    std::string readings;
};

inline Outcome numeric_outcome(double l2, double tol = -1) {
    if (tol < 0) tol = tolerances().identity;
    double t = threshold();
    if (std::fabs(l2 - t) <= tol) return Outcome::Equal;
    return l2 > t ? Outcome::Above : Outcome::Below;
}

inline Verdict classify(const Graph& g) {
    detail::require_classifiable(g);
    Verdict v;
    v.threshold = threshold();
    v.lambda2 = lambda2(g);
    v.numeric = numeric_outcome(v.lambda2);
    UnicyclicDesc d = decompose_unicyclic(g);
    if (d.girth > 5) {
        v.structural = Outcome::Below;
        v.reason = "girth > 5";
    } else {
        auto ms = all_matches(d);
        if (ms.empty()) {
            v.structural = Outcome::Below;
            v.reason = "no catalogued pattern";
        } else {
            const Match& m = *std::min_element(ms.begin(), ms.end(), detail::better);
            v.family = m.id;
            v.params = m.params;
            v.disputed = m.item.disputed;
            v.readings = m.item.readings;
            if (!m.item.holds) {
                v.structural = Outcome::Below;
                v.reason = "outside parameter range";
            } else {
                v.structural = m.item.equal ? Outcome::Equal : Outcome::Above;
                v.reason = "matched";
            }
        }
    }
    v.agreement = v.structural == v.numeric;
    v.outcome = v.agreement ? v.structural : v.numeric;
    return v;
}

inline std::string to_json(const Verdict& v) {
    std::string s = "{\"outcome\":\"" + std::string(to_string(v.outcome)) + "\",\"family\":";
    s += v.family ? "\"" + family_name(*v.family) + "\"" : "null";
    s += ",\"params\":[";
    for (size_t i = 0; i < v.params.size(); ++i) s += (i ? "," : "") + std::to_string(v.params[i]);
    s += "],\"lambda2\":" + fmt17(v.lambda2) + ",\"threshold\":" + fmt17(v.threshold);
    s += ",\"agreement\":" + std::string(v.agreement ? "true" : "false");
    s += ",\"structural\":\"" + std::string(to_string(v.structural)) + "\"";
    s += ",\"numeric\":\"" + std::string(to_string(v.numeric)) + "\"";
    s += ",\"reason\":\"" + json_escape(v.reason) + "\"";
    if (!v.readings.empty()) s += ",\"readings\":\"" + json_escape(v.readings) + "\"";
    s += "}";
    return s;
}

} // namespace ul2
