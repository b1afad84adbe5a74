#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace ul2 {

struct RootedTree {
    std::vector<RootedTree> children;

    int order() const {
        int n = 1;
        for (const auto& c : children) n += c.order();
        return n;
    }
    int depth() const {
        int d = 0;
        for (const auto& c : children) d = std::max(d, 1 + c.depth());
        return d;
    }
};

inline RootedTree bare_root() { return {}; }

// star of the given order, rooted at its centre
inline RootedTree star_tree(int order) {
    if (order < 1) throw Error(ErrorCode::MalformedParams, "star order must be >= 1");
    RootedTree t;
    t.children.assign(order - 1, RootedTree{});
    return t;
}

inline RootedTree path_tree(int order) {
    if (order < 1) throw Error(ErrorCode::MalformedParams, "path order must be >= 1");
    RootedTree t;
    for (int i = 1; i < order; ++i) {
        RootedTree p;
        p.children.push_back(std::move(t));
        t = std::move(p);
    }
    return t;
}

// l[i] = number of root children carrying exactly i leaves
struct BroomSpec {
    std::vector<int> l;

    int attached() const {
        int s = 0;
        for (size_t i = 0; i < l.size(); ++i) s += static_cast<int>(i + 1) * l[i];
        return s;
    }
    int at(size_t i) const { return i < l.size() ? l[i] : 0; }
};

// children ordered by leaf count, smallest first
inline RootedTree broom_tree(const BroomSpec& spec) {
    RootedTree t;
    for (size_t i = 0; i < spec.l.size(); ++i) {
        if (spec.l[i] < 0) throw Error(ErrorCode::MalformedParams, "negative broom count");
        for (int k = 0; k < spec.l[i]; ++k) t.children.push_back(star_tree(static_cast<int>(i) + 1));
    }
    return t;
}

// AHU code: "(" + sorted child codes + ")"
inline std::string tree_code(const RootedTree& t) {
    std::vector<std::string> cs;
    cs.reserve(t.children.size());
    for (const auto& c : t.children) cs.push_back(tree_code(c));
    std::sort(cs.begin(), cs.end());
    std::string s = "(";
    for (auto& c : cs) s += c;
    s += ")";
    return s;
}

inline RootedTree tree_from_code(const std::string& code) {
    size_t pos = 0;
    auto rec = [&](auto&& self) -> RootedTree {
        if (pos >= code.size() || code[pos] != '(') throw Error(ErrorCode::Parse, "bad tree code");
        ++pos;
        RootedTree t;
        while (pos < code.size() && code[pos] == '(') t.children.push_back(self(self));
        if (pos >= code.size() || code[pos] != ')') throw Error(ErrorCode::Parse, "bad tree code");
        ++pos;
        return t;
    };
    RootedTree t = rec(rec);
    if (pos != code.size()) throw Error(ErrorCode::Parse, "trailing characters in tree code");
    return t;
}

// children sorted by code, so equal trees compare equal structurally
inline RootedTree normalize(const RootedTree& t) {
    RootedTree r;
    for (const auto& c : t.children) r.children.push_back(normalize(c));
    std::sort(r.children.begin(), r.children.end(),
              [](const RootedTree& a, const RootedTree& b) { return tree_code(a) < tree_code(b); });
    return r;
}

// If t has depth <= 2, return its broom counts.
inline bool as_broom(const RootedTree& t, BroomSpec& out) {
    if (t.depth() > 2) return false;
    out.l.clear();
    for (const auto& c : t.children) {
        size_t k = c.children.size();
        if (out.l.size() <= k) out.l.resize(k + 1, 0);
        ++out.l[k];
    }
    return true;
}

// All rooted trees of each order 1..max_order, as sorted AHU codes.
inline std::vector<std::vector<std::string>> rooted_tree_codes(int max_order) {
    std::vector<std::vector<std::string>> by(max_order + 1);
    if (max_order >= 1) by[1] = {"()"};
    for (int n = 2; n <= max_order; ++n) {
        // multisets of subtrees with total order n-1, drawn in nondecreasing (order, index)
        std::vector<std::string> out;
        std::vector<std::string> cur;
        auto rec = [&](auto&& self, int remaining, int min_ord, size_t min_idx) -> void {
            if (remaining == 0) {
                std::vector<std::string> cs = cur;
                std::sort(cs.begin(), cs.end());
                std::string s = "(";
                for (auto& c : cs) s += c;
                out.push_back(s + ")");
                return;
            }
            for (int o = min_ord; o <= remaining; ++o) {
                for (size_t i = (o == min_ord ? min_idx : 0); i < by[o].size(); ++i) {
                    cur.push_back(by[o][i]);
                    self(self, remaining - o, o, i);
                    cur.pop_back();
                }
            }
        };
        rec(rec, n - 1, 1, 0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        by[n] = std::move(out);
    }
    return by;
}

} // namespace ul2
