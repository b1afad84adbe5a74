#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "rooted_tree.hpp"

namespace ul2 {

struct UnicyclicDesc {
    int girth = 0;
    std::vector<RootedTree> trees;

    int order() const {
        int n = 0;
        for (const auto& t : trees) n += t.order();
        return n;
    }
};

inline Graph realize_unicyclic(const UnicyclicDesc& d) {
    if (d.girth < 3) throw Error(ErrorCode::GirthTooSmall, "girth " + std::to_string(d.girth) + " < 3");
    if (static_cast<int>(d.trees.size()) != d.girth)
        throw Error(ErrorCode::MalformedParams, "need one tree per cycle vertex");
    std::vector<Edge> es;
    int g = d.girth;
    for (int i = 0; i < g; ++i) es.emplace_back(i, (i + 1) % g);
    int next = g;
    auto attach = [&](auto&& self, const RootedTree& t, int at) -> void {
        for (const auto& c : t.children) {
            int v = next++;
            es.emplace_back(at, v);
            self(self, c, v);
        }
    };
    for (int i = 0; i < g; ++i) attach(attach, d.trees[i], i);
    return graph_from_edges(next, es);
}

inline Graph star_composition(int g, const std::vector<int>& sizes) {
    if (g < 3) throw Error(ErrorCode::GirthTooSmall, "girth " + std::to_string(g) + " < 3");
    if (static_cast<int>(sizes.size()) != g)
        throw Error(ErrorCode::MalformedParams, "expected " + std::to_string(g) + " sizes");
    UnicyclicDesc d{g, {}};
    for (int s : sizes) d.trees.push_back(star_tree(s));
    return realize_unicyclic(d);
}

inline Graph cycle_graph(int n) { return star_composition(n, std::vector<int>(std::max(n, 0), 1)); }

struct CycleInfo {
    int girth = 0;
    std::vector<int> cycle;
};

inline CycleInfo girth_and_cycle(const Graph& g) {
    int n = g.order();
    if (n < 3 || g.size() != n || !is_connected(g))
        throw Error(ErrorCode::NotUnicyclic, "graph with n=" + std::to_string(n) + ", m=" +
                                                 std::to_string(g.size()) + " is not connected unicyclic");
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        int v = leaves.back();
        leaves.pop_back();
        gone[v] = 1;
        for (int w : g.neighbors(v))
            if (!gone[w] && --deg[w] == 1) leaves.push_back(w);
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) { start = v; break; }
    CycleInfo ci;
    int prev = -1, cur = start;
    do {
        ci.cycle.push_back(cur);
        int nxt = -1;
        for (int w : g.neighbors(cur)) // sorted, so first unvisited candidate is smallest
            if (!gone[w] && w != prev) { nxt = w; break; }
        prev = cur;
        cur = nxt;
    } while (cur != start);
    ci.girth = static_cast<int>(ci.cycle.size());
    return ci;
}

struct DihedralMin {
    std::vector<std::string> codes;
    int shift = 0;
    bool reflected = false;
};

// index i of the result is original position (shift + i) or (shift - i), mod g
inline DihedralMin dihedral_min(const std::vector<std::string>& codes) {
    int g = static_cast<int>(codes.size());
    DihedralMin best;
    bool have = false;
    std::vector<std::string> cand(g);
    for (int refl = 0; refl < 2; ++refl)
        for (int s = 0; s < g; ++s) {
            for (int i = 0; i < g; ++i) cand[i] = codes[((refl ? s - i : s + i) % g + g) % g];
            if (!have || cand < best.codes) {
                best.codes = cand;
                best.shift = s;
                best.reflected = refl;
                have = true;
            }
        }
    return best;
}

inline std::string unicyclic_key(const std::vector<std::string>& codes) {
    std::string k;
    for (auto& c : dihedral_min(codes).codes) k += c + "|";
    return k;
}

inline UnicyclicDesc decompose_unicyclic(const Graph& g) {
    CycleInfo ci = girth_and_cycle(g);
    int n = g.order();
    std::vector<char> on_cycle(n, 0);
    for (int v : ci.cycle) on_cycle[v] = 1;
    auto build = [&](auto&& self, int v, int parent) -> RootedTree {
        RootedTree t;
        for (int w : g.neighbors(v))
            if (w != parent && !on_cycle[w]) t.children.push_back(self(self, w, v));
        return t;
    };
    std::vector<RootedTree> raw;
    std::vector<std::string> codes;
    for (int v : ci.cycle) {
        raw.push_back(normalize(build(build, v, -1)));
        codes.push_back(tree_code(raw.back()));
    }
    DihedralMin dm = dihedral_min(codes);
    UnicyclicDesc d{ci.girth, {}};
    int gg = ci.girth;
    for (int i = 0; i < gg; ++i) {
        int p = ((dm.reflected ? dm.shift - i : dm.shift + i) % gg + gg) % gg;
        d.trees.push_back(raw[p]);
    }
    return d;
}

inline std::string desc_key(const UnicyclicDesc& d) {
    std::vector<std::string> codes;
    for (const auto& t : d.trees) codes.push_back(tree_code(t));
    return unicyclic_key(codes);
}

} // namespace ul2
