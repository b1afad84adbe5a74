#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"
#include "rooted_tree.hpp"
#include "unicyclic.hpp"

namespace ul2 {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random recursive attachment: each new vertex picks a uniform parent among
// the vertices already placed.
inline UnicyclicDesc random_unicyclic_desc(Rng& rng, int n, int girth) {
    std::vector<int> parent(n, -1), root(n);
    for (int i = 0; i < girth; ++i) root[i] = i;
    for (int v = girth; v < n; ++v) {
        parent[v] = uniform(rng, 0, v - 1);
        root[v] = root[parent[v]];
    }
    std::vector<std::vector<int>> kids(n);
    for (int v = girth; v < n; ++v) kids[parent[v]].push_back(v);
    auto build = [&](auto&& self, int v) -> RootedTree {
        RootedTree t;
        for (int c : kids[v]) t.children.push_back(self(self, c));
        return t;
    };
    UnicyclicDesc d{girth, {}};
    for (int i = 0; i < girth; ++i) d.trees.push_back(build(build, i));
    return d;
}

inline UnicyclicDesc random_unicyclic_desc(Rng& rng, int n_lo, int n_hi, int g_lo, int g_hi) {
    int n = uniform(rng, n_lo, n_hi);
    int g = uniform(rng, g_lo, std::min(g_hi, n));
    return random_unicyclic_desc(rng, n, g);
}

// shuffle labels so tests do not depend on the construction order
inline Graph shuffle_labels(Rng& rng, const Graph& g) {
    std::vector<int> p(g.order());
    for (int i = 0; i < g.order(); ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return relabel(g, p);
}

inline Graph random_tree(Rng& rng, int n) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(uniform(rng, 0, v - 1), v);
    return shuffle_labels(rng, graph_from_edges(n, es));
}

// random tree plus up to n extra edges
inline Graph random_connected_graph(Rng& rng, int n) {
    std::set<Edge> es;
    for (int v = 1; v < n; ++v) es.insert({uniform(rng, 0, v - 1), v});
    int max_edges = n * (n - 1) / 2;
    int extra = std::min(uniform(rng, 0, n), max_edges - (n - 1));
    while (extra > 0) {
        int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
        if (a == b) continue;
        if (es.insert({std::min(a, b), std::max(a, b)}).second) --extra;
    }
    return shuffle_labels(rng, graph_from_edges(n, std::vector<Edge>(es.begin(), es.end())));
}

} // namespace ul2
