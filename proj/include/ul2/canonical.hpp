#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace ul2 {

namespace detail {

// Equitable refinement. Colors stay ordered consistently with the input
// coloring, so the result does not depend on vertex labels.
inline std::vector<int> refine(const Graph& g, std::vector<int> col) {
    int n = g.order();
    int classes = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{col[v]};
            std::vector<int> nb;
            for (int w : g.neighbors(v)) nb.push_back(col[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> keys;
        for (auto& p : sig) keys.push_back(p.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> nc(n);
        for (int v = 0; v < n; ++v)
            nc[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        int k = static_cast<int>(keys.size());
        col = std::move(nc);
        if (k == classes) break;
        classes = k;
    }
    return col;
}

inline std::string certificate(const Graph& g, const std::vector<int>& col) {
    int n = g.order();
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[col[v]] = v;
    std::string bits;
    bits.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bits.push_back(g.has_edge(at[i], at[j]) ? '1' : '0');
    return bits;
}

inline bool twins(const Graph& g, int u, int v) {
    std::vector<int> a, b;
    for (int w : g.neighbors(u))
        if (w != v) a.push_back(w);
    for (int w : g.neighbors(v))
        if (w != u) b.push_back(w);
    return a == b;
}

inline void search(const Graph& g, const std::vector<int>& col0, std::string& best) {
    std::vector<int> col = refine(g, col0);
    int n = g.order();
    std::vector<int> cnt(n, 0);
    for (int c : col) ++cnt[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (cnt[c] > 1 && (target < 0 || cnt[c] < cnt[target])) target = c;
    if (target < 0) {
        std::string cert = certificate(g, col);
        if (cert > best) best = std::move(cert);
        return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
        if (col[v] != target) continue;
        bool skip = false;
        for (int u : tried)
            if (twins(g, u, v)) { skip = true; break; }
        if (skip) continue;
        tried.push_back(v);
        std::vector<int> c2(n);
        for (int u = 0; u < n; ++u) c2[u] = 2 * col[u] + (u != v ? 1 : 0);
        search(g, c2, best);
    }
}

} // namespace detail

// Equal strings iff isomorphic. Certificate is the lexicographically largest
// upper-triangle adjacency string over the refinement search tree.
inline std::string canonical_form(const Graph& g) {
    int bound = tolerances().enum_bound;
    if (g.order() > bound)
        throw Error(ErrorCode::OverBound,
                    "order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
    std::string best;
    if (g.order() > 0) detail::search(g, std::vector<int>(g.order(), 0), best);
    return std::to_string(g.order()) + ":" + best;
}

} // namespace ul2
