#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ul2 {

using Edge = std::pair<int, int>;

// Simple undirected graph; immutable once built.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    // edges with u < v, sorted
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool operator==(const Graph& o) const { return edges_ == o.edges_ && order() == o.order(); }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;

    friend Graph graph_from_edges(int n, const std::vector<Edge>& edges);
};

inline Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::OutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside 0.." + std::to_string(n - 1));
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.edges_.assign(seen.begin(), seen.end());
    return g;
}

inline bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
    }
    return cnt == n;
}

inline bool is_unicyclic(const Graph& g) { return g.order() >= 3 && g.size() == g.order() && is_connected(g); }

// new label of vertex v is perm[v]
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw Error(ErrorCode::SizeMismatch, "permutation length differs from order");
    std::vector<Edge> es;
    es.reserve(g.size());
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return graph_from_edges(g.order(), es);
}

inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
    std::vector<Edge> es;
    auto lab = [v](int x) { return x > v ? x - 1 : x; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) es.emplace_back(lab(a), lab(b));
    return graph_from_edges(g.order() - 1, es);
}

inline Graph delete_pendant(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
    if (g.degree(v) != 1)
        throw Error(ErrorCode::NotPendant,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    return delete_vertex(g, v);
}

// Contract uv into u, then hang v off u as a pendant. Labels are kept;
// any parallel adjacency produced by the contraction is dropped.
inline Graph separate_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    std::set<Edge> es;
    for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        int x = a == v ? u : a, y = b == v ? u : b;
        if (x == y) continue;
        es.insert({std::min(x, y), std::max(x, y)});
    }
    es.insert({std::min(u, v), std::max(u, v)});
    return graph_from_edges(g.order(), std::vector<Edge>(es.begin(), es.end()));
}

// "n m" header then m lines "u v"
inline Graph read_graph(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::Parse, "bad header, expected \"n m\"");
    std::vector<Edge> es;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw Error(ErrorCode::Parse, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (in >> extra) throw Error(ErrorCode::Parse, "trailing data after edge list");
    return graph_from_edges(static_cast<int>(n), es);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_text(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

} // namespace ul2
