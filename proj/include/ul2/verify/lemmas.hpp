#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "../config.hpp"
#include "../enumerate.hpp"
#include "../graph.hpp"
#include "../jacobi.hpp"
#include "../laplacian.hpp"
#include "../random.hpp"
#include "../unicyclic.hpp"
#include "report.hpp"

namespace ul2::verify {

inline std::string describe(const Graph& g) {
    std::string s = "n=" + std::to_string(g.order()) + " edges=";
    for (size_t i = 0; i < g.edges().size(); ++i)
        s += (i ? " " : "") + std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
    return s;
}

inline std::string describe(const UnicyclicDesc& d) {
    std::string s = "C" + std::to_string(d.girth) + "(";
    for (size_t i = 0; i < d.trees.size(); ++i) s += (i ? "," : "") + tree_code(d.trees[i]);
    return s + ")";
}

namespace detail {

// sizes of the two sides when edge uv is removed from a tree-like part;
// returns 0 for the u side if uv lies on a cycle
inline int side_size(const Graph& g, int u, int v) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> st{u};
    seen[u] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int w : g.neighbors(x)) {
            if ((x == u && w == v) || seen[w]) continue;
            if (w == v) return 0; // reached v another way
            seen[w] = 1;
            ++cnt;
            st.push_back(w);
        }
    }
    return cnt;
}

} // namespace detail

// Cauchy interlacing for every vertex-deleted principal submatrix
inline VerifyReport verify_interlacing(int samples, int n_max, const RunOptions& opt) {
    Rng rng(opt.seed ^ 0x11);
    std::vector<Graph> gs;
    for (int i = 0; i < samples; ++i) gs.push_back(random_connected_graph(rng, uniform(rng, 2, n_max)));
    double tol = tolerances().identity;
    return detail::run_cases("interlacing", gs, opt.jobs, [tol](const Graph& g, VerifyReport& r) {
        SymMatrix L = normalized_laplacian(g);
        Spectrum outer = eigenvalues_sym(L);
        for (int v = 0; v < g.order(); ++v) {
            Spectrum inner = eigenvalues_sym(principal_submatrix(L, v));
            r.check(check_interlacing(outer, inner, tol),
                    {describe(g) + " v=" + std::to_string(v), "interlaced", "violated", 0});
        }
    });
}

inline VerifyReport verify_interlacing_exhaustive(int n_max, const RunOptions& opt) {
    std::vector<Graph> gs;
    for (int n = 3; n <= n_max; ++n)
        for (auto& g : enumerate_unicyclic(n)) gs.push_back(std::move(g));
    double tol = tolerances().identity;
    return detail::run_cases("interlacing-exhaustive", gs, opt.jobs, [tol](const Graph& g, VerifyReport& r) {
        SymMatrix L = normalized_laplacian(g);
        Spectrum outer = eigenvalues_sym(L);
        for (int v = 0; v < g.order(); ++v)
            r.check(check_interlacing(outer, eigenvalues_sym(principal_submatrix(L, v)), tol),
                    {describe(g) + " v=" + std::to_string(v), "interlaced", "violated", 0});
    });
}

// lambda2(G) <= lambda2(G - v) for pendant v
inline VerifyReport verify_lemma2(int samples, int n_lo, int n_hi, const RunOptions& opt) {
    Rng rng(opt.seed ^ 0x22);
    std::vector<Graph> gs;
    for (int i = 0; i < samples; ++i)
        gs.push_back(realize_unicyclic(random_unicyclic_desc(rng, n_lo, n_hi, 3, n_hi)));
    double tol = tolerances().identity;
    return detail::run_cases("lemma2", gs, opt.jobs, [tol](const Graph& g, VerifyReport& r) {
        double base = lambda2(g);
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 1) continue;
            double del = lambda2(delete_pendant(g, v));
            r.check(base <= del + tol, {describe(g) + " pendant=" + std::to_string(v), "<= " + fmt17(del),
                                        fmt17(base), base - del});
        }
    });
}

// lambda2(G) <= lambda2(G') after separating a cut edge with both sides >= 2
inline VerifyReport verify_lemma3(int samples, int n_lo, int n_hi, const RunOptions& opt) {
    Rng rng(opt.seed ^ 0x33);
    std::vector<Graph> gs;
    for (int i = 0; i < samples; ++i) {
        if (i % 2 == 0)
            gs.push_back(random_tree(rng, uniform(rng, n_lo, n_hi)));
        else
            gs.push_back(realize_unicyclic(random_unicyclic_desc(rng, n_lo, n_hi, 3, n_hi)));
    }
    double tol = tolerances().identity;
    return detail::run_cases("lemma3", gs, opt.jobs, [tol](const Graph& g, VerifyReport& r) {
        double base = lambda2(g);
        for (auto [u, v] : g.edges()) {
            int su = detail::side_size(g, u, v);
            if (su == 0) continue; // cycle edge
            int sv = g.order() - su;
            if (su < 2 || sv < 2) continue;
            for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
                double sep = lambda2(separate_edge(g, a, b));
                r.check(base <= sep + tol, {describe(g) + " separate=" + std::to_string(a) + "," + std::to_string(b),
                                            "<= " + fmt17(sep), fmt17(base), base - sep});
            }
        }
    });
}

inline VerifyReport verify_lemma4(int n_lo, int n_hi, const RunOptions& opt) {
    std::vector<int> ns;
    for (int n = n_lo; n <= n_hi; ++n) ns.push_back(n);
    return detail::run_cases("lemma4", ns, opt.jobs, [](int n, VerifyReport& r) {
        double num = lambda2(cycle_graph(n)), cf = cycle_lambda2_closed_form(n);
        r.check(std::fabs(num - cf) <= 1e-10, {"C" + std::to_string(n), fmt17(cf), fmt17(num), num - cf});
    });
}

namespace detail {

inline void lemma5_case(const UnicyclicDesc& d, VerifyReport& r) {
    std::vector<int> orders;
    for (const auto& t : d.trees) orders.push_back(t.order());
    double l = lambda2(realize_unicyclic(d));
    double s = lambda2(star_composition(d.girth, orders));
    r.check(l <= s + tolerances().identity, {describe(d), "<= " + fmt17(s), fmt17(l), l - s});
}

} // namespace detail

// lambda2(U) <= lambda2(S_g(orders of the attached trees))
inline VerifyReport verify_lemma5(int samples, int n_lo, int n_hi, const RunOptions& opt) {
    Rng rng(opt.seed ^ 0x55);
    std::vector<UnicyclicDesc> ds;
    for (int i = 0; i < samples; ++i) ds.push_back(random_unicyclic_desc(rng, n_lo, n_hi, 3, n_hi));
    return detail::run_cases("lemma5", ds, opt.jobs, detail::lemma5_case);
}

inline VerifyReport verify_lemma5_exhaustive(int n_max, const RunOptions& opt) {
    std::vector<UnicyclicDesc> ds;
    for (int n = 3; n <= n_max; ++n) {
        UnicyclicEnumerator e(n);
        while (auto d = e.next_desc()) ds.push_back(std::move(*d));
    }
    return detail::run_cases("lemma5-exhaustive", ds, opt.jobs, detail::lemma5_case);
}

// girth >= 6 and n >= 21 forces lambda2 < t
inline VerifyReport verify_lemma6(int samples, const RunOptions& opt) {
    Rng rng(opt.seed ^ 0x66);
    std::vector<UnicyclicDesc> ds;
    for (int i = 0; i < samples; ++i) ds.push_back(random_unicyclic_desc(rng, 21, 30, 6, 21));
    double t = threshold();
    return detail::run_cases("lemma6", ds, opt.jobs, [t](const UnicyclicDesc& d, VerifyReport& r) {
        double l = lambda2(realize_unicyclic(d));
        r.check(l < t, {describe(d), "< " + fmt17(t), fmt17(l), l - t});
    });
}

} // namespace ul2::verify
