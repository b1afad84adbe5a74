#pragma once

#include <set>
#include <string>
#include <vector>

#include "../canonical.hpp"
#include "../enumerate.hpp"
#include "../graph.hpp"
#include "report.hpp"

namespace ul2::verify {

// Canonical forms of every connected labeled graph with n vertices and n
// edges (all n-subsets of the vertex pairs). Independent of the tree-code
// enumeration.
inline std::set<std::string> labeled_unicyclic_classes(int n, std::optional<int> girth = std::nullopt) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int P = static_cast<int>(pairs.size());
    std::set<std::string> classes;
    if (n > P) return classes;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<Edge> es(n);
    while (true) {
        for (int i = 0; i < n; ++i) es[i] = pairs[idx[i]];
        Graph g = graph_from_edges(n, es);
        if (is_connected(g) && (!girth || girth_and_cycle(g).girth == *girth)) classes.insert(canonical_form(g));
        int i = n - 1;
        while (i >= 0 && idx[i] == P - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return classes;
}

inline VerifyReport verify_enumeration(int n_max, const RunOptions& opt) {
    std::vector<int> ns;
    for (int n = 3; n <= n_max; ++n) ns.push_back(n);
    return detail::run_cases("enumeration", ns, opt.jobs, [](int n, VerifyReport& r) {
        std::set<std::string> listed;
        size_t count = 0;
        UnicyclicEnumerator e(n);
        while (auto g = e.next()) {
            listed.insert(canonical_form(*g));
            ++count;
        }
        std::set<std::string> oracle = labeled_unicyclic_classes(n);
        r.check(count == listed.size(), {"n=" + std::to_string(n) + " distinct", std::to_string(count),
                                         std::to_string(listed.size()), double(count) - double(listed.size())});
        r.check(listed == oracle, {"n=" + std::to_string(n) + " classes", std::to_string(oracle.size()),
                                   std::to_string(listed.size()), double(listed.size()) - double(oracle.size())});
    });
}

} // namespace ul2::verify
