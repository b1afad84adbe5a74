#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rooted_tree.hpp"
#include "unicyclic.hpp"

namespace ul2 {

// Pull stream over isomorphism classes of connected unicyclic graphs of
// order n. A cyclic sequence of tree codes is emitted only when it is its
// own dihedral minimum, so no class is produced twice.
class UnicyclicEnumerator {
public:
    explicit UnicyclicEnumerator(int n, std::optional<int> girth = std::nullopt) : n_(n) {
        int bound = tolerances().enum_bound;
        if (n < 3) throw Error(ErrorCode::Precondition, "order must be >= 3");
        if (n > bound)
            throw Error(ErrorCode::OverBound,
                        "order " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
        if (girth && (*girth < 3 || *girth > n)) {
            done_ = true;
            return;
        }
        g_lo_ = girth ? *girth : 3;
        g_hi_ = girth ? *girth : n;
        codes_ = rooted_tree_codes(n);
        g_ = g_lo_;
        start_girth();
    }

    std::optional<Graph> next() {
        std::optional<UnicyclicDesc> d = next_desc();
        if (!d) return std::nullopt;
        return realize_unicyclic(*d);
    }

    std::optional<UnicyclicDesc> next_desc() {
        while (!done_) {
            std::vector<std::string> seq(g_);
            for (int i = 0; i < g_; ++i) seq[i] = codes_[parts_[i]][idx_[i]];
            bool emit = dihedral_min(seq).codes == seq;
            advance();
            if (emit) {
                UnicyclicDesc d{static_cast<int>(seq.size()), {}};
                for (auto& c : seq) d.trees.push_back(tree_from_code(c));
                return d;
            }
        }
        return std::nullopt;
    }

private:
    int n_;
    int g_lo_ = 3, g_hi_ = 3, g_ = 3;
    bool done_ = false;
    std::vector<std::vector<std::string>> codes_;
    std::vector<int> parts_, idx_;

    void start_girth() {
        parts_.assign(g_, 1);
        parts_[g_ - 1] = n_ - g_ + 1;
        idx_.assign(g_, 0);
    }

    bool next_composition() {
        // rightmost position that can grow while leaving >= 1 per later part
        int tail = parts_[g_ - 1];
        for (int i = g_ - 2; i >= 0; --i) {
            if (tail > g_ - 1 - i) {
                ++parts_[i];
                int s = 0;
                for (int j = i + 1; j < g_ - 1; ++j) parts_[j] = 1;
                for (int j = 0; j < g_ - 1; ++j) s += parts_[j];
                parts_[g_ - 1] = n_ - s;
                return true;
            }
            tail += parts_[i];
        }
        return false;
    }

    void advance() {
        for (int i = g_ - 1; i >= 0; --i) {
            if (++idx_[i] < static_cast<int>(codes_[parts_[i]].size())) return;
            idx_[i] = 0;
        }
        if (next_composition()) return;
        if (++g_ > g_hi_) {
            done_ = true;
            return;
        }
        start_girth();
    }
};

inline std::vector<Graph> enumerate_unicyclic(int n, std::optional<int> girth = std::nullopt) {
    UnicyclicEnumerator e(n, girth);
    std::vector<Graph> out;
    while (auto g = e.next()) out.push_back(std::move(*g));
    return out;
}

} // namespace ul2
