#pragma once

// Test-only brute-force oracles, kept independent of the shipped engines.

#include "purepairs/graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace purepairs::testing {

// Enumerates every |H|-subset of G and every bijection onto it.
inline std::vector<std::vector<int>> naive_all_copies(const Graph& h, const Graph& g) {
    std::vector<std::vector<int>> found;
    int hn = h.size(), gn = g.size();
    if (hn > gn) return found;
    std::vector<int> pick(size_t(hn), 0);
    std::vector<int> gv(size_t(gn), 0);
    for (int i = 0; i < gn; ++i) gv[size_t(i)] = i;
    std::vector<bool> sel(size_t(gn), false);
    std::fill(sel.end() - hn, sel.end(), true);
    do {
        std::vector<int> subset;
        for (int i = 0; i < gn; ++i)
            if (sel[size_t(i)]) subset.push_back(i);
        std::sort(subset.begin(), subset.end());
        do {
            bool ok = true;
            for (int i = 0; i < hn && ok; ++i)
                for (int j = i + 1; j < hn && ok; ++j)
                    if (h.adjacent(i, j) != g.adjacent(subset[size_t(i)], subset[size_t(j)]))
                        ok = false;
            if (ok) found.push_back(subset);
        } while (std::next_permutation(subset.begin(), subset.end()));
    } while (std::next_permutation(sel.begin(), sel.end()));
    return found;
}

inline bool naive_has_copy(const Graph& h, const Graph& g) {
    return !naive_all_copies(h, g).empty();
}

// chi by trying every assignment of k colours, k ascending (n <= 8 sane).
inline int naive_chromatic(const Graph& g) {
    int n = g.size();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(size_t(n), 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (col[size_t(u)] == col[size_t(v)]) proper = false;
            if (proper) return k;
            int i = 0;
            while (i < n) {
                if (++col[size_t(i)] < k) break;
                col[size_t(i)] = 0;
                ++i;
            }
            if (i == n) break;
        }
    }
    return n;
}

}  // namespace purepairs::testing
