// Independent brute-force reference implementations. These deliberately avoid
// the library's solvers: raw odometer enumeration for colorings and pairwise
// vertex-bijection checks for isomorphism, so they can serve as oracles.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mp/multipole.hpp"

namespace oracle {

// All canonical state strings of `m`, via exhaustive assignment of colors to
// every edge instance and semiedge (3^(edges+semiedges) candidates).
inline std::set<std::string> states(const mp::Multipole& mp_) {
    int ne = static_cast<int>(mp_.edges.size());
    int ms = mp_.m();
    int total = ne + ms;
    std::vector<int> color(total, 0);  // 0..2
    std::set<std::string> result;
    auto proper = [&]() {
        for (int v = 0; v < mp_.vertex_count; ++v) {
            std::vector<int> at;
            for (int e = 0; e < ne; ++e) {
                if (mp_.edges[e].u == v) at.push_back(color[e]);
                if (mp_.edges[e].v == v) at.push_back(color[e]);
            }
            for (int s = 0; s < ms; ++s)
                if (mp_.semiedges[s].kind == mp::SemiKind::Attached &&
                    mp_.semiedges[s].ref == v)
                    at.push_back(color[ne + s]);
            if (at.size() != 3) return false;
            if (at[0] == at[1] || at[0] == at[2] || at[1] == at[2]) return false;
        }
        for (int s = 0; s < ms; ++s)
            if (mp_.semiedges[s].kind == mp::SemiKind::FreePaired &&
                color[ne + s] != color[ne + mp_.semiedges[s].ref])
                return false;
        return true;
    };
    auto canonical = [&]() {
        std::string out;
        int map[3] = {0, 0, 0};
        int next = 1;
        for (int s = 0; s < ms; ++s) {
            int c = color[ne + s];
            if (map[c] == 0) map[c] = next++;
            out += static_cast<char>('0' + map[c]);
        }
        return out;
    };
    while (true) {
        if (proper()) result.insert(canonical());
        int i = 0;
        while (i < total && color[i] == 2) color[i++] = 0;
        if (i == total) break;
        ++color[i];
    }
    return result;
}

// Isomorphism respecting nothing about semiedge order: try every vertex
// bijection, compare edge multisets and per-vertex attachment counts plus the
// free-edge count.
inline bool isomorphic(const mp::Multipole& a, const mp::Multipole& b) {
    if (a.n() != b.n() || a.m() != b.m() || a.edges.size() != b.edges.size())
        return false;
    auto attach_counts = [](const mp::Multipole& x) {
        std::vector<int> c(x.vertex_count, 0);
        int free_halves = 0;
        for (const auto& s : x.semiedges) {
            if (s.kind == mp::SemiKind::Attached) ++c[s.ref];
            else ++free_halves;
        }
        return std::pair{c, free_halves};
    };
    auto [ca, fa] = attach_counts(a);
    auto [cb, fb] = attach_counts(b);
    if (fa != fb) return false;
    std::vector<int> perm(a.vertex_count);
    for (int i = 0; i < a.vertex_count; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int v = 0; v < a.vertex_count && ok; ++v)
            if (ca[v] != cb[perm[v]]) ok = false;
        if (ok) {
            std::vector<mp::Edge> mapped;
            for (const auto& e : a.edges) mapped.emplace_back(perm[e.u], perm[e.v]);
            std::sort(mapped.begin(), mapped.end());
            auto sorted_b = b.edges;
            std::sort(sorted_b.begin(), sorted_b.end());
            if (mapped == sorted_b) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Number of isomorphism classes of valid multipoles with the given (m, n):
// labeled enumeration over edge multiplicities and attachment distributions,
// deduplicated with the pairwise check above. Excludes loops and components
// without semiedges. Feasible only for tiny n.
inline int catalog_count(int m, int n, bool connected_only = false,
                         bool colorable_only = false);

namespace detail {

inline bool semiedge_free_component(const mp::Multipole& x) {
    auto parts = mp::components(x);
    int with_semi = 0;
    for (auto [pn, pm] : parts.parts)
        if (pm > 0) ++with_semi;
    return with_semi != parts.component_count;
}

}  // namespace detail

inline int catalog_count(int m, int n, bool connected_only, bool colorable_only) {
    std::vector<mp::Multipole> reps;
    // free edges: f pairs of semiedges, 2f <= m
    for (int f = 0; 2 * f <= m; ++f) {
        int attached = m - 2 * f;
        if (n == 0 && attached > 0) continue;
        // distribute `attached` semiedges over n labeled vertices, 0..3 each
        std::vector<int> counts(std::max(n, 1), 0);
        std::vector<int> stack;
        auto rec_vertex = [&](auto&& self, int v, int left) -> void {
            if (v == n) {
                if (left != 0) return;
                // residual degrees to cover with edges
                std::vector<int> need(n);
                for (int i = 0; i < n; ++i) need[i] = 3 - counts[i];
                // enumerate multiplicities for each pair
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
                std::vector<int> mult(pairs.size(), 0);
                auto rec_edge = [&](auto&& eself, size_t idx) -> void {
                    if (idx == pairs.size()) {
                        for (int i = 0; i < n; ++i)
                            if (need[i] != 0) return;
                        mp::Multipole cand;
                        cand.vertex_count = n;
                        for (size_t p = 0; p < pairs.size(); ++p)
                            for (int k = 0; k < mult[p]; ++k)
                                cand.edges.emplace_back(pairs[p].first, pairs[p].second);
                        for (int v2 = 0; v2 < n; ++v2)
                            for (int k = 0; k < counts[v2]; ++k)
                                cand.semiedges.push_back(mp::Semiedge::attached(v2));
                        for (int k = 0; k < f; ++k) {
                            int base = cand.m();
                            cand.semiedges.push_back(mp::Semiedge::free_paired(base + 1));
                            cand.semiedges.push_back(mp::Semiedge::free_paired(base));
                        }
                        if (!mp::validate(cand).empty()) return;
                        if (detail::semiedge_free_component(cand)) return;
                        if (connected_only && !mp::is_connected(cand)) return;
                        if (colorable_only && oracle::states(cand).empty()) return;
                        for (const auto& r : reps)
                            if (isomorphic(r, cand)) return;
                        reps.push_back(cand);
                        return;
                    }
                    auto [i, j] = pairs[idx];
                    int cap = std::min({2, need[i], need[j]});
                    for (int k = 0; k <= cap; ++k) {
                        mult[idx] = k;
                        need[i] -= k;
                        need[j] -= k;
                        eself(eself, idx + 1);
                        need[i] += k;
                        need[j] += k;
                    }
                    mult[idx] = 0;
                };
                rec_edge(rec_edge, 0);
                return;
            }
            for (int c = 0; c <= std::min(3, left); ++c) {
                counts[v] = c;
                self(self, v + 1, left - c);
            }
            counts[v] = 0;
        };
        rec_vertex(rec_vertex, 0, attached);
    }
    return static_cast<int>(reps.size());
}

}  // namespace oracle
